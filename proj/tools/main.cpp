#include "siegel/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  const auto result = siegel::run_cli(argc, argv);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
