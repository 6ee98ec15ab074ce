#pragma once

// The commands behind the command-line tool, callable in-process.

#include "siegel/expansion_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace siegel {

struct CommonOptions {
  std::optional<std::string> cache_dir;
  std::optional<std::string> fixtures;
  /// "FORM@x,y,z": add 1 to that coefficient of a generator before use.
  std::vector<std::string> perturb;
};

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Exit codes: 0 success, 1 a verification failed, 2 bad arguments.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kDefaultPrec = 12;

CommandResult cmd_expand(const CommonOptions& common, const std::string& form, int prec, const std::string& format);

/// suite: tables | relations | structure | dims
CommandResult cmd_verify(const CommonOptions& common, const std::string& suite, int prec);

CommandResult cmd_dims(int p, int k_from, int k_to, const std::string& format);

/// Full argument parsing and dispatch; argv[0] is the program name.
CommandResult run_cli(int argc, const char* const* argv);

}  // namespace siegel
