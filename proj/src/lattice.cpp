#include "siegel/lattice.hpp"

#include "siegel/exactnum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace siegel {

namespace {

std::int64_t isqrt_floor(std::int64_t n) {
  if (n <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Floor and ceiling division for a positive divisor.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

}  // namespace

std::string to_string(EtaIndex eta) {
  std::ostringstream os;
  os << eta;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, EtaIndex eta) {
  return os << '[' << eta.x << ',' << eta.y << ',' << eta.z << ']';
}

std::vector<EtaIndex> layer(std::int64_t x) {
  std::vector<EtaIndex> out;
  if (x < 1) return out;
  // Positivity forces 5z^2 + 5xz + x^2 < 0, which puts z in (-x, 0).
  for (std::int64_t z = -x + 1; z < 0; ++z) {
    if (5 * z * z + 5 * x * z + x * x >= 0) continue;
    // 5y^2 - 2xy + c < 0 with c = 5x^2 + 24z^2 + 24zx; roots (x +- sqrt(x^2 - 5c)) / 5.
    const std::int64_t c = 5 * x * x + 24 * z * z + 24 * z * x;
    const std::int64_t disc = x * x - 5 * c;
    if (disc <= 0) continue;
    const std::int64_t s = isqrt_floor(disc);
    const std::int64_t lo = floor_div(x - s - 1, 5);
    const std::int64_t hi = floor_div(x + s + 1, 5) + 1;
    for (std::int64_t y = lo; y <= hi; ++y) {
      const EtaIndex e{x, y, z};
      if (norm_m(e) > 0) out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<EtaIndex> enumerate_cone(std::int64_t max_grade) {
  std::vector<EtaIndex> out;
  for (std::int64_t x = 1; x <= max_grade; ++x) {
    auto slice = layer(x);
    out.insert(out.end(), slice.begin(), slice.end());
  }
  return out;
}

std::vector<std::pair<EtaIndex, EtaIndex>> decompositions(EtaIndex eta) {
  if (!eta.is_zero() && !is_positive(eta))
    throw std::invalid_argument("decompositions: index is neither zero nor positive: " + to_string(eta));
  std::vector<std::pair<EtaIndex, EtaIndex>> out;
  out.emplace_back(EtaIndex{}, eta);
  if (eta.is_zero()) return out;
  for (std::int64_t x = 1; x < eta.x; ++x) {
    for (const EtaIndex& a : layer(x)) {
      if (is_positive(eta - a)) out.emplace_back(a, eta - a);
    }
  }
  out.emplace_back(eta, EtaIndex{});
  return out;
}

QuadInvariants quad_invariants(EtaIndex eta) {
  if (!is_positive(eta))
    throw std::invalid_argument("quad_invariants: index not in the cone: " + to_string(eta));
  const std::int64_t a = std::gcd(std::gcd(std::abs(eta.x), std::abs(eta.y)), std::abs(eta.z));
  const std::int64_t m = norm_m(eta);
  if (m % (a * a) != 0)
    throw std::logic_error("quad_invariants: m not divisible by content squared at " + to_string(eta));
  const std::int64_t n = -m / (a * a);
  const std::int64_t r = ((n % 4) + 4) % 4;
  if (r != 0 && r != 1)
    throw std::logic_error("quad_invariants: -m/a^2 is not a discriminant at " + to_string(eta));
  const auto split = fundamental_discriminant_split(n);
  return {a, split.discriminant, split.conductor};
}

}  // namespace siegel
