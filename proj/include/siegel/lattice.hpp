#pragma once

// Fourier index lattice for the discriminant-6 group: an index is an integer
// triple [x, y, z]; x is the grade.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace siegel {

struct EtaIndex {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;

  constexpr bool is_zero() const { return x == 0 && y == 0 && z == 0; }
  constexpr std::int64_t grade() const { return x; }

  friend constexpr EtaIndex operator+(EtaIndex a, EtaIndex b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr EtaIndex operator-(EtaIndex a, EtaIndex b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr EtaIndex operator*(std::int64_t n, EtaIndex a) {
    return {n * a.x, n * a.y, n * a.z};
  }
  friend constexpr bool operator==(EtaIndex, EtaIndex) = default;
};

std::string to_string(EtaIndex eta);
std::ostream& operator<<(std::ostream& os, EtaIndex eta);

struct EtaIndexHash {
  std::size_t operator()(EtaIndex e) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(e.x);
    h = h * 1000003u ^ std::hash<std::int64_t>{}(e.y);
    h = h * 1000003u ^ std::hash<std::int64_t>{}(e.z);
    return h;
  }
};

/// m = -(5x^2 + 5y^2 + 24z^2 - 2xy + 24zx).
constexpr std::int64_t norm_m(EtaIndex e) {
  return -(5 * e.x * e.x + 5 * e.y * e.y + 24 * e.z * e.z - 2 * e.x * e.y + 24 * e.z * e.x);
}

/// Cone membership: x > 0 and m > 0.
constexpr bool is_positive(EtaIndex e) { return e.x > 0 && norm_m(e) > 0; }

/// Canonical order (x, m, y, z). The zero index sorts first.
struct CanonicalLess {
  bool operator()(EtaIndex a, EtaIndex b) const {
    return std::tuple(a.x, norm_m(a), a.y, a.z) < std::tuple(b.x, norm_m(b), b.y, b.z);
  }
};

/// All positive indices of grade exactly x, ordered by (m, y, z).
std::vector<EtaIndex> layer(std::int64_t x);

/// Union of layer(1..max_grade) in canonical order.
std::vector<EtaIndex> enumerate_cone(std::int64_t max_grade);

/// Ordered pairs (a, b) with a + b = eta, each zero or positive.
/// Requires eta zero or positive.
std::vector<std::pair<EtaIndex, EtaIndex>> decompositions(EtaIndex eta);

struct QuadInvariants {
  std::int64_t content;       // a: gcd(|x|, |y|, |z|)
  std::int64_t discriminant;  // d: negative fundamental discriminant
  std::int64_t conductor;     // f
  bool operator==(const QuadInvariants&) const = default;
};

/// (a, d, f) with d f^2 = -m / a^2. Throws std::invalid_argument for
/// non-positive indices, std::logic_error if -m/a^2 is not a discriminant.
QuadInvariants quad_invariants(EtaIndex eta);

}  // namespace siegel
