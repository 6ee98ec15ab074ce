#include "siegel/dims.hpp"

#include "siegel/exactnum.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace siegel {

int periodic_selector(std::span<const int> values, std::int64_t k) {
  if (values.empty()) throw std::invalid_argument("periodic_selector: empty period");
  const auto m = static_cast<std::int64_t>(values.size());
  return values[static_cast<std::size_t>(((k % m) + m) % m)];
}

std::int64_t dim_cusp(int k, std::int64_t p) {
  if (k < 5) throw std::invalid_argument("dim_cusp: closed form needs k >= 5, got " + std::to_string(k));
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("dim_cusp: p must be an odd prime");

  const int l1 = kronecker_symbol(-1, p);
  const int l3 = kronecker_symbol(-3, p);
  const int l5 = kronecker_symbol(p, 5);
  const int sign_k = k % 2 == 0 ? 1 : -1;
  static constexpr std::array<int, 3> sel3a{0, -1, 1};
  static constexpr std::array<int, 3> sel3b{0, 1, -1};
  static constexpr std::array<int, 5> sel5{1, 0, 0, -1, 0};
  static constexpr std::array<int, 4> sel4{1, 0, 0, -1};
  const Rational half(1, 2);
  // At p = 3 the order-3 elliptic terms carry no (p - (-3/p)) factor.
  const Rational elliptic3 = p == 3 ? Rational(1) : Rational(p - l3);

  Rational d = make_rational((k - 2) * (k - 1) * (2 * k - 3), 128 * 9 * 5) * (p * p - 1);
  d += make_rational(p - 1, 24);
  d += make_rational(sign_k * (8 + l1) + (2 * k - 3) * (8 - l1), 128 * 3) * (p - l1);
  d += make_rational(periodic_selector(sel3a, k), 36) * (4 + half * l3 * (1 - 5 * l3)) * elliptic3;
  d += make_rational(2 * k - 3, 36) * (5 - half * l3 * (1 + 7 * l3)) * elliptic3;
  d -= make_rational(1 - l1, 8);
  d -= make_rational(1 - l3, 3);
  d += make_rational(2 * periodic_selector(sel5, k), 5) * (1 - l5);
  if (p % 8 == 3 || p % 8 == 5) d += make_rational(periodic_selector(sel4, k), 4);

  Rational last = 0;
  if (p == 3) {
    last = make_rational(sign_k, 2);
  } else if (p % 12 == 5) {
    last = periodic_selector(sel3b, k);
  } else if (p % 12 == 7) {
    last = sign_k;
  }
  d += last / 6;

  if (d.get_den() != 1 || d < 0)
    throw std::logic_error("dim_cusp: formula produced " + format_rational(d) + " at k=" + std::to_string(k) +
                           ", p=" + std::to_string(p));
  return d.get_num().get_si();
}

std::int64_t dim_modular(int k) {
  if (k < 0) throw std::invalid_argument("dim_modular: negative weight");
  static constexpr std::array<std::int64_t, 5> low{1, 0, 1, 0, 2};
  if (k <= 4) return low[static_cast<std::size_t>(k)];
  return dim_cusp(k, 3) + (k % 2 == 0 ? 1 : 0);
}

std::int64_t dim_cusp_p3(int k) {
  if (k >= 5) return dim_cusp(k, 3);
  // M_k = S_k + C E_k for even k, with E_0 = 1.
  return dim_modular(k) - (k % 2 == 0 ? 1 : 0);
}

std::int64_t genfun_coeff(int k) {
  if (k < 0) throw std::invalid_argument("genfun_coeff: negative weight");
  const auto n = static_cast<std::size_t>(k);
  std::vector<std::int64_t> series(n + 1, 0);
  for (std::size_t a : {0u, 5u})
    for (std::size_t b : {0u, 15u})
      if (a + b <= n) series[a + b] += 1;
  for (std::size_t step : {2u, 4u, 5u, 6u})
    for (std::size_t i = step; i <= n; ++i) series[i] += series[i - step];
  return series[n];
}

bool DimensionReport::all_match() const {
  for (const auto& r : rows)
    if (!r.match) return false;
  return true;
}

DimensionReport dimension_report(std::int64_t p, int k_from, int k_to) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("dimension_report: p must be an odd prime");
  if (p != 3 && k_from < 5) throw std::invalid_argument("dimension_report: k_from must be >= 5 for p != 3");
  if (k_from < 0) throw std::invalid_argument("dimension_report: negative weight");
  DimensionReport report{p, {}};
  for (int k = k_from; k <= k_to; ++k) {
    DimensionRow row{k, 0, std::nullopt, std::nullopt, true};
    if (p == 3) {
      row.dim_cusp = dim_cusp_p3(k);
      row.dim_modular = dim_modular(k);
      row.genfun = genfun_coeff(k);
      row.match = *row.dim_modular == *row.genfun;
    } else {
      row.dim_cusp = dim_cusp(k, p);
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace siegel
