#pragma once

// Dimensions of S_k(Gamma(1, 2p)) and the generating function of
// dim M_k(Gamma(1, 6)).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace siegel {

/// values[k mod m], with m = values.size() >= 1 (std::invalid_argument if empty).
int periodic_selector(std::span<const int> values, std::int64_t k);

/// dim S_k(Gamma(1, 2p)) for k >= 5 and an odd prime p. Throws
/// std::invalid_argument otherwise, std::logic_error if the closed form does
/// not evaluate to a non-negative integer.
std::int64_t dim_cusp(int k, std::int64_t p);

/// dim M_k(Gamma(1, 6)) for k >= 0.
std::int64_t dim_modular(int k);

/// dim S_k(Gamma(1, 6)) for k >= 0 (low weights derived from dim_modular).
std::int64_t dim_cusp_p3(int k);

/// Coefficient of t^k in (1+t^5)(1+t^15) / ((1-t^2)(1-t^4)(1-t^5)(1-t^6)).
std::int64_t genfun_coeff(int k);

struct DimensionRow {
  int k;
  std::int64_t dim_cusp;
  std::optional<std::int64_t> dim_modular;  // p = 3 only
  std::optional<std::int64_t> genfun;       // p = 3 only
  bool match;                               // dim_modular == genfun (true when not applicable)
};

struct DimensionReport {
  std::int64_t p;
  std::vector<DimensionRow> rows;
  bool all_match() const;
};

/// Rows for k_from..k_to. For p = 3 any k_from >= 0 is allowed; otherwise
/// k_from >= 5.
DimensionReport dimension_report(std::int64_t p, int k_from, int k_to);

}  // namespace siegel
