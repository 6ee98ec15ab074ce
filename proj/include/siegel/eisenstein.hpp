#pragma once

// Fourier coefficients of the Siegel Eisenstein series E_k on Gamma(D1, D2).
// Only (D1, D2) = (1, 6) is calibrated against reference values; the
// D1 != 1 branches are implemented but unchecked.

#include "siegel/exactnum.hpp"
#include "siegel/fourier.hpp"
#include "siegel/lattice.hpp"

#include <cstdint>

namespace siegel {

struct EisensteinParams {
  int k = 2;
  std::int64_t d1 = 1;
  std::int64_t d2 = 6;
};

/// Throws std::invalid_argument for odd or non-positive k, or (D1, D2) that
/// are not coprime squarefree positive integers.
void validate(const EisensteinParams& params);

/// The coefficient formula as written, before the global sign calibration.
Rational eisenstein_coefficient_raw(const EisensteinParams& params, EtaIndex eta);

/// Global sign fixed once so that E_2 on Gamma(1,6) has coefficient 48 at
/// [2,1,-1]; applied uniformly to every weight and index.
int eisenstein_sign();

/// Calibrated coefficient at a cone index.
Rational eisenstein_coefficient(const EisensteinParams& params, EtaIndex eta);

/// E_k to grade max_grade, with constant term 1.
FourierSeries eisenstein_series(const EisensteinParams& params, int max_grade);

}  // namespace siegel
