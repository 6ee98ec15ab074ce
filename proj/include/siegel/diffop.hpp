#pragma once

// Rankin-Cohen type bracket {f1, f2, f3, f4}_* on Fourier expansions.
//
// The analytic bracket is the determinant with rows (k_i f_i) and the three
// partial derivatives of f_i. On e[Tr(eta Z J)] each derivative multiplies the
// coefficient at eta by a fixed linear form in (x, y, z), so replacing the
// derivative rows by the coordinate rows x_i, y_i, z_i changes the bracket by
// one input-independent nonzero constant. This module computes that
// coordinate version, which keeps everything over Q.

#include "siegel/fourier.hpp"

#include <array>

namespace siegel {

enum class Axis { x, y, z };

/// Coefficientwise multiplication by the chosen coordinate of the index.
FourierSeries coordinate_derivative(const FourierSeries& f, Axis axis);

/// Bracket of weight k1 + k2 + k3 + k4 + 3. All inputs must share one
/// precision (std::invalid_argument otherwise).
FourierSeries bracket(const FourierSeries& f1, const FourierSeries& f2, const FourierSeries& f3,
                      const FourierSeries& f4);

}  // namespace siegel
