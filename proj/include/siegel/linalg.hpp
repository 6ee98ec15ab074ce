#pragma once

// Dense exact linear algebra over Q.

#include "siegel/exactnum.hpp"

#include <cstddef>
#include <vector>

namespace siegel {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

std::size_t matrix_rank(RationalMatrix m);

/// Basis of { v : m v = 0 }. Each basis vector has a 1 at one free column
/// and 0 at the other free columns.
RationalMatrix right_nullspace(RationalMatrix m, std::size_t cols);

}  // namespace siegel
