"""Exact Fourier expansions of Siegel modular forms on Gamma(1,6).

Coefficients come back as fractions.Fraction; indices are (x, y, z) tuples.
"""

from ._core import (
    NotDivisibleError,
    NotSquareError,
    Series,
    bracket,
    build_generators,
    dim_cusp,
    dim_modular,
    divide_exact,
    eisenstein_coefficient,
    eisenstein_series,
    enumerate_cone,
    expand,
    genfun_coeff,
    norm_m,
    rank_of_span,
    sqrt_monic,
    verify,
)

__all__ = [
    "NotDivisibleError",
    "NotSquareError",
    "Series",
    "bracket",
    "build_generators",
    "dim_cusp",
    "dim_modular",
    "divide_exact",
    "eisenstein_coefficient",
    "eisenstein_series",
    "enumerate_cone",
    "expand",
    "genfun_coeff",
    "norm_m",
    "rank_of_span",
    "sqrt_monic",
    "verify",
]
