"""Truncated fractional power series over finite fields and SNF over DVRs."""
from .field import FqElem, FqField, get_field, is_prime, prime_power
from .induced import (
    build_induced_lie_matrix,
    build_nu1_lie_matrix,
    diagonal_monomial_matrix,
    integer_model_matrix,
)
from .matrix import DvrMatrix, ElementaryDivisors, exact_rank, snf_over_dvr
from .series import TruncSeries, series_mul

__all__ = [
    "FqElem",
    "FqField",
    "get_field",
    "is_prime",
    "prime_power",
    "TruncSeries",
    "series_mul",
    "DvrMatrix",
    "ElementaryDivisors",
    "snf_over_dvr",
    "exact_rank",
    "build_induced_lie_matrix",
    "build_nu1_lie_matrix",
    "diagonal_monomial_matrix",
    "integer_model_matrix",
]
