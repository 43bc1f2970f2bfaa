"""Truncated power series in a fractional variable t^(1/N) over F_q."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

import numpy as np

from ..errors import StructuralError
from .field import FqElem, FqField, get_field


def _trim(c: np.ndarray) -> np.ndarray:
    nz = np.nonzero(c)[0]
    return c[: int(nz[-1]) + 1] if len(nz) else c[:0]


class TruncSeries:
    """sum_n c_n t^(n/N), known for n < ``prec`` (``prec=None`` means exact).

    Coefficients are field codes stored in an int64 array; trailing zeros
    are trimmed so an exact series is effectively a polynomial.
    """

    __slots__ = ("field", "N", "coeffs", "prec")

    def __init__(self, field: Union[FqField, int], N: int, coeffs=(), prec: Optional[int] = None):
        if isinstance(field, int):
            field = get_field(field)
        if N < 1:
            raise StructuralError("denominator must be positive")
        if isinstance(coeffs, Mapping):
            top = max(coeffs, default=-1) + 1
            arr = np.zeros(top, dtype=np.int64)
            for n, c in coeffs.items():
                if n < 0:
                    raise StructuralError("negative exponent")
                arr[n] = c.value if isinstance(c, FqElem) else field.from_int(c) if field.is_prime else c
        else:
            arr = np.array([c.value if isinstance(c, FqElem) else c for c in coeffs], dtype=np.int64)
            if field.is_prime:
                arr %= field.p
        if prec is not None:
            if prec < 0:
                raise StructuralError("precision must be nonnegative")
            arr = arr[:prec]
        self.field = field
        self.N = N
        self.coeffs = _trim(arr)
        self.prec = prec

    # -- constructors -------------------------------------------------
    @classmethod
    def monomial(cls, field, N: int, n: int, c: int = 1, prec: Optional[int] = None) -> "TruncSeries":
        return cls(field, N, {n: c}, prec)

    @classmethod
    def zero(cls, field, N: int, prec: Optional[int] = None) -> "TruncSeries":
        return cls(field, N, (), prec)

    # -- basic queries ------------------------------------------------
    @property
    def precision(self) -> Optional[Fraction]:
        return None if self.prec is None else Fraction(self.prec, self.N)

    @property
    def is_exact(self) -> bool:
        return self.prec is None

    def valuation_numerator(self) -> Optional[int]:
        """Smallest n with c_n != 0, or None if zero to known precision."""
        nz = np.nonzero(self.coeffs)[0]
        return int(nz[0]) if len(nz) else None

    def valuation(self) -> Optional[Fraction]:
        v = self.valuation_numerator()
        return None if v is None else Fraction(v, self.N)

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def coeff(self, n: int) -> int:
        if self.prec is not None and n >= self.prec:
            raise StructuralError(f"coefficient {n}/{self.N} lies beyond the known precision")
        return int(self.coeffs[n]) if n < len(self.coeffs) else 0

    def _check(self, other: "TruncSeries") -> None:
        if not isinstance(other, TruncSeries):
            raise StructuralError("operand is not a TruncSeries")
        if other.N != self.N:
            raise StructuralError(f"mismatched denominators {self.N} and {other.N}")
        if other.field != self.field:
            raise StructuralError("mismatched coefficient fields")

    # -- ring operations ----------------------------------------------
    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        prec = _min_prec(self.prec, other.prec)
        n = max(len(self.coeffs), len(other.coeffs))
        a = np.zeros(n, dtype=np.int64)
        b = np.zeros(n, dtype=np.int64)
        a[: len(self.coeffs)] = self.coeffs
        b[: len(other.coeffs)] = other.coeffs
        return TruncSeries(self.field, self.N, self.field.vadd(a, b), prec)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.field, self.N, self.field.vsub(np.zeros_like(self.coeffs), self.coeffs), self.prec)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        return series_mul(self, other)

    def scale(self, c: int) -> "TruncSeries":
        return TruncSeries(self.field, self.N, self.field.vscale(c, self.coeffs), self.prec)

    def shift(self, n: int) -> "TruncSeries":
        """Multiply by t^(n/N); negative n divides (requires divisibility)."""
        if n >= 0:
            c = np.concatenate([np.zeros(n, dtype=np.int64), self.coeffs])
            return TruncSeries(self.field, self.N, c, None if self.prec is None else self.prec + n)
        v = self.valuation_numerator()
        if v is not None and v < -n:
            raise StructuralError("series not divisible by the requested power of t")
        if self.prec is not None and self.prec < -n:
            return TruncSeries(self.field, self.N, (), 0)
        return TruncSeries(self.field, self.N, self.coeffs[-n:], None if self.prec is None else self.prec + n)

    def inverse(self, prec: Optional[int] = None) -> "TruncSeries":
        """Inverse of a unit. Exact units still need a target precision."""
        if len(self.coeffs) == 0 or self.coeffs[0] == 0:
            raise ZeroDivisionError("series is not a unit")
        target = self.prec if prec is None else (prec if self.prec is None else min(prec, self.prec))
        if target is None:
            if len(self.coeffs) == 1:
                return TruncSeries(self.field, self.N, [self.field.inv(int(self.coeffs[0]))], None)
            raise StructuralError("inverse of a non-constant exact unit needs a precision")
        return TruncSeries(self.field, self.N, self.field.series_inverse(self.coeffs, target), target)

    def truncate(self, prec: int) -> "TruncSeries":
        return TruncSeries(self.field, self.N, self.coeffs, _min_prec(self.prec, prec))

    def regrain(self, N: int) -> "TruncSeries":
        """Re-express over denominator N (a multiple or divisor of self.N)."""
        if N % self.N == 0:
            k = N // self.N
            c = np.zeros(max(0, (len(self.coeffs) - 1) * k + 1), dtype=np.int64)
            c[::k] = self.coeffs
            return TruncSeries(self.field, N, c, None if self.prec is None else self.prec * k)
        if self.N % N == 0:
            k = self.N // N
            if np.any(np.delete(self.coeffs, np.arange(0, len(self.coeffs), k))):
                raise StructuralError(f"series has exponents outside (1/{N})Z")
            prec = None if self.prec is None else -(-self.prec // k)
            return TruncSeries(self.field, N, self.coeffs[::k], prec)
        raise StructuralError(f"cannot regrain from 1/{self.N} to 1/{N}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncSeries)
            and other.N == self.N
            and other.field == self.field
            and other.prec == self.prec
            and np.array_equal(other.coeffs, self.coeffs)
        )

    def __repr__(self) -> str:
        terms = [f"{int(c)}*t^({n}/{self.N})" for n, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) or "0"
        tail = "" if self.prec is None else f" + O(t^({self.prec}/{self.N}))"
        return f"TruncSeries[F_{self.field.q}]({body}{tail})"


def _min_prec(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Product with precision min(prec(a) + val(b), prec(b) + val(a)).

    A factor that is exactly zero absorbs everything and the result is exact.
    """
    a._check(b)
    if (a.is_exact and a.is_zero()) or (b.is_exact and b.is_zero()):
        return TruncSeries.zero(a.field, a.N)
    va, vb = a.valuation_numerator(), b.valuation_numerator()
    cands = []
    if a.prec is not None:
        cands.append(a.prec + (vb if vb is not None else b.prec))
    if b.prec is not None:
        cands.append(b.prec + (va if va is not None else a.prec))
    prec = min(cands) if cands else None
    length = prec if prec is not None else len(a.coeffs) + len(b.coeffs)
    c = a.field.conv(a.coeffs, b.coeffs, max(length, 0))
    return TruncSeries(a.field, a.N, c, prec)
