"""Power series in x with L-polynomial coefficients and their closed forms."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import StructuralError
from .kvar import Coeff, LPolynomial


@dataclass(frozen=True)
class TailTerm:
    """coeff * x^alpha / (1 - L^A x^B)^power."""

    coeff: LPolynomial
    alpha: int
    A: int
    B: int
    power: int = 1

    def __post_init__(self):
        if self.B < 1 or self.alpha < 0 or self.A < 0 or self.power < 1:
            raise StructuralError("tail needs B >= 1, alpha >= 0, A >= 0, power >= 1")

    def expand(self, n_terms: int) -> Dict[int, LPolynomial]:
        out: Dict[int, LPolynomial] = {}
        lam = 0
        while self.alpha + lam * self.B <= n_terms:
            mult = comb(lam + self.power - 1, self.power - 1)
            out[self.alpha + lam * self.B] = self.coeff.shift(lam * self.A) * mult
            lam += 1
        return out


@dataclass
class RationalSeries:
    """A finite prefix plus tail terms. Either part may be empty."""

    prefix: Dict[int, LPolynomial] = field(default_factory=dict)
    tails: List[TailTerm] = field(default_factory=list)

    def expand(self, n_terms: int) -> Dict[int, LPolynomial]:
        """Coefficients of x^k for 0 <= k <= n_terms (zeros omitted)."""
        acc: Dict[int, LPolynomial] = {}
        for k, c in self.prefix.items():
            if k <= n_terms:
                acc[k] = acc.get(k, LPolynomial()) + c
        for t in self.tails:
            for k, c in t.expand(n_terms).items():
                acc[k] = acc.get(k, LPolynomial()) + c
        return {k: v for k, v in sorted(acc.items()) if not v.is_zero()}

    def coefficient(self, k: int) -> LPolynomial:
        return self.expand(k).get(k, LPolynomial())


def geometric_power_sum(a: Coeff, b: Coeff, t: int) -> List[Tuple[Coeff, int, int]]:
    """sum_{lambda >= 0} (a + b lambda)^t y^lambda as sum c * y^m / (1-y)^k.

    Obtained by applying (a + b theta)^t, theta = y d/dy, to 1/(1-y), using
    theta(y^m (1-y)^-k) = m y^m (1-y)^-k + k y^(m+1) (1-y)^-(k+1).
    Returns sorted (c, m, k) triples with c != 0.
    """
    if t < 0:
        raise StructuralError("t must be nonnegative")
    a, b = Fraction(a), Fraction(b)
    terms: Dict[Tuple[int, int], Fraction] = {(0, 1): Fraction(1)}
    for _ in range(t):
        new: Dict[Tuple[int, int], Fraction] = {}
        for (m, k), c in terms.items():
            new[(m, k)] = new.get((m, k), 0) + c * (a + b * m)
            new[(m + 1, k + 1)] = new.get((m + 1, k + 1), 0) + c * b * k
        terms = {key: v for key, v in new.items() if v}
    out = []
    for (m, k), c in sorted(terms.items()):
        out.append((int(c) if c.denominator == 1 else c, m, k))
    return out


def expand_power_sum(terms: Sequence[Tuple[Coeff, int, int]], n_terms: int) -> List[Fraction]:
    """First n_terms coefficients of sum c y^m / (1-y)^k."""
    out = [Fraction(0)] * n_terms
    for c, m, k in terms:
        for lam in range(m, n_terms):
            out[lam] += c * comb(lam - m + k - 1, k - 1)
    return out
