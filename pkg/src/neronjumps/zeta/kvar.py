"""Polynomials in the Lefschetz class L and the classes (L-1)^t L^(g-t)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Tuple, Union

from ..errors import StructuralError

Coeff = Union[int, Fraction]


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class LPolynomial:
    """Finitely supported coefficients indexed by L-degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        cs = [_norm(Fraction(c) if not isinstance(c, int) else c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Coeff, ...] = tuple(cs)

    @classmethod
    def monomial(cls, deg: int, c: Coeff = 1) -> "LPolynomial":
        if deg < 0:
            raise StructuralError("negative L-degree")
        return cls([0] * deg + [c])

    @classmethod
    def constant(cls, c: Coeff) -> "LPolynomial":
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "LPolynomial") -> "LPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return LPolynomial(x + y for x, y in zip(a, b))

    def __neg__(self) -> "LPolynomial":
        return LPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "LPolynomial") -> "LPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["LPolynomial", Coeff]) -> "LPolynomial":
        if not isinstance(other, LPolynomial):
            return LPolynomial(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return LPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LPolynomial":
        """Multiply by L^k."""
        if k < 0:
            raise StructuralError("negative shift")
        return LPolynomial([0] * k + list(self.coeffs)) if self.coeffs else self

    def __pow__(self, n: int) -> "LPolynomial":
        out = LPolynomial([1])
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LPolynomial([other])
        return isinstance(other, LPolynomial) and other.coeffs == self.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def factor_lm1(self) -> Tuple[Coeff, int, int] | None:
        """Write self = c (L-1)^a L^b if possible."""
        cs = list(self.coeffs)
        if not cs:
            return None
        b = 0
        while cs[0] == 0:
            cs.pop(0)
            b += 1
        a = 0
        while len(cs) > 1:
            # synthetic division by (L - 1)
            q = [0] * (len(cs) - 1)
            acc = 0
            for i in range(len(cs) - 1, 0, -1):
                acc += cs[i]
                q[i - 1] = acc
            if acc + cs[0] != 0:
                return None
            cs = q
            a += 1
        return cs[0], a, b

    def to_text(self, var: str = "L", unicode: bool = True) -> str:
        f = self.factor_lm1()
        if f is not None:
            c, a, b = f
            parts = []
            lm1 = "(𝐋−1)" if unicode else f"({var}-1)"
            lv = "𝐋" if unicode else var
            if a:
                parts.append(lm1 + (_sup(a, unicode) if a > 1 else ""))
            if b:
                parts.append(lv + (_sup(b, unicode) if b > 1 else ""))
            body = "".join(parts) if unicode else "*".join(parts)
            if not body:
                return str(c)
            if c == 1:
                return body
            if c == -1:
                return "-" + body
            return f"{c}" + ("" if unicode else "*") + body
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c:
                mon = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
                terms.append(f"{c}*{mon}" if mon and c != 1 else (mon or str(c)))
        return "(" + " + ".join(terms) + ")"

    def to_json(self) -> list:
        return [str(c) if isinstance(c, Fraction) else c for c in self.coeffs]

    def __repr__(self) -> str:
        return f"LPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.to_text()


_SUP = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


def _sup(n: int, unicode: bool) -> str:
    return str(n).translate(_SUP) if unicode else f"^{n}"


L_MINUS_1 = LPolynomial([-1, 1])


@dataclass(frozen=True)
class KVarClass:
    """comp_count * (L-1)^t * L^(g-t)."""

    comp_count: int
    t: int
    g: int

    def __post_init__(self):
        if self.comp_count < 1:
            raise StructuralError("component count must be positive")
        if not 0 <= self.t <= self.g:
            raise StructuralError(f"need 0 <= t <= g, got t={self.t}, g={self.g}")

    def expand(self) -> LPolynomial:
        return (L_MINUS_1 ** self.t).shift(self.g - self.t) * self.comp_count

    def __str__(self) -> str:
        return self.expand().to_text()


def binomial(n: int, k: int) -> int:
    return comb(n, k)
