"""Group descriptors: the constructive families whose jumps we can compute."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple, Union

from ..errors import DescriptorError


@dataclass(frozen=True)
class FiltrationProfile:
    """Dimensions (f_plus, f_zero, f_minus) of F^{<j}, F^{j}, F^{>j} at each jump j."""

    jumps: Tuple[Tuple[Fraction, int, int, int], ...]

    def __post_init__(self):
        rows = tuple(sorted((Fraction(j), int(a), int(b), int(c)) for j, a, b, c in self.jumps))
        object.__setattr__(self, "jumps", rows)
        prev_minus = None
        for j, fp, f0, fm in rows:
            if not 0 <= j < 1:
                raise DescriptorError(f"jump {j} is not in [0, 1)")
            if not fp >= f0 >= fm >= 0:
                raise DescriptorError(f"profile at {j} violates f+ >= f0 >= f-")
            if fp == fm:
                raise DescriptorError(f"{j} is listed but the filtration does not drop there")
            if prev_minus is not None and fp != prev_minus:
                raise DescriptorError(f"profile at {j}: f+ must equal f- of the previous jump")
            prev_minus = fm
        if rows and rows[-1][3] != 0:
            raise DescriptorError("the filtration must drop to 0 after the last jump")
        if rows and rows[0][0] == 0 and rows[0][1] != rows[0][2]:
            raise DescriptorError("at jump 0 the filtration is the whole space: need f+ = f0")
        if len({r[0] for r in rows}) != len(rows):
            raise DescriptorError("repeated jump in profile")

    @property
    def dimension(self) -> int:
        return self.jumps[0][1] if self.jumps else 0

    @classmethod
    def left_continuous(cls, entries) -> "FiltrationProfile":
        """Profile with F^{j} = F^{<j} at every jump (entries: (j, mult) sorted)."""
        entries = sorted((Fraction(j), m) for j, m in entries)
        n = sum(m for _, m in entries)
        rows = []
        above = n
        for j, m in entries:
            rows.append((j, above, above, above - m))
            above -= m
        return cls(tuple(rows))


@dataclass(frozen=True)
class InducedTorus:
    """Res_{L/K} G_m with ramification index e and residue degree f."""

    e: int
    f: int = 1

    def __post_init__(self):
        if self.e < 1 or self.f < 1:
            raise DescriptorError("InducedTorus needs e, f >= 1")


@dataclass(frozen=True)
class ExactSeqQuotient:
    """total / sub for a Neron-exact sequence 0 -> sub -> total -> quotient -> 0."""

    sub: "GroupDescriptor"
    total: "GroupDescriptor"

    def __post_init__(self):
        if not is_invertible(self.sub):
            raise DescriptorError(
                "ExactSeqQuotient needs an induced (or declared invertible) sub-torus"
            )
        if dimension(self.total) < dimension(self.sub):
            raise DescriptorError("sub has larger dimension than total")


@dataclass(frozen=True)
class DirectSum:
    parts: Tuple["GroupDescriptor", ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))


@dataclass(frozen=True)
class BaseChange:
    """inner x_K K(d0)."""

    inner: "GroupDescriptor"
    d0: int

    def __post_init__(self):
        if self.d0 < 1:
            raise DescriptorError("d0 must be positive")


@dataclass(frozen=True)
class Nu1:
    """The wound unipotent group nu_1(r) over a field with [K:K^p] = p^r."""

    r: int
    p: int

    def __post_init__(self):
        from ..dvr.field import is_prime

        if self.r < 1 or not is_prime(self.p):
            raise DescriptorError("Nu1 needs r >= 1 and p prime")


@dataclass(frozen=True)
class AbelianTotallyMultiplicative:
    """Abelian variety with potentially totally multiplicative reduction,
    represented by its uniformizing torus."""

    torus: "GroupDescriptor"


@dataclass(frozen=True)
class Profiled:
    """User-supplied jumps with an explicit filtration profile.

    d-jumps are read off the profile and are only available for d > N(G).
    """

    profile: FiltrationProfile
    invertible: bool = False
    torus_rank: Optional[int] = None
    is_torus: bool = True


GroupDescriptor = Union[
    InducedTorus, ExactSeqQuotient, DirectSum, BaseChange, Nu1, AbelianTotallyMultiplicative, Profiled
]

ZERO = DirectSum(())


def split_torus(n: int) -> DirectSum:
    return DirectSum(tuple(InducedTorus(1, 1) for _ in range(n)))


def is_invertible(g: GroupDescriptor) -> bool:
    """Provenance check for the exact-sequence legality gate."""
    if isinstance(g, InducedTorus):
        return True
    if isinstance(g, DirectSum):
        return all(is_invertible(x) for x in g.parts)
    if isinstance(g, Profiled):
        return g.invertible
    return False


def is_torus(g: GroupDescriptor) -> bool:
    if isinstance(g, (InducedTorus, ExactSeqQuotient)):
        return True
    if isinstance(g, DirectSum):
        return all(is_torus(x) for x in g.parts)
    if isinstance(g, BaseChange):
        return is_torus(g.inner)
    if isinstance(g, Profiled):
        return g.is_torus
    return False


def dimension(g: GroupDescriptor) -> int:
    if isinstance(g, InducedTorus):
        return g.e * g.f
    if isinstance(g, ExactSeqQuotient):
        return dimension(g.total) - dimension(g.sub)
    if isinstance(g, DirectSum):
        return sum(dimension(x) for x in g.parts)
    if isinstance(g, BaseChange):
        return dimension(g.inner)
    if isinstance(g, Nu1):
        return g.p**g.r - 1
    if isinstance(g, AbelianTotallyMultiplicative):
        return dimension(g.torus)
    if isinstance(g, Profiled):
        return g.profile.dimension
    raise DescriptorError(f"unknown descriptor {g!r}")


def describe(g: GroupDescriptor) -> str:
    """Short human-readable name."""
    if isinstance(g, InducedTorus):
        return f"Ind(e={g.e},f={g.f})"
    if isinstance(g, ExactSeqQuotient):
        return f"({describe(g.total)})/({describe(g.sub)})"
    if isinstance(g, DirectSum):
        return " + ".join(describe(x) for x in g.parts) if g.parts else "0"
    if isinstance(g, BaseChange):
        return f"({describe(g.inner)})_K({g.d0})"
    if isinstance(g, Nu1):
        return f"nu1(r={g.r},p={g.p})"
    if isinstance(g, AbelianTotallyMultiplicative):
        return f"Ab[{describe(g.torus)}]"
    if isinstance(g, Profiled):
        return "Profiled[" + ", ".join(f"{j}:{a - c}" for j, a, _, c in g.profile.jumps) + "]"
    return repr(g)
