"""Jumps, d-jumps, order function and tame conductor of group descriptors."""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import floor, gcd
from typing import Optional

from ..errors import (
    BelowThreshold,
    DescriptorError,
    InconsistencyError,
    NeronJumpsError,
    StructuralError,
    UnsupportedInput,
)
from .descriptors import (
    AbelianTotallyMultiplicative,
    BaseChange,
    DirectSum,
    ExactSeqQuotient,
    FiltrationProfile,
    GroupDescriptor,
    InducedTorus,
    Nu1,
    Profiled,
    dimension,
    is_torus,
)
from .multiset import DJumpMultiset, JumpMultiset


def jumps_of(g: GroupDescriptor) -> JumpMultiset:
    if isinstance(g, InducedTorus):
        return JumpMultiset({Fraction(i, g.e): g.f for i in range(g.e)})
    if isinstance(g, ExactSeqQuotient):
        return jumps_of(g.total) - jumps_of(g.sub)
    if isinstance(g, DirectSum):
        out = JumpMultiset()
        for x in g.parts:
            out = out + jumps_of(x)
        return out
    if isinstance(g, BaseChange):
        return jumps_of(g.inner).scaled(g.d0)
    if isinstance(g, Nu1):
        m = g.p ** (g.r - 1)
        data = {Fraction(i, g.p): m for i in range(1, g.p)}
        data[Fraction(0)] = m - 1
        return JumpMultiset(data)
    if isinstance(g, AbelianTotallyMultiplicative):
        return jumps_of(g.torus)
    if isinstance(g, Profiled):
        return JumpMultiset({j: a - c for j, a, _, c in g.profile.jumps})
    raise DescriptorError(f"unknown descriptor {g!r}")


def c_tame(g: GroupDescriptor) -> Fraction:
    return jumps_of(g).c_tame()


def e_of(g: GroupDescriptor) -> int:
    """e(G): lcm of the denominators of the jumps."""
    return jumps_of(g).denominator_lcm()


def threshold(g: GroupDescriptor) -> int:
    """N(G) = ceil(1 / min gap between distinct jumps)."""
    return jumps_of(g).threshold()


def filtration_profile(g: GroupDescriptor) -> FiltrationProfile:
    """Profile of a descriptor; built-in families are left-continuous."""
    if isinstance(g, Profiled):
        return g.profile
    if isinstance(g, AbelianTotallyMultiplicative):
        return filtration_profile(g.torus)
    return FiltrationProfile.left_continuous(jumps_of(g).entries)


def read_off(profile: FiltrationProfile, d: int) -> DJumpMultiset:
    """d-jumps from a filtration profile: floor(dj) - 1 (x s) and floor(dj) (x s')."""
    c: Counter = Counter()
    for j, fp, f0, fm in profile.jumps:
        x = d * j
        base = floor(x)
        if x.denominator == 1:
            s, s2 = fp - f0, f0 - fm
        else:
            s, s2 = 0, fp - fm
        if s:
            c[base - 1] += s
        if s2:
            c[base] += s2
    return DJumpMultiset(d, c)


def ord_from_profile(profile: FiltrationProfile, d: int) -> int:
    """sum m_i floor(d j_i) - sum_{d j_i integral} (f+_i - f0_i)."""
    total = 0
    for j, fp, f0, fm in profile.jumps:
        x = d * j
        total += (fp - fm) * floor(x)
        if x.denominator == 1:
            total -= fp - f0
    return total


def _check_d(d: int, p: Optional[int]) -> None:
    if d < 1:
        raise StructuralError("d must be positive")
    if p is not None and d % p == 0:
        raise UnsupportedInput(f"d={d} is divisible by p={p}")


def _floor_family(d: int, jumps: JumpMultiset) -> DJumpMultiset:
    c: Counter = Counter()
    for j, m in jumps.entries:
        c[floor(d * j)] += m
    return DJumpMultiset(d, c)


def d_jumps_of(g: GroupDescriptor, d: int, p: Optional[int] = None) -> DJumpMultiset:
    """d-jumps of g.

    Closed formulas: InducedTorus gives floor(d i / e) when d = 1 mod e or the
    extension is tame (p given and prime to e); nu_1(r) gives floor(d i / p).
    Profiled descriptors (and wild induced tori off the d = 1 mod e family)
    use the read-off rule, which needs d > N(G).
    """
    _check_d(d, p)
    if d == 1:
        return DJumpMultiset(1, {0: dimension(g)})
    if isinstance(g, InducedTorus):
        if d % g.e == 1 % g.e or (p is not None and g.e % p):
            c = Counter()
            for i in range(g.e):
                c[(d * i) // g.e] += g.f
            return DJumpMultiset(d, c)
        return _profiled_d_jumps(g, d)
    if isinstance(g, (ExactSeqQuotient, DirectSum)):
        try:
            if isinstance(g, ExactSeqQuotient):
                return d_jumps_of(g.total, d, p) - d_jumps_of(g.sub, d, p)
            out = DJumpMultiset(d)
            for x in g.parts:
                out = out + d_jumps_of(x, d, p)
            return out
        except BelowThreshold:
            # a wild piece can sit below its own N while g is above N(g)
            return _profiled_d_jumps(g, d)
    if isinstance(g, BaseChange):
        if p is not None and g.d0 % p == 0:
            raise UnsupportedInput(f"base change degree d0={g.d0} is divisible by p={p}")
        return d_jumps_of(g.inner, g.d0 * d, p).reduce(d)
    if isinstance(g, Nu1):
        if p is not None and p != g.p:
            raise StructuralError(f"nu1 is defined in characteristic {g.p}, not {p}")
        if d % g.p == 0:
            raise UnsupportedInput(f"d={d} is divisible by p={g.p}")
        m = g.p ** (g.r - 1)
        c: Counter = Counter({0: m - 1})
        for i in range(1, g.p):
            c[(d * i) // g.p] += m
        return DJumpMultiset(d, c)
    if isinstance(g, AbelianTotallyMultiplicative):
        return d_jumps_of(g.torus, d, p)
    if isinstance(g, Profiled):
        return _profiled_d_jumps(g, d)
    raise DescriptorError(f"unknown descriptor {g!r}")


def _profiled_d_jumps(g: GroupDescriptor, d: int) -> DJumpMultiset:
    n = threshold(g)
    if d <= n:
        raise BelowThreshold(f"d={d} <= N(G)={n}: the read-off rule is only available above N(G)")
    return read_off(filtration_profile(g), d)


def ord_(g: GroupDescriptor, d: int, p: Optional[int] = None) -> int:
    """Length of the Lie cokernel: the sum of the d-jumps."""
    return d_jumps_of(g, d, p).total()


def check_ord_recurrence(g: GroupDescriptor, d: int, q: int, p: Optional[int] = None) -> bool:
    """ord(d + q e(G)) == ord(d) + q e(G) c_tame(G), for d > N(G)."""
    n = threshold(g)
    if d <= n:
        raise BelowThreshold(f"d={d} <= N(G)={n}")
    e = e_of(g)
    d2 = d + q * e
    _check_d(d, p)
    _check_d(d2, p)
    lhs = ord_(g, d2, p)
    rhs = ord_(g, d, p) + q * e * c_tame(g)
    return lhs == rhs


def split_rank(g: GroupDescriptor) -> int:
    """Dimension of the maximal split subtorus, from descriptor bookkeeping."""
    if isinstance(g, InducedTorus):
        return g.f
    if isinstance(g, ExactSeqQuotient):
        return split_rank(g.total) - split_rank(g.sub)
    if isinstance(g, DirectSum):
        return sum(split_rank(x) for x in g.parts)
    if isinstance(g, BaseChange):
        inner = g.inner
        if isinstance(inner, InducedTorus):
            return gcd(inner.e, g.d0) * inner.f
        if isinstance(inner, (DirectSum, ExactSeqQuotient)):
            if isinstance(inner, DirectSum):
                return sum(split_rank(BaseChange(x, g.d0)) for x in inner.parts)
            return split_rank(BaseChange(inner.total, g.d0)) - split_rank(BaseChange(inner.sub, g.d0))
        if isinstance(inner, BaseChange):
            return split_rank(BaseChange(inner.inner, inner.d0 * g.d0))
        raise UnsupportedInput(f"no split-rank bookkeeping for base change of {inner!r}")
    if isinstance(g, AbelianTotallyMultiplicative):
        return split_rank(g.torus)
    if isinstance(g, Profiled):
        if g.torus_rank is None:
            raise UnsupportedInput("profiled descriptor carries no torus rank")
        return g.torus_rank
    raise UnsupportedInput(f"{type(g).__name__} is not a torus")


def multiplicity_of_zero(g: GroupDescriptor) -> int:
    """Multiplicity of the jump 0, checked against the split rank."""
    if not (is_torus(g) or isinstance(g, AbelianTotallyMultiplicative)):
        raise UnsupportedInput(f"{type(g).__name__} is not a torus descriptor")
    m0 = jumps_of(g).multiplicity(0)
    rank = split_rank(g)
    if m0 != rank:
        raise InconsistencyError(f"jump 0 has multiplicity {m0} but the split rank is {rank}")
    return m0


def check_ctame_additivity(
    sub: GroupDescriptor, total: GroupDescriptor, quotient: Optional[GroupDescriptor] = None
) -> bool:
    """c_tame(total) == c_tame(sub) + c_tame(quotient).

    Without ``quotient`` the quotient is ExactSeqQuotient(sub, total). With an
    explicit quotient the identity is tested as stated and may be False.
    Invalid inputs also give False rather than an exception.
    """
    try:
        if quotient is None:
            quotient = ExactSeqQuotient(sub, total)
        return c_tame(total) == c_tame(sub) + c_tame(quotient)
    except NeronJumpsError:
        return False


def check_uplus(sub: GroupDescriptor, total: GroupDescriptor, quotient: GroupDescriptor, d: int,
                p: Optional[int] = None) -> bool:
    """J_d(total) == J_d(sub) + J_d(quotient)."""
    return d_jumps_of(total, d, p) == d_jumps_of(sub, d, p) + d_jumps_of(quotient, d, p)
