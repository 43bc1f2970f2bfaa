"""Motivic zeta functions: truncated series, closed forms and their comparison."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Dict, Mapping, Optional

from ..errors import StructuralError, UnsupportedInput
from ..jumps.calculus import c_tame, e_of, ord_, threshold
from ..jumps.descriptors import GroupDescriptor, dimension
from .kvar import KVarClass, LPolynomial
from .lattice_input import LatticeData, character_lattice
from .series import RationalSeries, TailTerm, geometric_power_sum


@dataclass
class ZetaInput:
    """Everything needed for Z_G(x) = sum_{p !| d} [G(d)^qc] L^ord(d) x^d.

    For the torus variant t_of_d and phi_tors_of_d must depend on d only
    through gcd(d, delta). The abelian variant instead takes seed values at
    the divisors of delta and extends #Phi by the power law
    #Phi(d) = (d / d')^t(d') * #Phi(d'), d' = gcd(d, delta).
    """

    group: GroupDescriptor
    p: int
    delta: int = 1
    t_of_d: Callable[[int], int] = lambda d: 0
    phi_tors_of_d: Callable[[int], int] = lambda d: 1
    variant: str = "torus"
    t_seeds: Mapping[int, int] = field(default_factory=dict)
    phi_seeds: Mapping[int, int] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        if self.variant not in ("torus", "abelian"):
            raise StructuralError(f"unknown variant {self.variant!r}")
        if self.variant == "abelian":
            for dp in _divisors(self.delta):
                if dp not in self.phi_seeds or dp not in self.t_seeds:
                    raise StructuralError(f"abelian input needs seeds at every divisor of delta (missing {dp})")
            seeds_t, seeds_phi, delta = dict(self.t_seeds), dict(self.phi_seeds), self.delta
            self.t_of_d = lambda d: seeds_t[gcd(d, delta)]
            self.phi_tors_of_d = lambda d: (d // gcd(d, delta)) ** seeds_t[gcd(d, delta)] * seeds_phi[gcd(d, delta)]

    @property
    def dim(self) -> int:
        return dimension(self.group)

    def kvar_class(self, d: int) -> KVarClass:
        return KVarClass(self.phi_tors_of_d(d), self.t_of_d(d), self.dim)

    def e_prime(self) -> int:
        return lcm(self.p, e_of(self.group), self.delta)

    @classmethod
    def from_lattice(cls, group: GroupDescriptor, p: int, name: str = "") -> "ZetaInput":
        """Torus input whose t_d and #Phi_tors come from the character lattice."""
        G, X = character_lattice(group)
        data = LatticeData(G, X)
        return cls(group, p, G.order, data.t_of_d, data.phi_tors_of_d, "torus", name=name)


def _divisors(n: int):
    return [k for k in range(1, n + 1) if n % k == 0]


def _coefficient(z: ZetaInput, d: int) -> LPolynomial:
    return z.kvar_class(d).expand().shift(ord_(z.group, d, z.p))


def zeta_truncated(z: ZetaInput, n_terms: int) -> RationalSeries:
    """Prefix of Z_G(x) through x^n_terms."""
    prefix = {d: _coefficient(z, d) for d in range(1, n_terms + 1) if d % z.p}
    return RationalSeries(prefix, [])


def zeta_closed_form(z: ZetaInput) -> RationalSeries:
    """Prefix for d <= N(G), then one tail family per class alpha mod e'."""
    ct = c_tame(z.group)
    ep = z.e_prime()
    A = ep * ct
    if Fraction(A).denominator != 1:
        raise UnsupportedInput("e' * c_tame is not an integer")
    A = int(A)
    N = threshold(z.group)
    prefix = {d: _coefficient(z, d) for d in range(1, N + 1) if d % z.p}
    tails = []
    for alpha in range(N + 1, N + ep + 1):
        if alpha % z.p == 0:
            continue
        head = _coefficient(z, alpha)
        if z.variant == "torus":
            tails.append(TailTerm(head, alpha, A, ep, 1))
            continue
        ap = gcd(alpha, z.delta)
        t = z.t_seeds[ap]
        base = KVarClass(z.phi_seeds[ap], z.t_of_d(alpha), z.dim).expand().shift(ord_(z.group, alpha, z.p))
        for c, m, k in geometric_power_sum(alpha // ap, ep // ap, t):
            tails.append(TailTerm(base.shift(m * A) * c, alpha + m * ep, A, ep, k))
    return RationalSeries(prefix, tails)


@dataclass(frozen=True)
class RationalityResult:
    ok: bool
    n_terms: int
    first_mismatch: Optional[int] = None
    expected: Optional[LPolynomial] = None
    got: Optional[LPolynomial] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_rationality(z: ZetaInput, n_terms: int, closed: Optional[RationalSeries] = None) -> RationalityResult:
    """Compare the re-expanded closed form with the truncated series."""
    if n_terms <= 0:
        return RationalityResult(True, 0)
    closed = zeta_closed_form(z) if closed is None else closed
    lhs = closed.expand(n_terms)
    rhs = zeta_truncated(z, n_terms).expand(n_terms)
    for k in range(0, n_terms + 1):
        a, b = lhs.get(k, LPolynomial()), rhs.get(k, LPolynomial())
        if a != b:
            return RationalityResult(False, n_terms, k, b, a)
    return RationalityResult(True, n_terms)


def tails_have_ctame_slope(z: ZetaInput, closed: Optional[RationalSeries] = None) -> bool:
    """Every tail satisfies A / B == c_tame(G)."""
    closed = zeta_closed_form(z) if closed is None else closed
    ct = c_tame(z.group)
    return all(Fraction(t.A, t.B) == ct for t in closed.tails)
