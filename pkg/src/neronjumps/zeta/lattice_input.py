"""Character lattices of torus descriptors, as inputs to the zeta function.

A torus split by a tame cyclic extension of degree delta has character
lattice X* with an action of Gamma = Z/delta. Over K(d) only the subgroup
of order delta / gcd(d, delta) still acts.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd, lcm
from typing import List, Tuple

from .. import intmat
from ..errors import InternalError, UnsupportedInput
from ..glattice import GLattice, cyclic, direct_sum, invariant_rank, tate_cohomology
from ..glattice.groups import FiniteGroup, Subgroup
from ..jumps.descriptors import DirectSum, ExactSeqQuotient, GroupDescriptor, InducedTorus


def splitting_degree(g: GroupDescriptor) -> int:
    """lcm of the ramification indices occurring in the descriptor."""
    if isinstance(g, InducedTorus):
        return g.e
    if isinstance(g, ExactSeqQuotient):
        return lcm(splitting_degree(g.sub), splitting_degree(g.total))
    if isinstance(g, DirectSum):
        return lcm(1, *(splitting_degree(x) for x in g.parts))
    raise UnsupportedInput(f"no character lattice model for {type(g).__name__}")


def _coset_lattice(G: FiniteGroup, e: int) -> List[intmat.Matrix]:
    """Z[C_delta / <e>] = Z[Z/e] with k acting by the shift i -> i + k."""
    mats = []
    for k in G.elements:
        m = intmat.zeros(e, e)
        for i in range(e):
            m[(i + k) % e][i] = 1
        mats.append(m)
    return mats


def _lattice_and_basis(G: FiniteGroup, g: GroupDescriptor):
    """Return (X*, blocks) where blocks records the induced summands (e, copies)."""
    if isinstance(g, InducedTorus):
        one = GLattice(G, _coset_lattice(G, g.e), rank=g.e, check=False)
        return direct_sum([one] * g.f)
    if isinstance(g, DirectSum):
        parts = [_lattice_and_basis(G, x) for x in g.parts]
        if not parts:
            return GLattice(G, [[] for _ in G.elements], rank=0, check=False)
        return direct_sum(parts)
    if isinstance(g, ExactSeqQuotient):
        total = _lattice_and_basis(G, g.total)
        restrict = _restriction(g.sub, g.total)
        if restrict is None:
            raise UnsupportedInput("cannot model the inclusion of this sub-torus")
        ker = intmat.kernel_basis(restrict, total.rank)
        r = len(ker[0]) if ker and ker[0] else 0
        mats = []
        for k in G.elements:
            if r == 0:
                mats.append([])
                continue
            c = intmat.solve(ker, intmat.matmul(total.action[k], ker), r)
            if c is None:
                raise InternalError("kernel is not Galois-stable")
            mats.append(c)
        return GLattice(G, mats, rank=r, check=False)
    raise UnsupportedInput(f"no character lattice model for {type(g).__name__}")


def _induced_blocks(g: GroupDescriptor) -> List[int] | None:
    """Ramification index of each Z[Z/e] block, in basis order."""
    if isinstance(g, InducedTorus):
        return [g.e] * g.f
    if isinstance(g, DirectSum):
        out: List[int] = []
        for x in g.parts:
            b = _induced_blocks(x)
            if b is None:
                return None
            out += b
        return out
    return None


def _restriction(sub: GroupDescriptor, total: GroupDescriptor):
    """Restriction of characters X*(total) -> X*(sub) for induced tori.

    Block a of the total (index e_t) maps onto block a mod (#sub blocks) of the
    sub, sending i mod e_t to i mod e_s; this needs e_s | e_t.
    """
    tb, sb = _induced_blocks(total), _induced_blocks(sub)
    if tb is None or sb is None or not sb:
        return None if sb != [] else intmat.zeros(0, sum(tb or []))
    rows = sum(sb)
    cols = sum(tb)
    R = intmat.zeros(rows, cols)
    s_off = [sum(sb[:i]) for i in range(len(sb))]
    col = 0
    for a, et in enumerate(tb):
        target = a % len(sb)
        es = sb[target]
        if et % es:
            return None
        for i in range(et):
            R[s_off[target] + i % es][col + i] = 1
        col += et
    return R


def character_lattice(g: GroupDescriptor) -> Tuple[FiniteGroup, GLattice]:
    delta = splitting_degree(g)
    G = cyclic(delta)
    return G, _lattice_and_basis(G, g)


def stabilizer_subgroup(delta: int, d: int) -> Subgroup:
    """The subgroup of Z/delta of order delta / gcd(d, delta)."""
    dp = gcd(d, delta)
    return tuple(range(0, delta, dp))


class LatticeData:
    """t_d and #Phi_tors(d) from a character lattice; cached on gcd(d, delta)."""

    def __init__(self, G: FiniteGroup, X: GLattice):
        self.G, self.X, self.delta = G, X, G.order
        self._t = {}
        self._phi = {}

    def t_of_d(self, d: int) -> int:
        dp = gcd(d, self.delta)
        if dp not in self._t:
            self._t[dp] = invariant_rank(self.G, stabilizer_subgroup(self.delta, d), self.X)
        return self._t[dp]

    def phi_tors_of_d(self, d: int) -> int:
        """Order of H^1 of the acting cyclic subgroup (equal to Tate H^-1)."""
        dp = gcd(d, self.delta)
        if dp not in self._phi:
            h = stabilizer_subgroup(self.delta, d)
            self._phi[dp] = tate_cohomology(self.G, h, self.X, -1).order
        return self._phi[dp]
