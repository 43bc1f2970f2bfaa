"""Tate cohomology in degrees -1 and 0, and related invariants."""
from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import List, Tuple

from .. import intmat
from ..errors import InternalError, StructuralError
from .groups import FiniteGroup, Subgroup
from .lattice import GLattice


@dataclass(frozen=True)
class TateH:
    """A finite abelian group Z/n_1 + ... + Z/n_k with every n_i > 1."""

    degree: int
    invariant_factors: Tuple[int, ...]

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def __str__(self) -> str:
        if self.is_trivial:
            return "0"
        return " + ".join(f"Z/{n}" for n in self.invariant_factors)


def _quotient(sub_gens: intmat.Matrix, ambient: intmat.Matrix, n: int) -> Tuple[int, ...]:
    """Invariant factors of span(ambient) / span(sub_gens).

    ``ambient`` has saturated basis columns; ``sub_gens`` columns lie in it.
    """
    k = len(ambient[0]) if ambient and ambient[0] else 0
    if k == 0:
        return ()
    if not sub_gens or not sub_gens[0]:
        raise InternalError("quotient has a free part; Tate groups must be finite")
    sub_gens = intmat.column_basis(sub_gens)
    if not sub_gens or not sub_gens[0]:
        raise InternalError("quotient has a free part; Tate groups must be finite")
    coords = intmat.solve(ambient, sub_gens, k)
    if coords is None:
        raise InternalError("generators do not lie in the ambient lattice")
    factors = intmat.invariant_factors(coords, len(sub_gens[0]))
    if len(factors) < k:
        raise InternalError("quotient has a free part; Tate groups must be finite")
    return tuple(f for f in factors if f > 1)


def fixed_lattice(A: GLattice, h: Subgroup) -> intmat.Matrix:
    """Basis (columns) of A^H."""
    n = A.rank
    rows: intmat.Matrix = []
    for g in h:
        m = A.action[g]
        for i in range(n):
            rows.append([m[i][j] - (i == j) for j in range(n)])
    if not rows:
        return intmat.identity(n)
    return intmat.kernel_basis(rows, n)


def tate_cohomology(G: FiniteGroup, H: Subgroup, A: GLattice, degree: int) -> TateH:
    """H^0 = A^H / N_H A and H^-1 = ker(N_H) / I_H A."""
    H = tuple(sorted(H))
    if A.group is not G and A.group.mul_table != G.mul_table:
        raise StructuralError("lattice is defined over a different group")
    if not G.is_subgroup(H):
        raise StructuralError(f"{H} is not a subgroup")
    n = A.rank
    if n == 0:
        return TateH(degree, ())
    N = A.norm(H)
    if degree == 0:
        return TateH(0, _quotient(N, fixed_lattice(A, H), n))
    if degree == -1:
        ker = intmat.kernel_basis(N, n)
        gens: intmat.Matrix = [[] for _ in range(n)]
        for g in H:
            m = A.action[g]
            for i in range(n):
                gens[i].extend(m[i][j] - (i == j) for j in range(n))
        if not ker or not ker[0]:
            return TateH(-1, ())
        if not gens[0]:
            gens = intmat.zeros(n, 1)
        return TateH(-1, _quotient(gens, ker, n))
    raise StructuralError("only degrees -1 and 0 are supported")


def invariant_rank(G: FiniteGroup, H: Subgroup, A: GLattice) -> int:
    """Rank of A^H."""
    if not G.is_subgroup(H):
        raise StructuralError(f"{H} is not a subgroup")
    basis = fixed_lattice(A, H)
    return len(basis[0]) if basis and basis[0] else 0


def is_flasque(G: FiniteGroup, A: GLattice) -> bool:
    """True iff H^-1(H, A) vanishes for every subgroup H."""
    subs = G.subgroups()
    return all(tate_cohomology(G, h, A, -1).is_trivial for h in subs)


def tate_table(G: FiniteGroup, A: GLattice) -> List[Tuple[Subgroup, TateH, TateH]]:
    """(H, H^-1, H^0) for every subgroup."""
    return [(h, tate_cohomology(G, h, A, -1), tate_cohomology(G, h, A, 0)) for h in G.subgroups()]
