"""Reference corpus of descriptors, zeta inputs, groups and lattices.

Used by the acceptance suite and by ``neronjumps oracle``/``zeta`` defaults.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Dict, List, Optional, Tuple

from .glattice import (
    FiniteGroup,
    GLattice,
    alternating,
    augmentation_ideal,
    cyclic,
    dihedral,
    direct_product,
    direct_sum,
    dual,
    norm_one_character,
    permutation,
    quaternion,
    regular,
    sign,
    symmetric,
    trivial,
)
from .jumps import (
    ZERO,
    AbelianTotallyMultiplicative,
    BaseChange,
    DirectSum,
    ExactSeqQuotient,
    FiltrationProfile,
    InducedTorus,
    Nu1,
    Profiled,
    split_torus,
    threshold,
)
from .errors import NeronJumpsError, UnsupportedInput
from .jumps import is_torus
from .jumps.descriptors import GroupDescriptor
from .zeta import ZetaInput, character_lattice, splitting_degree


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    descriptor: GroupDescriptor
    p: int


# Worked examples
T1 = ExactSeqQuotient(InducedTorus(2, 1), InducedTorus(4, 1))
T2 = ExactSeqQuotient(InducedTorus(1, 1), InducedTorus(2, 1))
CTAME_SIDE = ExactSeqQuotient(InducedTorus(1, 1), InducedTorus(1, 2))
CTAME_MIDDLE = ExactSeqQuotient(InducedTorus(1, 2), InducedTorus(2, 2))
NORM_QUOTIENT_3 = ExactSeqQuotient(InducedTorus(1, 1), InducedTorus(3, 1))
# jump 1/3 where F^{1/3} is strictly smaller than F^{<1/3}
SKEW_PROFILE = Profiled(FiltrationProfile(((0, 3, 3, 2), ("1/3", 2, 1, 0))), torus_rank=1)

DESCRIPTORS: List[CorpusEntry] = [
    CorpusEntry("split-Gm", split_torus(1), 2),
    CorpusEntry("split-Gm^2", split_torus(2), 3),
    CorpusEntry("Ind(2,1)", InducedTorus(2, 1), 3),
    CorpusEntry("Ind(2,3)", InducedTorus(2, 3), 3),
    CorpusEntry("Ind(3,2)", InducedTorus(3, 2), 2),
    CorpusEntry("Ind(4,2)", InducedTorus(4, 2), 3),
    CorpusEntry("Ind(6,1)", InducedTorus(6, 1), 5),
    CorpusEntry("Ind(4,1)-wild", InducedTorus(4, 1), 2),
    CorpusEntry("T1", T1, 3),
    CorpusEntry("T1-wild", T1, 2),
    CorpusEntry("T2", T2, 3),
    CorpusEntry("Res/Gm(3)", NORM_QUOTIENT_3, 2),
    CorpusEntry("ctame-side", CTAME_SIDE, 3),
    CorpusEntry("ctame-middle", CTAME_MIDDLE, 3),
    CorpusEntry("Ind(2,1)+T2", DirectSum((InducedTorus(2, 1), T2)), 3),
    CorpusEntry("Ind(4,1)_K(2)", BaseChange(InducedTorus(4, 1), 2), 3),
    CorpusEntry("Ind(6,1)_K(5)", BaseChange(InducedTorus(6, 1), 5), 7),
    CorpusEntry("nu1(2,3)", Nu1(2, 3), 3),
    CorpusEntry("nu1(1,5)", Nu1(1, 5), 5),
    CorpusEntry("nu1(2,2)", Nu1(2, 2), 2),
    CorpusEntry("Ab[Ind(2,1)]", AbelianTotallyMultiplicative(InducedTorus(2, 1)), 3),
    CorpusEntry("profiled-skew", SKEW_PROFILE, 5),
    CorpusEntry("zero", ZERO, 2),
]


def zeta_input_for(
    g: GroupDescriptor,
    p: int,
    name: str = "",
    t: Optional[int] = None,
    phi: Optional[int] = None,
    delta: int = 2,
    t_seeds: Optional[Dict[int, int]] = None,
    phi_seeds: Optional[Dict[int, int]] = None,
) -> ZetaInput:
    """Zeta input for a descriptor.

    Tame tori use their character lattice unless ``t``/``phi`` override it.
    Unipotent groups take constant supplied data (default t=0, #Phi=1). The
    abelian variant needs seeds at every divisor of ``delta``.
    """
    if isinstance(g, AbelianTotallyMultiplicative):
        if not t_seeds or not phi_seeds:
            raise UnsupportedInput("abelian inputs need --t-seeds and --phi-seeds; there are no defaults")
        return ZetaInput(g, p, delta, variant="abelian", t_seeds=t_seeds, phi_seeds=phi_seeds, name=name)
    if t is None and phi is None and isinstance(g, BaseChange) and not _wild(g.inner, p):
        # G(d0)(d) = G(d0 d): read the inner data at d0 d
        inner = zeta_input_for(g.inner, p)
        d0, delta0 = g.d0, inner.delta
        return ZetaInput(g, p, delta0 // gcd(delta0, d0), lambda d: inner.t_of_d(d0 * d),
                         lambda d: inner.phi_tors_of_d(d0 * d), "torus", name=name)
    if t is None and phi is None and is_torus(g) and not isinstance(g, Profiled) and not _wild(g, p):
        return ZetaInput.from_lattice(g, p, name=name)
    tt = 0 if t is None else t
    ph = 1 if phi is None else phi
    return ZetaInput(g, p, 1, lambda d: tt, lambda d: ph, "torus", name=name)


def zeta_inputs() -> List[ZetaInput]:
    """Zeta inputs for the corpus.

    A bare profile does not determine the d-jumps below N, and neither does
    the filtration of a wildly ramified torus, so those entries are left out.
    """
    out: List[ZetaInput] = []
    for entry in DESCRIPTORS:
        g, p = entry.descriptor, entry.p
        if isinstance(g, Profiled) or (is_torus(g) and _wild(g.inner if isinstance(g, BaseChange) else g, p)):
            continue
        if isinstance(g, AbelianTotallyMultiplicative):
            out.append(zeta_input_for(g, p, entry.name, t_seeds={1: 1, 2: 2}, phi_seeds={1: 2, 2: 3}))
        else:
            out.append(zeta_input_for(g, p, entry.name))
    return out


def _wild(g: GroupDescriptor, p: int) -> bool:
    try:
        return splitting_degree(g) % p == 0
    except NeronJumpsError:
        return True


def grid_sequences(entry: CorpusEntry, length: int = 6) -> List[List[int]]:
    """Two grid sequences (d_l | d_(l+1), p !| d_l) starting above N(G)."""
    p = entry.p
    start = max(threshold(entry.descriptor), 1) + 1
    while start % p == 0:
        start += 1
    factors = [k for k in (2, 3, 5, 7) if k % p][:2]
    return [[start * f**i for i in range(length)] for f in factors]


# ---- groups and lattices of order <= 12 ---------------------------------

def groups() -> List[FiniteGroup]:
    return [
        cyclic(1), cyclic(2), cyclic(3), cyclic(4), cyclic(5), cyclic(6),
        direct_product(cyclic(2), cyclic(2)), symmetric(3), dihedral(4), quaternion(),
        direct_product(cyclic(2), cyclic(4)), cyclic(8), direct_product(cyclic(3), cyclic(3)),
        cyclic(10), dihedral(5), alternating(4), cyclic(12), dihedral(6),
        direct_product(cyclic(2), cyclic(6)),
    ]


def index_two_subgroups(G: FiniteGroup):
    return [h for h in G.subgroups() if 2 * len(h) == G.order]


def permutation_lattices(G: FiniteGroup) -> List[GLattice]:
    return [permutation(G, h) for h in G.subgroups()]


def lattices(G: FiniteGroup) -> List[GLattice]:
    """Lattices constructed for the flasque checks."""
    out = [trivial(G, 1), regular(G), augmentation_ideal(G), norm_one_character(G)]
    out += [sign(G, h) for h in index_two_subgroups(G)[:2]]
    if G.order > 1:
        out.append(direct_sum([augmentation_ideal(G), trivial(G, 1)]))
        out.append(dual(direct_sum([norm_one_character(G), regular(G)])))
    # unflagged copy of the trivial lattice: exercises the general construction
    out.append(GLattice(G, trivial(G, 1).action, rank=1, name="Z(unflagged)", check=False))
    return out


def torus_lattices() -> List[Tuple[str, FiniteGroup, GLattice]]:
    out = []
    for entry in DESCRIPTORS:
        g = entry.descriptor
        if isinstance(g, (InducedTorus, ExactSeqQuotient, DirectSum)):
            try:
                G, X = character_lattice(g)
            except Exception:
                continue
            if G.order <= 12:
                out.append((entry.name, G, X))
    return out
