"""Integer G-lattices: Z^n with a left action by integer matrices."""
from __future__ import annotations

from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .. import intmat
from ..errors import StructuralError
from .groups import FiniteGroup, Subgroup

Matrix = List[List[int]]


class GLattice:
    """A free Z-module of rank n with a G-action on column vectors.

    ``permutation_summands`` is a provenance flag: when set, the lattice was
    built as the direct sum of Z[G/H] for the listed subgroups, in that basis.
    ``invertible`` marks lattices witnessed as direct summands of permutation
    lattices (permutation lattices are invertible).
    """

    def __init__(
        self,
        group: FiniteGroup,
        action: Mapping[int, Sequence[Sequence[int]]] | Sequence[Sequence[Sequence[int]]],
        rank: Optional[int] = None,
        permutation_summands: Optional[Sequence[Subgroup]] = None,
        invertible: bool = False,
        name: str = "",
        check: bool = True,
    ):
        if isinstance(action, Mapping):
            mats = [action[g] for g in group.elements]
        else:
            mats = list(action)
        if len(mats) != group.order:
            raise StructuralError("need one matrix per group element")
        self.group = group
        self.action: List[Matrix] = [intmat.to_list(m) for m in mats]
        self.rank = len(self.action[0]) if rank is None else rank
        for m in self.action:
            if len(m) != self.rank or any(len(r) != self.rank for r in m):
                raise StructuralError("action matrices must be rank x rank")
        self.permutation_summands = None if permutation_summands is None else [tuple(h) for h in permutation_summands]
        self.invertible = invertible or self.permutation_summands is not None
        self.name = name
        if check:
            self._verify()

    @property
    def is_permutation(self) -> bool:
        return self.permutation_summands is not None

    def _verify(self) -> None:
        n = self.rank
        G = self.group
        if self.action[0] != intmat.identity(n):
            raise StructuralError("identity must act trivially")
        for m in self.action:
            if n and abs(intmat.det(m)) != 1:
                raise StructuralError("action matrices must be invertible over Z")
        for a in G.elements:
            for b in G.elements:
                if intmat.matmul(self.action[a], self.action[b]) != self.action[G.mul(a, b)] and n:
                    raise StructuralError(f"action is not a homomorphism at ({a},{b})")

    def __call__(self, g: int) -> Matrix:
        return self.action[g]

    def norm(self, h: Subgroup) -> Matrix:
        n = self.rank
        out = intmat.zeros(n, n)
        for g in h:
            m = self.action[g]
            for i in range(n):
                for j in range(n):
                    out[i][j] += m[i][j]
        return out

    def __repr__(self) -> str:
        tag = " perm" if self.is_permutation else (" inv" if self.invertible else "")
        return f"GLattice({self.name or '?'}, rank={self.rank}, {self.group.name}{tag})"


# ---- constructors --------------------------------------------------------

def from_generators(group: FiniteGroup, gens: Mapping[int, Sequence[Sequence[int]]], **kw) -> GLattice:
    """Extend matrices given on a generating set to the whole group."""
    if not gens:
        raise StructuralError("no generators given")
    n = len(next(iter(gens.values())))
    action: Dict[int, Matrix] = {0: intmat.identity(n)}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, m in gens.items():
                y = group.mul(g, x)
                if y not in action:
                    action[y] = intmat.matmul(intmat.to_list(m), action[x])
                    nxt.append(y)
        frontier = nxt
    if len(action) != group.order:
        raise StructuralError("the declared generators do not generate the group")
    for g, m in gens.items():
        if action[g] != intmat.to_list(m):
            raise StructuralError(f"generator {g} is inconsistent with the other generators")
    return GLattice(group, action, rank=n, **kw)


def trivial(group: FiniteGroup, n: int = 1) -> GLattice:
    return GLattice(
        group,
        [intmat.identity(n) for _ in group.elements],
        rank=n,
        permutation_summands=[group.whole()] * n,
        name=f"Z^{n}",
        check=False,
    )


def _perm_block(group: FiniteGroup, h: Subgroup) -> List[Matrix]:
    cosets = group.left_cosets(h)
    where = {}
    for k, c in enumerate(cosets):
        for x in c:
            where[x] = k
    r = len(cosets)
    mats = []
    for g in group.elements:
        m = intmat.zeros(r, r)
        for k, c in enumerate(cosets):
            m[where[group.mul(g, c[0])]][k] = 1
        mats.append(m)
    return mats


def permutation(group: FiniteGroup, h: Subgroup) -> GLattice:
    """Z[G/H] with basis the left cosets gH."""
    h = tuple(sorted(h))
    if not group.is_subgroup(h):
        raise StructuralError(f"{h} is not a subgroup")
    return GLattice(group, _perm_block(group, h), permutation_summands=[h], name=f"Z[G/{len(h)}]", check=False)


def regular(group: FiniteGroup) -> GLattice:
    lat = permutation(group, (0,))
    lat.name = "Z[G]"
    return lat


def permutation_sum(group: FiniteGroup, subgroups: Sequence[Subgroup]) -> GLattice:
    parts = [permutation(group, h) for h in subgroups]
    if not parts:
        return zero(group)
    return direct_sum(parts)


def zero(group: FiniteGroup) -> GLattice:
    return GLattice(group, [[] for _ in group.elements], rank=0, permutation_summands=[], name="0", check=False)


def direct_sum(parts: Sequence[GLattice]) -> GLattice:
    group = parts[0].group
    mats = [intmat.block_diag(*[p.action[g] for p in parts]) for g in group.elements]
    summands = None
    if all(p.is_permutation for p in parts):
        summands = [h for p in parts for h in p.permutation_summands]
    rank = sum(p.rank for p in parts)
    return GLattice(
        group,
        mats,
        rank=rank,
        permutation_summands=summands,
        invertible=all(p.invertible for p in parts),
        name="+".join(p.name or "?" for p in parts),
        check=False,
    )


def dual(lat: GLattice) -> GLattice:
    """Hom(A, Z) with g acting by (g^-1)^T."""
    G = lat.group
    mats = [intmat.transpose(lat.action[G.inv(g)], lat.rank) for g in G.elements]
    # permutation matrices are orthogonal, so Z[G/H] is self-dual in its basis
    return GLattice(
        G,
        mats,
        rank=lat.rank,
        permutation_summands=lat.permutation_summands,
        invertible=lat.invertible,
        name=f"({lat.name})^v",
        check=False,
    )


def augmentation_ideal(group: FiniteGroup) -> GLattice:
    """I_G = ker(Z[G] -> Z), basis g - 1 for g != 1."""
    n = group.order - 1
    mats = []
    for h in group.elements:
        m = intmat.zeros(n, n)
        for g in range(1, group.order):
            # h(g - 1) = (hg - 1) - (h - 1)
            hg = group.mul(h, g)
            if hg:
                m[hg - 1][g - 1] += 1
            if h:
                m[h - 1][g - 1] -= 1
        mats.append(m)
    return GLattice(group, mats, rank=n, name="I_G", check=False)


def norm_one_character(group: FiniteGroup) -> GLattice:
    """J_G = Z[G]/Z*N, the character lattice of the norm-one torus."""
    lat = dual(augmentation_ideal(group))
    lat.name = "J_G"
    return lat


def sign(group: FiniteGroup, kernel: Subgroup) -> GLattice:
    """Rank one lattice: elements outside an index-2 subgroup act by -1."""
    k = set(kernel)
    if 2 * len(k) != group.order or not group.is_subgroup(k):
        raise StructuralError("sign lattice needs an index-2 subgroup")
    return GLattice(group, [[[1 if g in k else -1]] for g in group.elements], rank=1, name="sign", check=False)
