"""Flasque resolutions 0 -> M -> P -> F -> 0 with P permutation, F flasque."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .. import intmat
from ..errors import InternalError
from .cohomology import fixed_lattice, is_flasque
from .groups import FiniteGroup, Subgroup
from .lattice import GLattice, dual, permutation_sum, zero


@dataclass(frozen=True)
class FlasqueResolution:
    """Maps use column vectors: ``inclusion`` is rank(P) x rank(M) and
    ``projection`` is rank(F) x rank(P)."""

    M: GLattice
    P: GLattice
    F: GLattice
    inclusion: intmat.Matrix
    projection: intmat.Matrix
    P_summands: Tuple[Subgroup, ...]


def _span_contains_all(image: intmat.Matrix, target: intmat.Matrix, n: int) -> bool:
    """Does the column span of ``image`` equal the saturated lattice ``target``?"""
    k = len(target[0]) if target and target[0] else 0
    if k == 0:
        return True
    if not image or not image[0]:
        return False
    coords = intmat.solve(target, image, k)
    if coords is None:
        raise InternalError("image leaves the invariant lattice")
    f = intmat.invariant_factors(coords, len(image[0]))
    return len(f) == k and all(x == 1 for x in f)


def _orbit_map(G: FiniteGroup, D: GLattice, h: Subgroup, v: List[int]) -> intmat.Matrix:
    """Columns of the map Z[G/H] -> D sending the coset gH to g v."""
    cols = []
    for coset in G.left_cosets(h):
        g = coset[0]
        cols.append([sum(a * b for a, b in zip(row, v)) for row in D.action[g]])
    return intmat.transpose(cols, D.rank) if cols else [[] for _ in range(D.rank)]


def _orbit_sums(G: FiniteGroup, k: Subgroup, h: Subgroup) -> intmat.Matrix:
    """Basis of Z[G/K]^H: indicator vectors of the H-orbits on G/K."""
    cosets = G.left_cosets(k)
    where = {g: i for i, c in enumerate(cosets) for g in c}
    cols, seen = [], set()
    for i, c in enumerate(cosets):
        if i in seen:
            continue
        orbit = {where[G.mul(x, c[0])] for x in h}
        seen |= orbit
        cols.append([int(j in orbit) for j in range(len(cosets))])
    return intmat.transpose(cols, len(cosets))


def _image_on(G: FiniteGroup, summands: List[Subgroup], pi: intmat.Matrix, h: Subgroup, n: int,
              cache: Dict) -> intmat.Matrix:
    """Image of the H-invariants of the permutation lattice under ``pi``."""
    if not summands:
        return [[] for _ in range(n)]
    blocks = []
    for k in summands:
        if (k, h) not in cache:
            cache[(k, h)] = _orbit_sums(G, k, h)
        blocks.append(cache[(k, h)])
    inv = _block_diag_rect(blocks)
    return intmat.column_basis(intmat.matmul(pi, inv), len(inv[0]))


def _block_diag_rect(blocks: List[intmat.Matrix]) -> intmat.Matrix:
    rows = sum(len(b) for b in blocks)
    cols = sum(len(b[0]) for b in blocks)
    out = intmat.zeros(rows, cols)
    r0 = c0 = 0
    for b in blocks:
        for i, row in enumerate(b):
            out[r0 + i][c0:c0 + len(row)] = row
        r0 += len(b)
        c0 += len(b[0])
    return out


def _in_span(image: intmat.Matrix, v: List[int]) -> bool:
    if not image or not image[0]:
        return not any(v)
    return intmat.solve(image, [[x] for x in v], len(image[0])) is not None


def _surject_permutation(G: FiniteGroup, D: GLattice):
    """Greedy P' -> D that is surjective on H-invariants for every subgroup H."""
    n = D.rank
    summands: List[Subgroup] = []
    blocks: List[intmat.Matrix] = []
    subs = sorted(G.subgroups(), key=lambda s: (-len(s), s))
    targets = {h: fixed_lattice(D, h) for h in subs}
    cache: Dict = {}

    def current(sm, bl):
        return intmat.hstack(*bl) if bl else [[] for _ in range(n)]

    def onto(sm, bl, h):
        t = targets[h]
        if not t or not t[0]:
            return True
        return _span_contains_all(_image_on(G, sm, current(sm, bl), h, n, cache), t, n)

    for h in subs:
        target = targets[h]
        if not target or not target[0]:
            continue
        image = _image_on(G, summands, current(summands, blocks), h, n, cache)
        for idx in range(len(target[0])):
            if _span_contains_all(image, target, n):
                break
            v = [row[idx] for row in target]
            if _in_span(image, v):
                continue
            summands.append(h)
            blocks.append(_orbit_map(G, D, h, v))
            image = _image_on(G, summands, current(summands, blocks), h, n, cache)
    # drop summands that turned out to be redundant
    i = 0
    while i < len(summands):
        sm = summands[:i] + summands[i + 1:]
        bl = blocks[:i] + blocks[i + 1:]
        if all(onto(sm, bl, h) for h in subs):
            summands, blocks = sm, bl
        else:
            i += 1
    return summands, current(summands, blocks)


def flasque_resolve(G: FiniteGroup, M: GLattice) -> FlasqueResolution:
    """Build and verify 0 -> M -> P -> F -> 0.

    Permutation-flagged inputs get the identity resolution. Otherwise a
    permutation lattice P' is mapped onto the dual of M so that every
    H-invariant part is hit; the kernel Q is then coflasque and dualizing
    the sequence gives P = P'^v and F = Q^v.
    """
    n = M.rank
    if M.is_permutation:
        res = FlasqueResolution(M, M, zero(G), intmat.identity(n), [], tuple(M.permutation_summands))
        _verify(G, res)
        return res
    Mv = dual(M)
    summands, pi = _surject_permutation(G, Mv)
    Pp = permutation_sum(G, summands)
    m = Pp.rank
    ker = intmat.kernel_basis(pi, m) if n else intmat.identity(m)
    r = len(ker[0]) if ker and ker[0] else 0
    q_action = []
    for g in G.elements:
        if r == 0:
            q_action.append([])
            continue
        img = intmat.matmul(Pp.action[g], ker)
        coords = intmat.solve(ker, img, r)
        if coords is None:
            raise InternalError("kernel is not G-stable")
        q_action.append(coords)
    Q = GLattice(G, q_action, rank=r, name="Q", check=False)
    F = dual(Q)
    F.name = "F"
    P = dual(Pp)
    inclusion = intmat.transpose(pi, m) if n else [[] for _ in range(m)]
    projection = intmat.transpose(ker, r) if r else []
    res = FlasqueResolution(M, P, F, inclusion, projection, tuple(summands))
    _verify(G, res)
    return res


def _verify(G: FiniteGroup, res: FlasqueResolution) -> None:
    M, P, F = res.M, res.P, res.F
    if P.rank != M.rank + F.rank:
        raise InternalError("ranks do not add up")
    if M.rank:
        f = intmat.invariant_factors(res.inclusion, M.rank)
        if len(f) != M.rank or any(x != 1 for x in f):
            raise InternalError("inclusion is not primitive")
    if F.rank:
        f = intmat.invariant_factors(res.projection, P.rank)
        if len(f) != F.rank or any(x != 1 for x in f):
            raise InternalError("projection is not surjective")
        if M.rank and any(any(x for x in row) for row in intmat.matmul(res.projection, res.inclusion)):
            raise InternalError("composite is not zero")
    for g in G.elements:
        if M.rank and intmat.matmul(res.inclusion, M.action[g]) != intmat.matmul(P.action[g], res.inclusion):
            raise InternalError("inclusion is not G-equivariant")
        if F.rank and intmat.matmul(res.projection, P.action[g]) != intmat.matmul(F.action[g], res.projection):
            raise InternalError("projection is not G-equivariant")
    if not P.is_permutation:
        raise InternalError("middle term is not a declared permutation lattice")
    if not is_flasque(G, F):
        raise InternalError("cokernel is not flasque")


def verify_resolution(G: FiniteGroup, res: FlasqueResolution) -> bool:
    """Re-run every post-condition; False instead of raising."""
    try:
        _verify(G, res)
    except InternalError:
        return False
    return True
