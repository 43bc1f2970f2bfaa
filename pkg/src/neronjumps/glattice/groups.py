"""Finite groups given by multiplication tables."""
from __future__ import annotations

from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..errors import StructuralError, UnsupportedInput

SUBGROUP_CAP = 64

Subgroup = Tuple[int, ...]


class FiniteGroup:
    """Group on {0, ..., n-1} with 0 the identity and ``mul[a][b] = a*b``."""

    def __init__(self, mul_table: Sequence[Sequence[int]], name: str = "", check: bool = True):
        table = [list(map(int, r)) for r in mul_table]
        n = len(table)
        if n == 0 or any(len(r) != n for r in table):
            raise StructuralError("multiplication table must be square and nonempty")
        self.order = n
        self.mul_table = table
        self.name = name or f"G{n}"
        if check:
            self._verify()
        self._inv = [next(b for b in range(n) if table[a][b] == 0) for a in range(n)]
        self._subgroups: Optional[List[Subgroup]] = None

    def _verify(self) -> None:
        n, t = self.order, self.mul_table
        for row in t:
            if any(not 0 <= x < n for x in row):
                raise StructuralError("table entry out of range")
        if t[0] != list(range(n)) or [t[a][0] for a in range(n)] != list(range(n)):
            raise StructuralError("element 0 is not the identity")
        for a in range(n):
            if 0 not in t[a]:
                raise StructuralError(f"element {a} has no inverse")
        for a, b, c in product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise StructuralError(f"multiplication is not associative at ({a},{b},{c})")

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def closure(self, gens: Iterable[int]) -> Subgroup:
        seen = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul_table[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return tuple(sorted(seen))

    def is_subgroup(self, h: Iterable[int]) -> bool:
        hs = set(h)
        return 0 in hs and all(self.mul_table[a][self._inv[b]] in hs for a in hs for b in hs)

    def subgroups(self) -> List[Subgroup]:
        """All subgroups, sorted by (order, elements). Needs order <= 64."""
        if self.order > SUBGROUP_CAP:
            raise UnsupportedInput(f"subgroup enumeration is capped at order {SUBGROUP_CAP}")
        if self._subgroups is None:
            cyclic = {self.closure([g]) for g in self.elements}
            found = set(cyclic)
            frontier = set(cyclic)
            while frontier:
                new = set()
                for h in frontier:
                    for c in cyclic:
                        if set(c) <= set(h):
                            continue
                        j = self.closure(h + c)
                        if j not in found:
                            new.add(j)
                found |= new
                frontier = new
            self._subgroups = sorted(found, key=lambda s: (len(s), s))
        return list(self._subgroups)

    def whole(self) -> Subgroup:
        return tuple(range(self.order))

    def trivial_subgroup(self) -> Subgroup:
        return (0,)

    def left_cosets(self, h: Subgroup) -> List[Subgroup]:
        """Cosets gH in order of their smallest element."""
        seen = set()
        out = []
        for g in self.elements:
            if g in seen:
                continue
            c = tuple(sorted(self.mul_table[g][x] for x in h))
            seen.update(c)
            out.append(c)
        return out

    def generators(self) -> List[int]:
        """A small generating set, chosen greedily."""
        gens: List[int] = []
        cur: Subgroup = (0,)
        for g in self.elements:
            if g not in cur:
                gens.append(g)
                cur = self.closure(gens)
                if len(cur) == self.order:
                    break
        return gens

    def element_order(self, a: int) -> int:
        return len(self.closure([a]))

    def is_cyclic(self) -> bool:
        return any(self.element_order(a) == self.order for a in self.elements)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


# ---- constructors --------------------------------------------------------

def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], f"C{n}", check=False)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Element (a, b) is encoded as a * |H| + b."""
    m = h.order
    n = g.order * m
    t = [[0] * n for _ in range(n)]
    for x in range(n):
        a1, b1 = divmod(x, m)
        for y in range(n):
            a2, b2 = divmod(y, m)
            t[x][y] = g.mul(a1, a2) * m + h.mul(b1, b2)
    return FiniteGroup(t, f"{g.name}x{h.name}", check=False)


def from_permutations(gens: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    """Permutation group generated by ``gens`` (images of 0..k-1).

    Elements are numbered in breadth-first order from the identity, so the
    numbering is deterministic.
    """
    if not gens:
        return cyclic(1)
    k = len(gens[0])
    gens = [tuple(g) for g in gens]
    for g in gens:
        if sorted(g) != list(range(k)):
            raise StructuralError(f"{g} is not a permutation of 0..{k - 1}")
    ident = tuple(range(k))
    elems = [ident]
    index: Dict[Tuple[int, ...], int] = {ident: 0}
    i = 0
    while i < len(elems):
        x = elems[i]
        for g in gens:
            y = tuple(g[x[j]] for j in range(k))  # g after x
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
        i += 1
        if len(elems) > 10 * SUBGROUP_CAP:
            raise UnsupportedInput("permutation group too large")
    n = len(elems)
    # (a*b)(j) = a(b(j)): apply b first
    t = [[index[tuple(a[b[j]] for j in range(k))] for b in elems] for a in elems]
    grp = FiniteGroup(t, name or f"Perm{n}", check=False)
    grp.permutations = elems
    return grp


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n."""
    rot = [(j + 1) % n for j in range(n)]
    ref = [(-j) % n for j in range(n)]
    if n == 1:
        return cyclic(2)
    if n == 2:
        return direct_product(cyclic(2), cyclic(2))
    return from_permutations([rot, ref], f"D{n}")


def symmetric(k: int) -> FiniteGroup:
    if k < 2:
        return cyclic(1)
    gens = [[1, 0] + list(range(2, k)), list(range(1, k)) + [0]]
    return from_permutations(gens, f"S{k}")


def alternating(k: int) -> FiniteGroup:
    gens = [[(j + 1) % 3 if j < 3 else j for j in range(k)]]
    for m in range(3, k):
        # 3-cycles (0 1 m)
        g = list(range(k))
        g[0], g[1], g[m] = 1, m, 0
        gens.append(g)
    return from_permutations(gens, f"A{k}")


def quaternion() -> FiniteGroup:
    """Q8 as permutations of {±1, ±i, ±j, ±k} (regular representation)."""
    # encode 1,i,j,k,-1,-i,-j,-k as 0..7; left multiplication by i and by j
    base = {"ii": ("-", "1"), "jj": ("-", "1"), "kk": ("-", "1"),
            "ij": ("+", "k"), "jk": ("+", "i"), "ki": ("+", "j"),
            "ji": ("-", "k"), "kj": ("-", "i"), "ik": ("-", "j")}
    names = ["1", "i", "j", "k"]

    def mult(a: int, b: int) -> int:
        sa, na = divmod(a, 4)
        sb, nb = divmod(b, 4)
        s = sa ^ sb
        x, y = names[na], names[nb]
        if x == "1":
            r = y
        elif y == "1":
            r = x
        else:
            sign, r = base[x + y]
            s ^= sign == "-"
        return 4 * s + names.index(r)

    gens = [[mult(1, b) for b in range(8)], [mult(2, b) for b in range(8)]]
    return from_permutations(gens, "Q8")


def parse_group(name: str) -> FiniteGroup:
    """Cn, Dn (order 2n), Sn, An, Q8 and products joined by 'x', e.g. C2xC4."""
    parts = [s.strip() for s in name.split("x")]
    if len(parts) > 1:
        out = parse_group(parts[0])
        for s in parts[1:]:
            out = direct_product(out, parse_group(s))
        return out
    s = parts[0]
    if s == "Q8":
        return quaternion()
    kind, num = s[:1].upper(), s[1:]
    if not num.isdigit() or kind not in "CDSA":
        raise StructuralError(f"cannot parse group {name!r}")
    n = int(num)
    return {"C": cyclic, "D": dihedral, "S": symmetric, "A": alternating}[kind](n)
