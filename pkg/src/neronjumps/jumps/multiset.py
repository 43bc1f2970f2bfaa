"""Multisets of jumps in [0, 1) and of d-jumps in Z/dZ."""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import ceil, lcm
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from ..errors import InconsistencyError, StructuralError

Number = Union[int, Fraction, str]


def _frac(x: Number) -> Fraction:
    return Fraction(x)


class JumpMultiset:
    """Sorted (value, multiplicity) pairs with values in [0, 1)."""

    __slots__ = ("entries",)

    def __init__(self, data: Union[Mapping[Number, int], Iterable[Number]] = ()):
        c: Counter = Counter()
        items = data.items() if isinstance(data, Mapping) else ((x, 1) for x in data)
        for v, m in items:
            v = _frac(v)
            if not 0 <= v < 1:
                raise StructuralError(f"jump {v} is not in [0, 1)")
            if m < 0:
                raise StructuralError("negative multiplicity")
            c[v] += int(m)
        self.entries: Tuple[Tuple[Fraction, int], ...] = tuple(sorted((v, m) for v, m in c.items() if m))

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.entries)

    def as_dict(self) -> Dict[Fraction, int]:
        return dict(self.entries)

    def values(self) -> List[Fraction]:
        """Sorted list with repetition."""
        return [v for v, m in self.entries for _ in range(m)]

    def multiplicity(self, v: Number) -> int:
        return self.as_dict().get(_frac(v), 0)

    def __iter__(self) -> Iterator[Tuple[Fraction, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __add__(self, other: "JumpMultiset") -> "JumpMultiset":
        c = Counter(self.as_dict())
        c.update(other.as_dict())
        return JumpMultiset(c)

    def __sub__(self, other: "JumpMultiset") -> "JumpMultiset":
        c = Counter(self.as_dict())
        for v, m in other.entries:
            if c[v] < m:
                raise InconsistencyError(f"jump {v} (x{m}) is not contained in {self}")
            c[v] -= m
        return JumpMultiset(c)

    def scaled(self, d0: int) -> "JumpMultiset":
        """{d0 * j mod 1}."""
        c: Counter = Counter()
        for v, m in self.entries:
            w = d0 * v
            c[w - (w.numerator // w.denominator)] += m
        return JumpMultiset(c)

    def c_tame(self) -> Fraction:
        return sum((v * m for v, m in self.entries), Fraction(0))

    def denominator_lcm(self) -> int:
        """e(G): lcm of the jump denominators (1 when empty)."""
        return lcm(1, *(v.denominator for v, _ in self.entries))

    def min_gap(self) -> Fraction | None:
        vs = [v for v, _ in self.entries]
        if len(vs) < 2:
            return None
        return min(b - a for a, b in zip(vs, vs[1:]))

    def threshold(self) -> int:
        """N(G) = ceil(1 / min gap), and 0 with fewer than two distinct jumps."""
        g = self.min_gap()
        return 0 if g is None else ceil(1 / g)

    def __eq__(self, other) -> bool:
        return isinstance(other, JumpMultiset) and other.entries == self.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __str__(self) -> str:
        return ", ".join(f"{v}:{m}" for v, m in self.entries) or "(empty)"

    def __repr__(self) -> str:
        return f"JumpMultiset({self})"


class DJumpMultiset:
    """Residues mod d with multiplicities."""

    __slots__ = ("modulus", "entries")

    def __init__(self, modulus: int, data: Union[Mapping[int, int], Iterable[int]] = ()):
        if modulus < 1:
            raise StructuralError("modulus must be positive")
        c: Counter = Counter()
        items = data.items() if isinstance(data, Mapping) else ((x, 1) for x in data)
        for r, m in items:
            if m < 0:
                raise StructuralError("negative multiplicity")
            c[int(r) % modulus] += int(m)
        self.modulus = modulus
        self.entries: Tuple[Tuple[int, int], ...] = tuple(sorted((r, m) for r, m in c.items() if m))

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.entries)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.entries)

    def values(self) -> List[int]:
        return [r for r, m in self.entries for _ in range(m)]

    def total(self) -> int:
        """Sum of residues in {0, ..., d-1} with multiplicity."""
        return sum(r * m for r, m in self.entries)

    def _same(self, other: "DJumpMultiset") -> None:
        if other.modulus != self.modulus:
            raise StructuralError(f"moduli {self.modulus} and {other.modulus} differ")

    def __add__(self, other: "DJumpMultiset") -> "DJumpMultiset":
        self._same(other)
        c = Counter(self.as_dict())
        c.update(other.as_dict())
        return DJumpMultiset(self.modulus, c)

    def __sub__(self, other: "DJumpMultiset") -> "DJumpMultiset":
        self._same(other)
        c = Counter(self.as_dict())
        for r, m in other.entries:
            if c[r] < m:
                raise InconsistencyError(f"d-jump {r} (x{m}) is not contained in {self}")
            c[r] -= m
        return DJumpMultiset(self.modulus, c)

    def reduce(self, d: int) -> "DJumpMultiset":
        """Image under Z/(self.modulus) -> Z/d (d must divide the modulus)."""
        if self.modulus % d:
            raise StructuralError(f"{d} does not divide {self.modulus}")
        return DJumpMultiset(d, _reduce_counts(self.entries, d))

    def __eq__(self, other) -> bool:
        return isinstance(other, DJumpMultiset) and other.modulus == self.modulus and other.entries == self.entries

    def __hash__(self) -> int:
        return hash((self.modulus, self.entries))

    def __str__(self) -> str:
        return ", ".join(f"{r}:{m}" for r, m in self.entries) or "(empty)"

    def __repr__(self) -> str:
        return f"DJumpMultiset(mod {self.modulus}: {self})"


def _reduce_counts(entries, d: int) -> Counter:
    c: Counter = Counter()
    for r, m in entries:
        c[r % d] += m
    return c


def parse_multiset(text: str) -> Dict[Fraction, int]:
    """Parse "0:3, 1/2:3" into {0: 3, 1/2: 3}."""
    out: Dict[Fraction, int] = {}
    text = text.strip()
    if not text or text == "(empty)":
        return out
    for part in text.split(","):
        v, _, m = part.strip().partition(":")
        out[Fraction(v.strip())] = out.get(Fraction(v.strip()), 0) + int(m or 1)
    return out
