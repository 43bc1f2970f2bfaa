"""Weights of mu_d-actions on regular parameters, scales and thickness."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import EquivarianceError, StructuralError

Exponent = Tuple[int, ...]


class WeightMultiset:
    """Residues mod d with multiplicities."""

    __slots__ = ("modulus", "entries")

    def __init__(self, modulus: int, data: Union[Mapping[int, int], Iterable[int]] = ()):
        if modulus < 1:
            raise StructuralError("modulus must be positive")
        c: Counter = Counter()
        items = data.items() if isinstance(data, Mapping) else ((x, 1) for x in data)
        for r, m in items:
            c[int(r) % modulus] += int(m)
        self.modulus = modulus
        self.entries = tuple(sorted((r, m) for r, m in c.items() if m))

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.entries)

    def values(self) -> List[int]:
        return [r for r, m in self.entries for _ in range(m)]

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightMultiset) and (other.modulus, other.entries) == (self.modulus, self.entries)

    def __hash__(self):
        return hash((self.modulus, self.entries))

    def __str__(self) -> str:
        return ", ".join(f"{r}:{m}" for r, m in self.entries) or "(empty)"

    def __repr__(self) -> str:
        return f"WeightMultiset(mod {self.modulus}: {self})"


def p_adic_valuation(n: int, p: int) -> int:
    if n == 0:
        raise StructuralError("valuation of 0")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


@dataclass(frozen=True)
class Scale:
    """Exponents (e_1, ..., e_n); optionally tied to a torsor of order p^(sum e_i)."""

    exponents: Tuple[int, ...]
    torsor_order: Optional[int] = None
    p: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(x) for x in self.exponents))
        if any(x < 0 for x in self.exponents):
            raise StructuralError("scale exponents must be nonnegative")
        if self.torsor_order is not None:
            if self.p is None:
                raise StructuralError("a torsor order needs the prime p")
            if self.p ** sum(self.exponents) != self.torsor_order:
                raise StructuralError(
                    f"sum of exponents {sum(self.exponents)} does not match torsor order {self.torsor_order}"
                )

    @property
    def total(self) -> int:
        return sum(self.exponents)


def apply_scale(w: Union[WeightMultiset, Tuple[int, Sequence[int]]], s: Scale, p: int) -> WeightMultiset:
    """{p^(e_i) j_i mod d}.

    A WeightMultiset is paired with the scale in sorted order; pass
    (d, [j_1, ..., j_n]) to fix the pairing explicitly.
    """
    if isinstance(w, WeightMultiset):
        d, js = w.modulus, w.values()
    else:
        d, js = w[0], list(w[1])
    if len(js) != len(s.exponents):
        raise StructuralError(f"{len(js)} weights but {len(s.exponents)} scale exponents")
    return WeightMultiset(d, [(p**e) * j for j, e in zip(js, s.exponents)])


@dataclass(frozen=True)
class GradedSubstitution:
    """s_i -> sum over xi in images[i] of (nonzero) * t^xi, source weights mod d."""

    modulus: int
    source_weights: Tuple[int, ...]
    images: Tuple[FrozenSet[Exponent], ...]

    def __post_init__(self):
        object.__setattr__(self, "source_weights", tuple(int(x) % self.modulus for x in self.source_weights))
        m = len(self.source_weights)
        imgs = []
        for supp in self.images:
            fs = frozenset(tuple(int(a) for a in xi) for xi in supp)
            for xi in fs:
                if len(xi) != m or any(a < 0 for a in xi):
                    raise StructuralError(f"exponent vector {xi} does not match {m} source parameters")
            imgs.append(fs)
        object.__setattr__(self, "images", tuple(imgs))

    @classmethod
    def identity(cls, modulus: int, weights: Sequence[int]) -> "GradedSubstitution":
        m = len(weights)
        imgs = [frozenset({tuple(int(i == k) for i in range(m))}) for k in range(m)]
        return cls(modulus, tuple(weights), tuple(imgs))

    def monomial_weight(self, xi: Exponent) -> int:
        return sum(a * j for a, j in zip(xi, self.source_weights)) % self.modulus

    def target_weights(self) -> List[int]:
        out = []
        for i, supp in enumerate(self.images):
            ws = {self.monomial_weight(xi) for xi in supp}
            if len(ws) != 1:
                if not ws:
                    raise EquivarianceError(f"image of s_{i + 1} is zero; its weight is undefined")
                raise EquivarianceError(
                    f"image of s_{i + 1} mixes weights {sorted(ws)} mod {self.modulus}"
                )
            out.append(ws.pop())
        return out

    def then(self, outer: "GradedSubstitution") -> "GradedSubstitution":
        """Substitute self into ``outer`` (outer's parameters are self's targets).

        Supports are composed as Minkowski sums, i.e. assuming no cancellation.
        """
        if len(outer.source_weights) != len(self.images):
            raise StructuralError("outer substitution expects a different number of parameters")
        if outer.modulus != self.modulus:
            raise StructuralError("moduli differ")
        m = len(self.source_weights)
        images = []
        for supp in outer.images:
            total = set()
            for eta in supp:
                acc = {tuple([0] * m)}
                for i, k in enumerate(eta):
                    for _ in range(k):
                        acc = {tuple(a + b for a, b in zip(x, y)) for x in acc for y in self.images[i]}
                total |= acc
            images.append(frozenset(total))
        return GradedSubstitution(self.modulus, self.source_weights, tuple(images))


def induced_weights(g: GradedSubstitution) -> WeightMultiset:
    """Weights on the target parameters of a homogeneous substitution."""
    return WeightMultiset(g.modulus, g.target_weights())


def thickness_norm_example(deg: int, p: int) -> int:
    """Largest power of p dividing deg."""
    if deg < 1:
        raise StructuralError("degree must be positive")
    return p ** p_adic_valuation(deg, p)


def degree_bound_check(scale: Scale, p: int, bound: int) -> bool:
    """p^(e_1 + ... + e_n) <= bound."""
    if bound < 1:
        raise StructuralError("bound must be positive")
    return p**scale.total <= bound


def quartic_weight_doubling(d: int) -> Tuple[WeightMultiset, WeightMultiset]:
    """Source weights ((d-1)/4, 3(d-1)/4) on (a_1, a_3) and the weight of b_1 -> a_1^2."""
    if d % 4 != 1:
        raise StructuralError("needs d = 1 mod 4")
    w = (d - 1) // 4
    sub = GradedSubstitution(d, (w, 3 * w), (frozenset({(2, 0)}),))
    return WeightMultiset(d, [w, 3 * w]), induced_weights(sub)
