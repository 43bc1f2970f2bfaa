"""Finite fields F_q with vectorised arithmetic on numpy arrays.

Elements are encoded as integers 0..q-1. For a prime field that is the
residue itself; for F_{p^s} it is the base-p digit string of the
coefficient vector in the power basis of a primitive modulus.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import List, Tuple

import numpy as np

from ..errors import RootOfUnityError, StructuralError, UnsupportedInput

PRIME_LIMIT = 2**31
EXTENSION_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> Tuple[int, int]:
    """Return (p, s) with q = p**s, or raise."""
    if q < 2:
        raise StructuralError(f"{q} is not a prime power")
    p = 2
    while q % p:
        p += 1
        if p * p > q:
            p = q
            break
    s, r = 0, q
    while r % p == 0:
        r //= p
        s += 1
    if r != 1:
        raise StructuralError(f"{q} is not a prime power")
    return p, s


def _factor(n: int) -> List[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


class FqField:
    """The finite field with q elements.

    Use :func:`get_field` to obtain cached instances.
    """

    def __init__(self, q: int):
        p, s = prime_power(q)
        self.q, self.p, self.s = q, p, s
        if s == 1:
            if q >= PRIME_LIMIT:
                raise UnsupportedInput(f"q={q} exceeds the desk-scale bound 2^31")
            self._generator = None
        else:
            if q > EXTENSION_LIMIT:
                raise UnsupportedInput(
                    f"extension fields are tabulated; q={q} > {EXTENSION_LIMIT}"
                )
            self._build_tables()

    # -- construction -------------------------------------------------
    def _build_tables(self) -> None:
        p, s, q = self.p, self.s, self.q
        for tail in product(range(p), repeat=s):
            modulus = list(tail)  # x^s = -(c_0 + c_1 x + ...)
            if modulus[0] == 0:
                continue
            exp = np.zeros(q - 1, dtype=np.int64)
            vec = [1] + [0] * (s - 1)
            seen = set()
            ok = True
            for k in range(q - 1):
                code = sum(c * p**i for i, c in enumerate(vec))
                if code in seen:
                    ok = False
                    break
                seen.add(code)
                exp[k] = code
                top = vec[-1]
                vec = [0] + vec[:-1]
                vec = [(v - top * c) % p for v, c in zip(vec, modulus)]
            if ok:
                self.modulus = modulus
                break
        else:  # pragma: no cover - a primitive polynomial always exists
            raise StructuralError("no primitive modulus found")
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        digits = np.array([[(a // p**i) % p for i in range(s)] for a in range(q)], dtype=np.int64)
        weights = p ** np.arange(s, dtype=np.int64)
        self._add = (((digits[:, None, :] + digits[None, :, :]) % p) @ weights).astype(np.int64)
        self._neg = ((-digits) % p) @ weights
        mul = np.zeros((q, q), dtype=np.int64)
        nz = np.arange(1, q)
        mul[1:, 1:] = exp[(log[nz][:, None] + log[nz][None, :]) % (q - 1)]
        self._mul = mul
        self._exp, self._log = exp, log

    # -- scalars ------------------------------------------------------
    @property
    def is_prime(self) -> bool:
        return self.s == 1

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p if self.s == 1 else int(self._add[a, b])

    def neg(self, a: int) -> int:
        return (-a) % self.p if self.s == 1 else int(self._neg[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p if self.s == 1 else int(self._mul[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        if self.s == 1:
            return pow(a, -1, self.p)
        return int(self._exp[(-self._log[a]) % (self.q - 1)])

    def from_int(self, n: int) -> int:
        """Image of an integer under Z -> F_q."""
        r = n % self.p
        return r  # prime-subfield elements have the same code in both encodings

    def primitive_element(self) -> int:
        if self.s > 1:
            return int(self._exp[1])
        if self._generator is None:
            ps = _factor(self.q - 1)
            g = 1 if self.q == 2 else 2
            while any(pow(g, (self.q - 1) // r, self.q) == 1 for r in ps):
                g += 1
            self._generator = g
        return self._generator

    def power(self, a: int, n: int) -> int:
        if self.s == 1:
            return pow(a, n, self.p)
        if a == 0:
            return 0 if n else 1
        return int(self._exp[(self._log[a] * n) % (self.q - 1)])

    def root_of_unity(self, n: int) -> int:
        """A primitive n-th root of unity, if n divides q - 1."""
        if (self.q - 1) % n:
            raise RootOfUnityError(f"F_{self.q} has no primitive {n}-th root of unity")
        return self.power(self.primitive_element(), (self.q - 1) // n)

    # -- arrays -------------------------------------------------------
    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a + b) % self.p if self.s == 1 else self._add[a, b]

    def vsub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return (a - b) % self.p if self.s == 1 else self._add[a, self._neg[b]]

    def vscale(self, c: int, a: np.ndarray) -> np.ndarray:
        return (a * c) % self.p if self.s == 1 else self._mul[c, a]

    def conv(self, a: np.ndarray, b: np.ndarray, length: int) -> np.ndarray:
        """Product of two coefficient vectors truncated to ``length`` terms."""
        a = a[:length]
        b = b[:length]
        out = np.zeros(length, dtype=np.int64)
        if len(a) == 0 or len(b) == 0:
            return out
        if self.s == 1:
            if (self.p - 1) ** 2 * min(len(a), len(b)) < 2**62:
                full = np.convolve(a, b)
            else:
                full = np.convolve(a.astype(object), b.astype(object))
            k = min(length, len(full))
            out[:k] = np.asarray(full[:k] % self.p, dtype=np.int64)
            return out
        for i in np.nonzero(a)[0]:
            i = int(i)
            if i >= length:
                break
            k = min(length - i, len(b))
            out[i:i + k] = self._add[out[i:i + k], self._mul[a[i], b[:k]]]
        return out

    def series_inverse(self, u: np.ndarray, length: int) -> np.ndarray:
        """Inverse of a unit power series (u[0] != 0) to ``length`` terms."""
        if length <= 0:
            return np.zeros(0, dtype=np.int64)
        if u[0] == 0:
            raise ZeroDivisionError("series is not a unit")
        inv = np.zeros(length, dtype=np.int64)
        inv[0] = self.inv(int(u[0]))
        known = 1
        while known < length:
            # Newton step: v <- v (2 - u v)
            new = min(2 * known, length)
            uv = self.conv(u[:new], inv[:new], new)
            two_minus = self.vsub(np.zeros(new, dtype=np.int64), uv)
            two_minus[0] = self.add(int(two_minus[0]), self.from_int(2))
            inv[:new] = self.conv(inv[:new], two_minus, new)
            known = new
        return inv

    def __repr__(self) -> str:
        return f"FqField({self.q})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FqField) and other.q == self.q

    def __hash__(self) -> int:
        return hash(("Fq", self.q))


@lru_cache(maxsize=None)
def get_field(q: int) -> FqField:
    return FqField(q)


class FqElem:
    """A single element of F_q with operator overloading."""

    __slots__ = ("field", "value")

    def __init__(self, field: FqField, value: int):
        if not 0 <= value < field.q:
            raise StructuralError(f"{value} is not an element code of F_{field.q}")
        self.field = field
        self.value = int(value)

    def _coerce(self, other) -> "FqElem":
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise StructuralError("elements of different fields")
            return other
        if isinstance(other, int):
            return FqElem(self.field, self.field.from_int(other))
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return FqElem(self.field, self.field.add(self.value, o.value))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return FqElem(self.field, self.field.sub(self.value, o.value))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return FqElem(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        return FqElem(self.field, self.field.mul(self.value, o.value))

    __rmul__ = __mul__

    def inverse(self) -> "FqElem":
        return FqElem(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return FqElem(self.field, self.field.power(self.value, n))

    def __eq__(self, other):
        if isinstance(other, int):
            other = FqElem(self.field, self.field.from_int(other))
        return isinstance(other, FqElem) and other.field == self.field and other.value == self.value

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FqElem({self.value} in F_{self.field.q})"
