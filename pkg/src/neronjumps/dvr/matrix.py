"""Matrices over a truncated DVR and their Smith normal form."""
from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from ..errors import NotInjective, PrecisionExhausted, StructuralError
from .field import FqField
from .series import TruncSeries

PRECISION_ENV = "NERONJUMPS_PRECISION"
MAX_PRECISION_ENV = "NERONJUMPS_MAX_PRECISION"
DEFAULT_MAX_PRECISION = 1 << 12


def _as_base(base_grain) -> int:
    """Accept 5, Fraction(1, 5) or "1/5" and return the denominator 5."""
    g = Fraction(base_grain)
    if g <= 0 or g.numerator != 1:
        if g.denominator == 1 and g.numerator >= 1:
            return g.numerator
        raise StructuralError(f"base grain must be 1/b, got {base_grain}")
    return g.denominator


class DvrMatrix:
    """A rows x cols matrix of TruncSeries sharing one denominator N.

    ``base`` is b where t^(1/b) is the uniformizer of the ring the matrix is
    defined over. b must divide N.
    """

    def __init__(self, entries: Sequence[Sequence[TruncSeries]], base: Union[int, Fraction, str] = 1):
        rows = [list(r) for r in entries]
        if not rows or not rows[0]:
            raise StructuralError("empty matrix")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise StructuralError("ragged matrix")
        first = rows[0][0]
        for r in rows:
            for x in r:
                first._check(x)
        self.entries = rows
        self.rows, self.cols = len(rows), ncols
        self.N = first.N
        self.field: FqField = first.field
        self.base = _as_base(base)
        if self.N % self.base:
            raise StructuralError(f"base grain 1/{self.base} does not divide 1/{self.N}")
        precs = [x.prec for r in rows for x in r if x.prec is not None]
        self.precision: Optional[int] = min(precs) if precs else None
        self.precision_hint: Optional[int] = None

    @property
    def is_exact(self) -> bool:
        return self.precision is None

    def __getitem__(self, ij: Tuple[int, int]) -> TruncSeries:
        return self.entries[ij[0]][ij[1]]

    def debug_dump(self) -> str:
        lines = []
        for i, r in enumerate(self.entries):
            for j, x in enumerate(r):
                v = x.valuation_numerator()
                vs = "inf" if v is None else str(v)
                lines.append(f"{i} {j} {vs}/{self.N} {[int(c) for c in x.coeffs]}")
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"DvrMatrix({self.rows}x{self.cols}, N={self.N}, base=1/{self.base}, F_{self.field.q})"


@dataclass(frozen=True)
class ElementaryDivisors:
    """SNF exponents in units of the base uniformizer, sorted ascending."""

    exponents: Tuple[int, ...]
    certified: bool
    base: int
    precision: int
    free_rank: int = 0
    pivots: Tuple[Tuple[int, int], ...] = dc_field(default=(), compare=False)

    @property
    def valuations(self) -> Tuple[Fraction, ...]:
        """Exponents as valuations in t."""
        return tuple(Fraction(a, self.base) for a in self.exponents)

    @property
    def length(self) -> int:
        return sum(self.exponents)


def _to_array(m: DvrMatrix, M: int) -> np.ndarray:
    k = m.N // m.base
    A = np.zeros((m.rows, m.cols, M), dtype=np.int64)
    for i, r in enumerate(m.entries):
        for j, x in enumerate(r):
            c = x.coeffs
            if k > 1 and np.any(np.delete(c, np.arange(0, len(c), k))):
                raise StructuralError(
                    f"entry ({i},{j}) has exponents outside the base grain 1/{m.base}"
                )
            c = c[::k][:M]
            A[i, j, : len(c)] = c
    return A


def _first_nonzero(A: np.ndarray) -> np.ndarray:
    M = A.shape[-1]
    nz = A != 0
    return np.where(nz.any(axis=-1), nz.argmax(axis=-1), M)


def _batched_update(fld: FqField, F: np.ndarray, R: np.ndarray, M: int) -> np.ndarray:
    """out[i, j] = truncated product F[i] * R[j] (both of length M)."""
    if fld.is_prime and M * (fld.p - 1) ** 2 < 2**53:
        a = np.arange(M)
        diff = a[None, :] - a[:, None]  # diff[x, y] = y - x
        T = np.where(diff >= 0, R[:, np.clip(diff, 0, M - 1)], 0).astype(np.float64)
        out = np.einsum("ix,jxy->ijy", F.astype(np.float64), T)
        return np.mod(out, fld.p).astype(np.int64)
    out = np.zeros((F.shape[0], R.shape[0], M), dtype=np.int64)
    for i in range(F.shape[0]):
        for j in range(R.shape[0]):
            out[i, j] = fld.conv(F[i], R[j], M)
    return out


def _snf_core(fld: FqField, A: np.ndarray, M: int):
    rows, cols, _ = A.shape
    active_r = list(range(rows))
    active_c = list(range(cols))
    pivots: List[Tuple[int, int]] = []
    vals: List[int] = []
    while active_c and active_r:
        sub = A[np.ix_(active_r, active_c)]
        V = _first_nonzero(sub)
        vmin = int(V.min())
        if vmin >= M:
            break
        # np.argmax returns the first hit in row-major order, i.e. the
        # lexicographically smallest (row, col) among the minima
        flat = int(np.argmax(V.ravel() == vmin))
        ri, ci = divmod(flat, len(active_c))
        r0, c0 = active_r[ri], active_c[ci]
        uinv = fld.series_inverse(A[r0, c0, vmin:], M - vmin)
        uinv_full = np.zeros(M, dtype=np.int64)
        uinv_full[: M - vmin] = uinv
        for j in active_c:
            A[r0, j] = fld.conv(A[r0, j], uinv_full, M)
        others = [i for i in active_r if i != r0 and A[i, c0].any()]
        rest_c = [j for j in active_c if j != c0]
        if others and rest_c:
            F = np.zeros((len(others), M), dtype=np.int64)
            for k, i in enumerate(others):
                F[k, : M - vmin] = A[i, c0, vmin:]
            R = A[r0, rest_c]
            upd = _batched_update(fld, F, R, M)
            block = A[np.ix_(others, rest_c)]
            A[np.ix_(others, rest_c)] = fld.vsub(block, upd)
        for i in others:
            A[i, c0] = 0
        active_r.remove(r0)
        active_c.remove(c0)
        pivots.append((r0, c0))
        vals.append(vmin)
    return vals, pivots, len(active_c)


# ---- exact rank over F_q(x) for the injectivity verdict ------------------

def _poly_trim(a: np.ndarray) -> np.ndarray:
    nz = np.nonzero(a)[0]
    return a[: int(nz[-1]) + 1] if len(nz) else a[:0]


def _poly_mul(fld: FqField, a, b):
    if len(a) == 0 or len(b) == 0:
        return np.zeros(0, dtype=np.int64)
    return _poly_trim(fld.conv(a, b, len(a) + len(b) - 1))


def _poly_sub(fld: FqField, a, b):
    n = max(len(a), len(b))
    x = np.zeros(n, dtype=np.int64)
    y = np.zeros(n, dtype=np.int64)
    x[: len(a)] = a
    y[: len(b)] = b
    return _poly_trim(fld.vsub(x, y))


def _poly_exact_div(fld: FqField, a, b):
    a = _poly_trim(a.copy())
    if len(a) == 0:
        return a
    db = len(b) - 1
    lead_inv = fld.inv(int(b[-1]))
    qd = len(a) - 1 - db
    if qd < 0:
        raise StructuralError("inexact polynomial division")
    q = np.zeros(qd + 1, dtype=np.int64)
    r = np.zeros(len(a), dtype=np.int64)
    r[:] = a
    for k in range(qd, -1, -1):
        c = fld.mul(int(r[k + db]), lead_inv)
        q[k] = c
        if c:
            r[k : k + db + 1] = fld.vsub(r[k : k + db + 1], fld.vscale(c, b))
    if r.any():
        raise StructuralError("inexact polynomial division")
    return q


def exact_rank(m: DvrMatrix) -> int:
    """Rank over the fraction field, for matrices with exact entries."""
    if not m.is_exact:
        raise StructuralError("exact rank needs exact entries")
    fld = m.field
    P = [[_poly_trim(x.coeffs.copy()) for x in r] for r in m.entries]
    rows, cols = m.rows, m.cols
    prev = np.array([1], dtype=np.int64)
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if len(P[i][c])), None)
        if piv is None:
            continue
        P[rank], P[piv] = P[piv], P[rank]
        for i in range(rank + 1, rows):
            for j in range(cols):
                if j == c:
                    continue
                num = _poly_sub(fld, _poly_mul(fld, P[i][j], P[rank][c]), _poly_mul(fld, P[i][c], P[rank][j]))
                P[i][j] = _poly_exact_div(fld, num, prev)
            P[i][c] = np.zeros(0, dtype=np.int64)
        prev = P[rank][c]
        rank += 1
    return rank


def _default_precision(m: DvrMatrix) -> int:
    env = os.environ.get(PRECISION_ENV)
    if env:
        return max(1, int(env))
    if m.precision_hint:
        return m.precision_hint
    k = m.N // m.base
    top = 0
    for r in m.entries:
        for x in r:
            v = x.valuation_numerator()
            if v is not None:
                top = max(top, -(-v // k))
    return 2 * top + 1


def snf_over_dvr(
    m: DvrMatrix,
    base_grain=None,
    precision: Optional[int] = None,
    auto_double: bool = True,
) -> ElementaryDivisors:
    """Smith normal form exponents of ``m`` over the DVR with uniformizer t^(1/b).

    ``precision`` is the working precision in base units. Exact inputs are
    retried with doubled precision when the remaining block is zero only to
    the known precision.
    """
    if base_grain is not None:
        b = _as_base(base_grain)
        if m.N % b:
            raise StructuralError(f"base grain 1/{b} does not divide 1/{m.N}")
        if b != m.base:
            m = DvrMatrix(m.entries, b)
    if m.rows < m.cols:
        raise StructuralError("snf_over_dvr expects a square or tall matrix")
    k = m.N // m.base
    cap = int(os.environ.get(MAX_PRECISION_ENV, DEFAULT_MAX_PRECISION))
    limit = None if m.precision is None else m.precision // k
    M = precision if precision is not None else _default_precision(m)
    if limit is not None:
        M = min(M, limit)
    while True:
        A = _to_array(m, max(M, 1))
        vals, pivots, missing = _snf_core(m.field, A, max(M, 1))
        if missing == 0:
            # over O/t^M the divisors are min(v, M), so v < M is exact
            certified = all(v < M for v in vals)
            return ElementaryDivisors(
                tuple(sorted(vals)), certified, m.base, M, m.rows - m.cols, tuple(pivots)
            )
        if m.is_exact and exact_rank(m) < m.cols:
            raise NotInjective(
                f"matrix has column rank {exact_rank(m)} < {m.cols}; the cokernel has a free part"
            )
        if not (m.is_exact and auto_double) or 2 * M > cap:
            raise PrecisionExhausted(
                f"remaining {missing} column(s) vanish to precision {M}/{m.base}; increase precision"
            )
        M *= 2
