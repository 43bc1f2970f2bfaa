"""Exact integer matrix algorithms (Python ints, lists of lists).

Everything here works on plain nested lists of Python ints so that entries
never overflow; products fall back to numpy only when the bounds allow it.
"""
from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

import numpy as np

Matrix = List[List[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def to_list(a) -> Matrix:
    return [[int(x) for x in row] for row in a]


def shape(a: Sequence[Sequence[int]], ncols: Optional[int] = None) -> Tuple[int, int]:
    m = len(a)
    n = len(a[0]) if m else (ncols or 0)
    return m, n


_SAFE = 1 << 62


def _maxabs(a: Matrix) -> int:
    return max((max(map(abs, r)) for r in a if r), default=0)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    n = len(b[0]) if b else 0
    k = len(b)
    if n and k and _maxabs(a) * _maxabs(b) * k < _SAFE:
        # no overflow possible: let numpy do it in int64
        return (np.array(a, dtype=np.int64) @ np.array(b, dtype=np.int64)).tolist()
    bt = list(zip(*b)) if b else [()] * n
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def transpose(a: Matrix, ncols: int = 0) -> Matrix:
    if not a:
        return [[] for _ in range(ncols)]
    return [list(r) for r in zip(*a)]


def hstack(*blocks: Matrix) -> Matrix:
    rows = len(blocks[0])
    return [sum((list(b[i]) for b in blocks), []) for i in range(rows)]


def vstack(*blocks: Matrix) -> Matrix:
    out: Matrix = []
    for b in blocks:
        out.extend(list(r) for r in b)
    return out


def block_diag(*blocks: Matrix) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = zeros(n, n)
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                out[off + i][off + j] = b[i][j]
        off += k
    return out


def smith(a: Matrix, ncols: Optional[int] = None, want_u: bool = True,
          want_v: bool = True) -> Tuple[Matrix, Matrix, Matrix]:
    """Return (U, D, V) with U*A*V = D diagonal, d_1 | d_2 | ..., d_i >= 0.

    U and V are unimodular. Transforms that are not wanted come back empty.
    """
    m, n = shape(a, ncols)
    D = [list(map(int, r)) for r in a]
    U = identity(m) if want_u else []
    V = identity(n) if want_v else []

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        if U:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, c):
        if c:
            D[dst] = [x + c * y for x, y in zip(D[dst], D[src])]
            if U:
                U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, c):
        if c:
            for r in D:
                r[dst] += c * r[src]
            for r in V:
                r[dst] += c * r[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // D[t][t]))
                    if D[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // D[t][t]))
                    if D[t][j]:
                        clean = False
            if not clean:
                # bring the smallest remaining edge entry to the pivot
                bi, bj = t, t
                for i in range(t + 1, m):
                    if D[i][t] and abs(D[i][t]) < abs(D[bi][bj]):
                        bi, bj = i, t
                for j in range(t + 1, n):
                    if D[t][j] and abs(D[t][j]) < abs(D[bi][bj]):
                        bi, bj = t, j
                swap_rows(t, bi)
                swap_cols(t, bj)
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if D[i][j] % D[t][t]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            if U:
                U[t] = [-x for x in U[t]]
    return U, D, V


def diagonal(d: Matrix) -> List[int]:
    m, n = shape(d)
    return [d[i][i] for i in range(min(m, n))]


def column_basis(a: Matrix, ncols: Optional[int] = None) -> Matrix:
    """Columns forming a basis of the column span of ``a`` (Hermite style).

    Off-diagonal entries are reduced against the pivots, which keeps them small.
    """
    m, n = shape(a, ncols)
    cols = [list(c) for c in zip(*a)] if m else []
    cols = [c for c in cols if any(c)]
    basis: List[List[int]] = []
    for i in range(m):
        live = [c for c in cols if c[i]]
        rest = [c for c in cols if not c[i]]
        while len(live) > 1:
            live.sort(key=lambda c: abs(c[i]))
            p = live[0]
            nxt = [p]
            for c in live[1:]:
                q = c[i] // p[i]
                c = [x - q * y for x, y in zip(c, p)]
                if c[i]:
                    nxt.append(c)
                elif any(c):
                    rest.append(c)
            live = nxt
        if live:
            p = live[0]
            if p[i] < 0:
                p = [-x for x in p]
            # reduce earlier basis vectors modulo the new pivot
            for k, b in enumerate(basis):
                q = b[i] // p[i]
                if q:
                    basis[k] = [x - q * y for x, y in zip(b, p)]
            basis.append(p)
        cols = rest
    if not basis:
        return [[] for _ in range(m)]
    return [list(r) for r in zip(*basis)]


def rank(a: Matrix, ncols: Optional[int] = None) -> int:
    _, D, _ = smith(a, ncols, want_u=False, want_v=False)
    return sum(1 for x in diagonal(D) if x)


def invariant_factors(a: Matrix, ncols: Optional[int] = None) -> List[int]:
    """Nonzero diagonal entries of the Smith form (including ones)."""
    m, n = shape(a, ncols)
    if n > m:
        a = column_basis(a, n)
        n = len(a[0]) if a and a[0] else 0
        if n == 0:
            return []
    _, D, _ = smith(a, n, want_u=False, want_v=False)
    return [x for x in diagonal(D) if x]


def kernel_basis(a: Matrix, ncols: Optional[int] = None) -> Matrix:
    """Columns spanning the integer kernel of ``a`` (a saturated sublattice).

    Returned as an n x k matrix.
    """
    m, n = shape(a, ncols)
    if m == 0:
        return identity(n)
    if m > n:
        # same kernel, fewer rows
        a = transpose(column_basis(transpose(a, n), m), n)
        if not a:
            return identity(n)
    _, D, V = smith(a, n, want_u=False)
    r = sum(1 for x in diagonal(D) if x)
    return [row[r:] for row in V]


def solve(a: Matrix, b: Matrix, ncols: Optional[int] = None) -> Optional[Matrix]:
    """An integer X with a*X = b, or None when no integer solution exists."""
    m, n = shape(a, ncols)
    k = len(b[0]) if b else 0
    if m == 0:
        return zeros(n, k)
    U, D, V = smith(a, n)
    ub = matmul(U, b)
    y = zeros(n, k)
    diag = diagonal(D)
    for i in range(m):
        di = diag[i] if i < len(diag) else 0
        for c in range(k):
            if di == 0:
                if ub[i][c]:
                    return None
            else:
                if ub[i][c] % di:
                    return None
                y[i][c] = ub[i][c] // di
    return matmul(V, y)


def det(a: Matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    M = [list(map(int, r)) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def is_unimodular(a: Matrix) -> bool:
    return len(a) == (len(a[0]) if a else 0) and abs(det(a)) == 1
