"""Explicit Lie-algebra comparison matrices for the oracle.

For L/K with ramification e (tame) and residue degree f, and the tame
extension K(d) = K(t^(1/d)), we write down the matrix of
O_L (x) O_K(d) -> O_{L (x) K(d)} in monomial bases over O_K(d).
"""
from __future__ import annotations

from math import gcd
from typing import Optional

import numpy as np

from ..errors import RootOfUnityError, StructuralError, UnsupportedInput
from .field import FqField, get_field, prime_power
from .matrix import DvrMatrix
from .series import TruncSeries


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def poly_matmul(fld: FqField, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Product of matrices of polynomials (last axis = coefficients)."""
    m, n, da = A.shape
    n2, k, db = B.shape
    if n != n2:
        raise StructuralError("inner dimensions differ")
    C = np.zeros((m, k, da + db - 1), dtype=np.int64)
    if fld.is_prime and n * fld.p**2 < 2**62:
        for a in range(da):
            Aa = A[:, :, a]
            if not Aa.any():
                continue
            C[:, :, a:a + db] = (C[:, :, a:a + db] + np.einsum("ij,jkb->ikb", Aa, B)) % fld.p
        return C
    for i in range(m):
        for j in range(k):
            acc = np.zeros(da + db - 1, dtype=np.int64)
            for t in range(n):
                acc = fld.vadd(acc, fld.conv(A[i, t], B[t, j], da + db - 1))
            C[i, j] = acc
    return C


def random_unimodular(fld: FqField, n: int, rng: np.random.Generator, degree: int = 1) -> np.ndarray:
    """A random invertible matrix over F_q[x] with constant unit determinant.

    Built as P * D * L * R with P a permutation, D a constant diagonal of
    nonzero scalars and L, R uni-triangular with polynomial entries.
    """
    deg = degree + 1

    def rand_poly():
        return rng.integers(0, fld.q, size=deg, dtype=np.int64)

    L = np.zeros((n, n, deg), dtype=np.int64)
    R = np.zeros((n, n, deg), dtype=np.int64)
    for i in range(n):
        L[i, i, 0] = 1
        R[i, i, 0] = 1
        for j in range(i):
            L[i, j] = rand_poly()
            R[j, i] = rand_poly()
    D = np.zeros((n, n, 1), dtype=np.int64)
    perm = rng.permutation(n)
    for i in range(n):
        D[perm[i], i, 0] = int(rng.integers(1, fld.q))
    return poly_matmul(fld, D, poly_matmul(fld, L, R))


def _to_dvr(fld: FqField, C: np.ndarray, N: int, base: int, hint: Optional[int]) -> DvrMatrix:
    k = N // base
    rows = []
    for i in range(C.shape[0]):
        row = []
        for j in range(C.shape[1]):
            c = np.zeros(max(0, (C.shape[2] - 1) * k + 1), dtype=np.int64)
            c[::k] = C[i, j]
            row.append(TruncSeries(fld, N, c))
        rows.append(row)
    m = DvrMatrix(rows, base)
    m.precision_hint = hint
    return m


def _twist(fld: FqField, C: np.ndarray, seed: Optional[int]) -> np.ndarray:
    if seed is None:
        return C
    rng = np.random.default_rng(seed)
    n, k = C.shape[0], C.shape[1]
    U = random_unimodular(fld, n, rng)
    V = random_unimodular(fld, k, rng)
    return poly_matmul(fld, U, poly_matmul(fld, C, V))


def check_tame_parameters(e: int, d: int, q: int) -> int:
    """Validate (e, d, q) for the tame model and return p."""
    if e < 1 or d < 1:
        raise StructuralError("e and d must be positive")
    p, _ = prime_power(q)
    if e % p == 0:
        raise UnsupportedInput(f"p={p} divides e={e}: wild ramification is outside the oracle")
    if d % p == 0:
        raise UnsupportedInput(f"p={p} divides d={d}: K(d) must be tame")
    if (q - 1) % e:
        raise RootOfUnityError(f"F_{q} lacks the primitive {e}-th roots of unity needed to split L(x)K(d)")
    return p


def build_induced_lie_matrix(
    e: int,
    f: int,
    d: int,
    q: int,
    seed: Optional[int] = 0,
    unit_degree: int = 3,
) -> DvrMatrix:
    """Matrix of O_L (x) O_K(d) -> O_{L (x) K(d)} over O_K(d) = F_q[[t^(1/d)]].

    The uniformizer of L is pi = c t^(1/e) w(t^(1/e)) for a random unit w
    (chosen from ``seed``; ``seed=None`` gives pi = t^(1/e) and no twist).
    L (x) K(d) splits into gcd(e, d) copies of F_q((t^(1/N))), N = lcm(e, d);
    the k-th factor sends t^(1/e) to w^k t^(1/e) for a primitive e-th root w.
    The unramified degree-f part contributes I_f (x) C, and the result is
    multiplied on both sides by random unimodular matrices.
    """
    if f < 1:
        raise StructuralError("f must be positive")
    check_tame_parameters(e, d, q)
    fld = get_field(q)
    N = lcm(e, d)
    g = gcd(e, d)
    ep = e // g  # ramification of each factor over K(d)
    step = N // e  # t^(1/e) = y^step with y = t^(1/N)
    omega = fld.root_of_unity(e)

    rng = np.random.default_rng(seed)
    if seed is None:
        unit = np.array([1], dtype=np.int64)
    else:
        unit = rng.integers(0, fld.q, size=unit_degree + 1, dtype=np.int64)
        unit[0] = int(rng.integers(1, fld.q))

    # coordinates in x = t^(1/d) units; x = y^ep
    length = (e - 1) * (len(unit)) * step + 1
    cols = []
    for i in range(e):
        blocks = []
        for k in range(g):
            wk = fld.power(omega, k)
            # phi_k(pi) in y-units
            pi_k = np.zeros((len(unit)) * step + 1, dtype=np.int64)
            for m, c in enumerate(unit):
                pi_k[(1 + m) * step] = fld.mul(int(c), fld.power(wk, 1 + m))
            s = np.zeros(1, dtype=np.int64)
            s[0] = 1
            for _ in range(i):
                s = fld.conv(s, pi_k, len(s) + len(pi_k) - 1)
            s_full = np.zeros(length, dtype=np.int64)
            s_full[: len(s)] = s[:length]
            for l in range(ep):
                blocks.append(s_full[l::ep])
        cols.append(blocks)
    width = max(len(b) for col in cols for b in col)
    C = np.zeros((e, e, width), dtype=np.int64)
    for i, col in enumerate(cols):
        for r, b in enumerate(col):
            C[r, i, : len(b)] = b
    if f > 1:
        big = np.zeros((e * f, e * f, width), dtype=np.int64)
        for b in range(f):
            big[b * e:(b + 1) * e, b * e:(b + 1) * e] = C
        C = big
    C = _twist(fld, C, None if seed is None else seed + 1)
    hint = 2 * ((d * (e - 1)) // e) + 1
    return _to_dvr(fld, C, N, d, hint)


def build_nu1_lie_matrix(r: int, p: int, d: int, q: int, seed: Optional[int] = 0) -> DvrMatrix:
    """Monomial model of the comparison map for the wound group nu_1(r).

    Diagonal t^(floor(d i / p) / d) entries (multiplicity p^(r-1) for each
    1 <= i < p, plus p^(r-1) - 1 unit entries), twisted by random unimodular
    matrices over F_q[[t^(1/d)]].
    """
    qp, _ = prime_power(q)
    if qp != p:
        raise StructuralError(f"q={q} is not a power of p={p}")
    if d % p == 0:
        raise UnsupportedInput(f"p={p} divides d={d}")
    if r < 1:
        raise StructuralError("r must be positive")
    fld = get_field(q)
    mult = p ** (r - 1)
    exps = [0] * (mult - 1)
    for i in range(1, p):
        exps += [(d * i) // p] * mult
    n = len(exps)
    C = np.zeros((n, n, max(exps) + 1), dtype=np.int64)
    for k, a in enumerate(exps):
        C[k, k, a] = 1
    C = _twist(fld, C, seed)
    hint = 2 * max(exps) + 1
    return _to_dvr(fld, C, d, d, hint)


def diagonal_monomial_matrix(exponents, base: int, q: int, seed: Optional[int] = None) -> DvrMatrix:
    """diag(t^(a_i / base)), optionally twisted by random unimodular matrices."""
    fld = get_field(q)
    exps = list(exponents)
    n = len(exps)
    C = np.zeros((n, n, max(exps, default=0) + 1), dtype=np.int64)
    for k, a in enumerate(exps):
        C[k, k, a] = 1
    C = _twist(fld, C, seed)
    return _to_dvr(fld, C, base, base, 2 * max(exps, default=0) + 1)


def integer_model_matrix(U, exponents, V, base: int, q: int) -> DvrMatrix:
    """U * diag(t^(a_i/base)) * V for integer matrices U, V, reduced mod p."""
    fld = get_field(q)
    n = len(exponents)
    top = max(exponents, default=0) + 1
    Ua = np.array(U, dtype=np.int64).reshape(n, n, 1) % fld.p
    Va = np.array(V, dtype=np.int64).reshape(n, n, 1) % fld.p
    D = np.zeros((n, n, top), dtype=np.int64)
    for k, a in enumerate(exponents):
        D[k, k, a] = 1
    C = poly_matmul(fld, Ua, poly_matmul(fld, D, Va))
    return _to_dvr(fld, C, base, base, 2 * top + 1)
