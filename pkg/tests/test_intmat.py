import random

import pytest

from neronjumps import intmat


def _rand(m, n, rng, lo=-6, hi=6):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]


@pytest.mark.parametrize("seed", range(20))
def test_smith_decomposition(seed):
    rng = random.Random(seed)
    m, n = rng.randint(1, 5), rng.randint(1, 5)
    A = _rand(m, n, rng)
    U, D, V = intmat.smith(A, n)
    assert intmat.matmul(intmat.matmul(U, A), V) == D
    assert intmat.is_unimodular(U) and intmat.is_unimodular(V)
    diag = intmat.diagonal(D)
    nz = [x for x in diag if x]
    assert all(x > 0 for x in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    for i in range(m):
        for j in range(n):
            if i != j:
                assert D[i][j] == 0


@pytest.mark.parametrize("seed", range(20))
def test_invariant_factors_wide_matches_plain_smith(seed):
    rng = random.Random(100 + seed)
    A = _rand(3, rng.randint(4, 9), rng)
    _, D, _ = intmat.smith(A)
    assert intmat.invariant_factors(A) == [x for x in intmat.diagonal(D) if x]


@pytest.mark.parametrize("seed", range(10))
def test_kernel_and_solve(seed):
    rng = random.Random(200 + seed)
    A = _rand(rng.randint(1, 6), 4, rng, -3, 3)
    K = intmat.kernel_basis(A, 4)
    if K and K[0]:
        assert all(x == 0 for row in intmat.matmul(A, K) for x in row)
        assert intmat.rank(A, 4) + len(K[0]) == 4
    x = [[rng.randint(-4, 4)] for _ in range(4)]
    b = intmat.matmul(A, x)
    y = intmat.solve(A, b, 4)
    assert y is not None and intmat.matmul(A, y) == b


def test_solve_reports_no_integer_solution():
    assert intmat.solve([[2]], [[1]], 1) is None


def test_column_basis_spans_same_lattice():
    A = [[2, 4, 6], [0, 3, 3]]
    B = intmat.column_basis(A)
    assert len(B[0]) == 2
    assert intmat.invariant_factors(B) == intmat.invariant_factors(A)


def test_det_and_big_entries():
    assert intmat.det([[2, 1], [1, 1]]) == 1
    big = 1 << 70
    assert intmat.matmul([[big]], [[big]]) == [[big * big]]
