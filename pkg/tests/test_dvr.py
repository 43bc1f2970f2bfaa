from fractions import Fraction

import numpy as np
import pytest

from neronjumps.dvr import (
    DvrMatrix,
    FqField,
    TruncSeries,
    build_induced_lie_matrix,
    build_nu1_lie_matrix,
    diagonal_monomial_matrix,
    get_field,
    integer_model_matrix,
    series_mul,
    snf_over_dvr,
)
from neronjumps.dvr.induced import poly_matmul, random_unimodular
from neronjumps.errors import NotInjective, PrecisionExhausted, RootOfUnityError, StructuralError, UnsupportedInput
from neronjumps import intmat


# ---- fields and series ----

@pytest.mark.parametrize("q", [2, 3, 4, 8, 9, 25, 31])
def test_field_axioms(q):
    F = FqField(q)
    for a in range(q):
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == F.from_int(1)
    g = F.primitive_element()
    assert len({F.power(g, k) for k in range(q - 1)}) == q - 1


def test_root_of_unity_missing():
    with pytest.raises(RootOfUnityError):
        get_field(7).root_of_unity(4)


def test_difference_of_squares():
    a = TruncSeries(31, 2, [1, 1], prec=3)
    b = TruncSeries(31, 2, [1, -1], prec=3)
    c = series_mul(a, b)
    assert c.prec == 3
    assert list(c.coeffs) == [1, 0, 30]


def test_zero_absorbs():
    a = TruncSeries(5, 1, [1, 2], prec=4)
    z = TruncSeries.zero(5, 1)
    c = series_mul(a, z)
    assert c.is_zero() and c.is_exact


def test_precision_propagation():
    a = TruncSeries.monomial(3, 4, 1, prec=4)
    c = series_mul(a, a)
    assert c.valuation() == Fraction(1, 2)
    assert c.precision == Fraction(5, 4)


def test_series_inverse():
    a = TruncSeries(7, 1, [3, 1, 4, 1, 5])
    inv = a.inverse(10)
    prod = series_mul(a, inv)
    assert list(prod.coeffs) == [1] and prod.prec == 10


# ---- SNF over the DVR ----

def test_diagonal_fractional():
    m = diagonal_monomial_matrix([1, 3], 5, 31)
    res = snf_over_dvr(m, Fraction(1, 5))
    assert res.exponents == (1, 3) and res.certified
    assert res.valuations == (Fraction(1, 5), Fraction(3, 5))


def test_identity():
    assert snf_over_dvr(diagonal_monomial_matrix([0, 0], 1, 2)).exponents == (0, 0)


@pytest.mark.parametrize(
    "e,f,d,q,expected",
    [
        (2, 1, 5, 31, (0, 2)),
        (1, 3, 7, 2, (0, 0, 0)),
        (3, 2, 7, 43, (0, 0, 2, 2, 4, 4)),
    ],
)
def test_induced_lie_matrix(e, f, d, q, expected):
    res = snf_over_dvr(build_induced_lie_matrix(e, f, d, q))
    assert res.exponents == expected and res.certified


def test_induced_matches_integer_snf_on_monomial_model():
    # valuation matrix of the basis change for e=2, d=5 is diagonal up to
    # integer unimodular moves
    U = [[1, 2], [0, 1]]
    V = [[1, 0], [3, 1]]
    m = integer_model_matrix(U, [0, 2], V, 5, 31)
    assert snf_over_dvr(m).exponents == (0, 2)
    _, D, _ = intmat.smith(intmat.matmul(intmat.matmul(U, [[1, 0], [0, 1]]), V))
    assert intmat.diagonal(D) == [1, 1]


@pytest.mark.parametrize("seed", range(8))
def test_unimodular_invariance(seed):
    fld = get_field(13)
    rng = np.random.default_rng(seed)
    exps = sorted(int(x) for x in rng.integers(0, 6, size=4))
    m = diagonal_monomial_matrix(exps, 3, 13, seed=seed)
    assert snf_over_dvr(m).exponents == tuple(exps)
    U = random_unimodular(fld, 4, rng, degree=2)
    assert U.shape[:2] == (4, 4)


def test_precision_monotone():
    m = build_induced_lie_matrix(3, 1, 7, 43, seed=3)
    lo = snf_over_dvr(m, precision=5)
    hi = snf_over_dvr(m, precision=40)
    assert lo.exponents == hi.exponents == (0, 2, 4)
    assert hi.precision >= lo.precision


def test_precision_exhausted_for_inexact_input():
    fld = get_field(5)
    x = TruncSeries(fld, 1, {}, prec=2)
    one = TruncSeries(fld, 1, [1])
    m = DvrMatrix([[one, TruncSeries.zero(fld, 1)], [TruncSeries.zero(fld, 1), x]])
    with pytest.raises(PrecisionExhausted):
        snf_over_dvr(m)


def test_not_injective():
    fld = get_field(5)
    one = TruncSeries(fld, 1, [1])
    m = DvrMatrix([[one, one], [one, one]])
    with pytest.raises(NotInjective):
        snf_over_dvr(m)


def test_tall_matrix_has_free_rank():
    fld = get_field(5)
    one = TruncSeries(fld, 1, [1])
    t = TruncSeries(fld, 1, [0, 1])
    res = snf_over_dvr(DvrMatrix([[t], [one]]))
    assert res.exponents == (0,) and res.free_rank == 1


def test_wide_matrix_rejected():
    fld = get_field(5)
    one = TruncSeries(fld, 1, [1])
    with pytest.raises(StructuralError):
        snf_over_dvr(DvrMatrix([[one, one]]))


def test_wild_and_bad_inputs():
    with pytest.raises(UnsupportedInput):
        build_induced_lie_matrix(2, 1, 3, 4)
    with pytest.raises(UnsupportedInput):
        build_induced_lie_matrix(3, 1, 4, 9)
    with pytest.raises(RootOfUnityError):
        build_induced_lie_matrix(4, 1, 5, 7)


def test_nu1_model():
    res = snf_over_dvr(build_nu1_lie_matrix(2, 3, 7, 3))
    assert res.exponents == (0, 0, 2, 2, 2, 4, 4, 4)


def test_debug_dump_format():
    m = diagonal_monomial_matrix([1, 0], 2, 5)
    lines = m.debug_dump().splitlines()
    assert lines[0] == "0 0 1/2 [0, 1]"
    assert lines[1].startswith("0 1 inf/2")


def test_extension_field_oracle():
    res = snf_over_dvr(build_induced_lie_matrix(3, 1, 5, 16))
    assert res.exponents == (0, 1, 3)


def test_poly_matmul_identity():
    fld = get_field(7)
    I = np.zeros((2, 2, 1), dtype=np.int64)
    I[0, 0, 0] = I[1, 1, 0] = 1
    A = np.arange(8, dtype=np.int64).reshape(2, 2, 2) % 7
    assert np.array_equal(poly_matmul(fld, I, A)[:, :, :2], A)
