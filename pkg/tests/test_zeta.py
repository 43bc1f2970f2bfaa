from fractions import Fraction

import pytest

from neronjumps.corpus import DESCRIPTORS, zeta_input_for, zeta_inputs
from neronjumps.errors import UnsupportedInput
from neronjumps.jumps import ZERO, AbelianTotallyMultiplicative, InducedTorus, c_tame, split_torus
from neronjumps.zeta import (
    KVarClass,
    LPolynomial,
    RationalSeries,
    TailTerm,
    ZetaInput,
    expand_power_sum,
    geometric_power_sum,
    tails_have_ctame_slope,
    verify_rationality,
    zeta_closed_form,
    zeta_truncated,
)

L = LPolynomial.monomial(1)
LM1 = LPolynomial([-1, 1])


def test_kvar_class():
    k = KVarClass(3, 1, 2)
    assert k.expand() == LM1 * L * 3
    assert k.expand().coeffs[-1] == 3


def test_split_gm_coefficients():
    z = zeta_input_for(split_torus(1), 2)
    s = zeta_truncated(z, 12)
    for d in range(1, 13):
        assert s.coefficient(d) == (LM1 if d % 2 else LPolynomial())


def test_induced_coefficient_at_5():
    z = zeta_input_for(InducedTorus(2, 1), 3)
    assert z.t_of_d(5) == 1 and z.t_of_d(4) == 2
    assert zeta_truncated(z, 6).coefficient(5) == LM1 * L.shift(2)
    assert zeta_truncated(z, 6).coefficient(3) == LPolynomial()


def test_split_gm_closed_form():
    z = zeta_input_for(split_torus(1), 2)
    closed = zeta_closed_form(z)
    assert closed.prefix == {}
    assert [(t.alpha, t.A, t.B) for t in closed.tails] == [(1, 0, 2)]
    assert verify_rationality(z, 50)


def test_induced_closed_form_tails():
    z = zeta_input_for(InducedTorus(2, 1), 3)
    closed = zeta_closed_form(z)
    assert {(t.A, t.B) for t in closed.tails} == {(3, 6)}
    assert all(Fraction(t.A, t.B) == c_tame(InducedTorus(2, 1)) for t in closed.tails)
    assert verify_rationality(z, 60)


def test_zero_dimensional():
    z = zeta_input_for(ZERO, 3)
    closed = zeta_closed_form(z)
    assert all(t.A == 0 for t in closed.tails)
    coeffs = closed.expand(20)
    assert set(coeffs) == {d for d in range(1, 21) if d % 3}
    assert all(c == LPolynomial([1]) for c in coeffs.values())


def test_geometric_power_sum_examples():
    assert geometric_power_sum(5, 3, 0) == [(1, 0, 1)]
    assert geometric_power_sum(0, 1, 1) == [(1, 1, 2)]
    assert geometric_power_sum(1, 2, 1) == [(1, 0, 1), (2, 1, 2)]


@pytest.mark.parametrize("t", range(6))
def test_geometric_power_sum_grid(t):
    for a in range(5):
        for b in range(1, 5):
            got = expand_power_sum(geometric_power_sum(a, b, t), 30)
            assert got == [Fraction((a + b * lam) ** t) for lam in range(30)]


@pytest.mark.parametrize("z", zeta_inputs(), ids=lambda z: z.name)
def test_corpus_rationality(z):
    assert verify_rationality(z, 60)
    assert tails_have_ctame_slope(z)


def test_corrupted_tail_detected():
    z = zeta_input_for(InducedTorus(2, 1), 3)
    closed = zeta_closed_form(z)
    t0 = closed.tails[0]
    bad = RationalSeries(closed.prefix, [TailTerm(t0.coeff, t0.alpha, t0.A + 1, t0.B)] + closed.tails[1:])
    res = verify_rationality(z, 60, bad)
    assert not res
    assert res.first_mismatch == t0.alpha + t0.B


def test_vacuous():
    assert verify_rationality(zeta_input_for(split_torus(1), 2), 0)


@pytest.mark.parametrize("z", [x for x in zeta_inputs() if x.variant == "torus"], ids=lambda z: z.name)
def test_class_recurrence(z):
    ep = z.e_prime()
    for d in range(1, 30):
        if d % z.p or (d + ep) % z.p:
            continue
        assert z.kvar_class(d) == z.kvar_class(d + ep)


def test_abelian_needs_seeds():
    g = AbelianTotallyMultiplicative(InducedTorus(2, 1))
    with pytest.raises(UnsupportedInput):
        zeta_input_for(g, 3)
    z = zeta_input_for(g, 3, t_seeds={1: 1, 2: 2}, phi_seeds={1: 2, 2: 3})
    assert z.phi_tors_of_d(5) == 5 * 2
    assert z.phi_tors_of_d(4) == 2**2 * 3
    closed = zeta_closed_form(z)
    assert max(t.power for t in closed.tails) == 3
    assert verify_rationality(z, 60)


def test_lpolynomial_text():
    assert (LM1 * L.shift(2)).to_text() == "(𝐋−1)𝐋³"
    assert LPolynomial([1, 1]).to_text() == "(L + 1)"


def test_base_change_zeta_matches_split_structure():
    from neronjumps.jumps import BaseChange

    a = zeta_truncated(zeta_input_for(BaseChange(InducedTorus(4, 1), 2), 3), 40).expand(40)
    b = zeta_truncated(zeta_input_for(InducedTorus(2, 2), 3), 40).expand(40)
    assert a == b
