import pytest

from neronjumps.errors import EquivarianceError, StructuralError
from neronjumps.weights import (
    GradedSubstitution,
    Scale,
    WeightMultiset,
    apply_scale,
    degree_bound_check,
    induced_weights,
    quartic_weight_doubling,
    thickness_norm_example,
)


def test_apply_scale_trivial():
    assert apply_scale(WeightMultiset(5, [1, 2]), Scale((0, 0)), 2) == WeightMultiset(5, [1, 2])


def test_apply_scale_doubles_first():
    assert apply_scale((5, [1, 2]), Scale((1, 0)), 2) == WeightMultiset(5, {2: 2})


def test_scale_torsor_order():
    Scale((1, 0), torsor_order=2, p=2)
    with pytest.raises(StructuralError):
        Scale((1, 1), torsor_order=2, p=2)
    with pytest.raises(StructuralError):
        apply_scale((5, [1]), Scale((1, 0)), 2)


@pytest.mark.parametrize("d", [5, 9, 13, 17, 21])
def test_quartic_weight_doubling(d):
    src, tgt = quartic_weight_doubling(d)
    w = (d - 1) // 4
    assert src == WeightMultiset(d, [w, 3 * w])
    assert tgt == WeightMultiset(d, [(d - 1) // 2])


def test_quartic_weight_doubling_d5():
    assert quartic_weight_doubling(5)[1] == WeightMultiset(5, [2])
    with pytest.raises(StructuralError):
        quartic_weight_doubling(7)


def test_identity_substitution():
    g = GradedSubstitution.identity(7, (1, 3, 5))
    assert induced_weights(g) == WeightMultiset(7, [1, 3, 5])


def test_product_substitution():
    g = GradedSubstitution(5, (1, 3), (frozenset({(1, 1)}),))
    assert induced_weights(g) == WeightMultiset(5, [4])


def test_inhomogeneous_substitution_rejected():
    g = GradedSubstitution(5, (1, 3), (frozenset({(1, 0), (0, 1)}),))
    with pytest.raises(EquivarianceError):
        induced_weights(g)


def test_composition():
    inner = GradedSubstitution(7, (1, 2), (frozenset({(2, 0)}), frozenset({(0, 1)})))
    outer = GradedSubstitution(7, (2, 2), (frozenset({(1, 1)}),))
    comp = inner.then(outer)
    assert comp.images == (frozenset({(2, 1)}),)
    assert induced_weights(comp) == WeightMultiset(7, [4])


def test_thickness():
    assert thickness_norm_example(4, 2) == 4
    assert thickness_norm_example(6, 2) == 2
    assert thickness_norm_example(5, 2) == 1


def test_degree_bound():
    assert degree_bound_check(Scale((1, 0)), 2, 4)
    assert degree_bound_check(Scale((0, 0, 0)), 5, 1)
    assert not degree_bound_check(Scale((2, 1)), 3, 26)
