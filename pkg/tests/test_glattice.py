import pytest

from neronjumps.corpus import groups, lattices, permutation_lattices
from neronjumps.errors import StructuralError
from neronjumps.glattice import (
    GLattice,
    augmentation_ideal,
    cyclic,
    dihedral,
    direct_sum,
    dual,
    flasque_resolve,
    invariant_rank,
    is_flasque,
    norm_one_character,
    parse_group,
    permutation,
    quaternion,
    regular,
    sign,
    symmetric,
    tate_cohomology,
    trivial,
    verify_resolution,
    zero,
)
from neronjumps import intmat

C2 = cyclic(2)
WHOLE2 = C2.whole()


def test_group_orders_and_subgroups():
    assert [len(cyclic(n).subgroups()) for n in (1, 2, 4, 6, 12)] == [1, 2, 3, 4, 6]
    assert len(symmetric(3).subgroups()) == 6
    assert len(dihedral(4).subgroups()) == 10
    assert len(quaternion().subgroups()) == 6
    assert parse_group("C2xC2").order == 4
    with pytest.raises(StructuralError):
        parse_group("X5")


def test_h0_trivial_c2():
    t = tate_cohomology(C2, WHOLE2, trivial(C2), 0)
    assert t.invariant_factors == (2,)
    assert str(t) == "Z/2"


def test_hminus1_trivial_c2():
    assert tate_cohomology(C2, WHOLE2, trivial(C2), -1).is_trivial


@pytest.mark.parametrize("degree", [-1, 0])
def test_regular_is_cohomologically_trivial(degree):
    assert tate_cohomology(C2, WHOLE2, regular(C2), degree).is_trivial


@pytest.mark.parametrize("p", [2, 3, 5])
def test_norm_one_lattice_not_flasque(p):
    G = cyclic(p)
    J = norm_one_character(G)
    assert J.rank == p - 1
    assert tate_cohomology(G, G.whole(), J, -1).invariant_factors == (p,)
    assert not is_flasque(G, J)


def test_permutation_lattices_flasque():
    for G in (cyclic(4), symmetric(3), quaternion()):
        for L in permutation_lattices(G):
            assert is_flasque(G, L)


def test_rank_zero_is_flasque():
    assert is_flasque(C2, zero(C2))


def test_wrong_degree_and_subgroup():
    with pytest.raises(StructuralError):
        tate_cohomology(C2, WHOLE2, trivial(C2), 1)
    with pytest.raises(StructuralError):
        tate_cohomology(cyclic(4), (0, 1), trivial(cyclic(4)), 0)


def test_invariant_rank_examples():
    G = cyclic(3)
    assert invariant_rank(G, G.whole(), regular(G)) == 1
    assert invariant_rank(G, G.trivial_subgroup(), trivial(G, 3)) == 3
    assert invariant_rank(G, G.whole(), trivial(G, 3)) == 3
    s = sign(C2, C2.trivial_subgroup())
    assert invariant_rank(C2, WHOLE2, s) == 0


def test_dual_and_sum_are_lattices():
    G = dihedral(3)
    L = direct_sum([augmentation_ideal(G), dual(norm_one_character(G))])
    assert L.rank == 10
    for g in G.elements:
        for h in G.elements:
            assert intmat.matmul(L.action[g], L.action[h]) == L.action[G.mul(g, h)]


def test_resolve_trivial_and_regular():
    r = flasque_resolve(C2, trivial(C2))
    assert (r.P.rank, r.F.rank) == (1, 0)
    r = flasque_resolve(C2, regular(C2))
    assert (r.P.rank, r.F.rank) == (2, 0)


def test_resolve_sign_lattice():
    s = sign(C2, C2.trivial_subgroup())
    r = flasque_resolve(C2, s)
    assert (r.P.rank, r.F.rank) == (2, 1)
    assert is_flasque(C2, r.F)
    assert verify_resolution(C2, r)


def test_unflagged_lattice_uses_general_construction():
    G = cyclic(4)
    L = GLattice(G, trivial(G).action, rank=1, check=False)
    r = flasque_resolve(G, L)
    assert r.P.is_permutation and is_flasque(G, r.F)


@pytest.mark.parametrize("G", groups()[:10], ids=lambda g: g.name)
def test_resolutions_over_corpus(G):
    for L in lattices(G):
        r = flasque_resolve(G, L)
        assert verify_resolution(G, r)
        assert intmat.matmul(r.projection, r.inclusion) == [[0] * L.rank for _ in range(r.F.rank)] or not r.F.rank


def test_corrupted_resolution_detected():
    G = cyclic(3)
    r = flasque_resolve(G, augmentation_ideal(G))
    bad = type(r)(r.M, r.P, r.F, [[x * 2 for x in row] for row in r.inclusion], r.projection, r.P_summands)
    assert not verify_resolution(G, bad)


def test_permutation_h0_nonzero_example():
    # Z[G/G] = Z: the norm map is multiplication by |G|
    G = cyclic(3)
    assert tate_cohomology(G, G.whole(), permutation(G, G.whole()), 0).invariant_factors == (3,)
