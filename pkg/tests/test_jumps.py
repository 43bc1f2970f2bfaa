from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from neronjumps.corpus import CTAME_MIDDLE, CTAME_SIDE, DESCRIPTORS, SKEW_PROFILE, T1, T2
from neronjumps.errors import BelowThreshold, DescriptorError, InconsistencyError, StructuralError, UnsupportedInput
from neronjumps.jumps import (
    ZERO,
    BaseChange,
    DirectSum,
    DJumpMultiset,
    ExactSeqQuotient,
    FiltrationProfile,
    InducedTorus,
    JumpMultiset,
    Nu1,
    Profiled,
    c_tame,
    check_ctame_additivity,
    check_ord_recurrence,
    check_uplus,
    d_jumps_of,
    descriptor_from_json,
    descriptor_to_json,
    jumps_of,
    multiplicity_of_zero,
    ord,
    ord_from_profile,
    parse_multiset,
    read_off,
    split_torus,
    threshold,
)

F = Fraction


def test_induced_jumps():
    assert jumps_of(InducedTorus(2, 3)) == JumpMultiset({0: 3, F(1, 2): 3})
    assert str(jumps_of(InducedTorus(2, 3))) == "0:3, 1/2:3"


def test_worked_quotients():
    assert jumps_of(T1) == JumpMultiset({F(1, 4): 1, F(3, 4): 1})
    assert jumps_of(T2) == JumpMultiset({F(1, 2): 1})


def test_nu1_jumps():
    assert jumps_of(Nu1(2, 3)) == JumpMultiset({0: 2, F(1, 3): 3, F(2, 3): 3})
    assert c_tame(Nu1(2, 3)) == 3


@pytest.mark.parametrize(
    "g,d,expected",
    [
        (InducedTorus(2, 1), 5, {0: 1, 2: 1}),
        (InducedTorus(3, 2), 7, {0: 2, 2: 2, 4: 2}),
        (T1, 1, {0: 2}),
        (Nu1(2, 3), 1, {0: 8}),
    ],
)
def test_d_jumps(g, d, expected):
    assert d_jumps_of(g, d) == DJumpMultiset(d, expected)


def test_ord_examples():
    assert ord(InducedTorus(2, 1), 5) == 2
    assert ord(InducedTorus(3, 2), 7) == 12
    assert ord(T1, 1) == 0


def test_ctame_examples():
    assert c_tame(InducedTorus(4, 2)) == 3
    assert c_tame(split_torus(3)) == 0
    for e in range(1, 7):
        for f in range(1, 4):
            assert c_tame(InducedTorus(e, f)) == F(f * (e - 1), 2)


def test_ord_recurrence_examples():
    assert ord(InducedTorus(2, 1), 7) == 3
    assert check_ord_recurrence(InducedTorus(2, 1), 5, 1)
    assert check_ord_recurrence(Nu1(2, 3), 4, 3, p=3)
    assert check_ord_recurrence(split_torus(2), 3, 2)


def test_ord_recurrence_below_threshold():
    with pytest.raises(BelowThreshold):
        check_ord_recurrence(InducedTorus(4, 1), 2, 1)


def test_multiplicity_of_zero():
    assert multiplicity_of_zero(InducedTorus(3, 2)) == 2
    assert multiplicity_of_zero(T2) == 0
    assert multiplicity_of_zero(split_torus(4)) == 4
    bad = Profiled(FiltrationProfile(((0, 2, 2, 0),)), torus_rank=1)
    with pytest.raises(InconsistencyError):
        multiplicity_of_zero(bad)


def test_ctame_additivity():
    assert check_ctame_additivity(InducedTorus(1, 2), InducedTorus(2, 2))
    assert [c_tame(x) for x in (CTAME_SIDE, CTAME_MIDDLE, CTAME_SIDE)] == [0, 1, 0]
    assert not check_ctame_additivity(CTAME_SIDE, CTAME_MIDDLE, CTAME_SIDE)
    assert check_ctame_additivity(ZERO, InducedTorus(3, 1))


def test_uplus_for_quotients():
    for d in (5, 9, 13):
        assert check_uplus(InducedTorus(2, 1), InducedTorus(4, 1), T1, d)


def test_threshold():
    assert threshold(InducedTorus(4, 1)) == 4
    assert threshold(split_torus(2)) == 0
    assert threshold(Nu1(2, 3)) == 3


def test_base_change_scales_jumps():
    g = BaseChange(InducedTorus(4, 1), 3)
    assert jumps_of(g) == JumpMultiset({0: 1, F(3, 4): 1, F(1, 2): 1, F(1, 4): 1})
    for d in (5, 7, 9):
        assert d_jumps_of(g, d) == d_jumps_of(InducedTorus(4, 1), 3 * d).reduce(d)


def test_base_change_matches_split_structure():
    # Ind(4,1) over K(2) splits as two copies of Ind(2,1)
    g = BaseChange(InducedTorus(4, 1), 2)
    for d in (3, 5, 7):
        assert d_jumps_of(g, d, p=3 if d % 3 else 5) == d_jumps_of(InducedTorus(2, 2), d)


def test_general_tame_d():
    assert d_jumps_of(InducedTorus(2, 1), 4, p=3) == DJumpMultiset(4, {0: 1, 2: 1})
    assert d_jumps_of(InducedTorus(3, 1), 2, p=5) == DJumpMultiset(2, {0: 2, 1: 1})


def test_profile_read_off():
    prof = SKEW_PROFILE.profile
    assert threshold(SKEW_PROFILE) == 3
    dj = read_off(prof, 6)
    assert dj == DJumpMultiset(6, {0: 1, 1: 1, 2: 1})
    assert d_jumps_of(SKEW_PROFILE, 7) == DJumpMultiset(7, {0: 1, 2: 2})
    with pytest.raises(BelowThreshold):
        d_jumps_of(SKEW_PROFILE, 3)


@given(st.integers(min_value=4, max_value=200))
@settings(max_examples=60, deadline=None)
def test_profile_closed_form(d):
    for entry in DESCRIPTORS:
        from neronjumps.jumps import filtration_profile

        prof = filtration_profile(entry.descriptor)
        assert ord_from_profile(prof, d) == read_off(prof, d).total()


def test_profile_validation():
    with pytest.raises(DescriptorError):
        FiltrationProfile(((0, 2, 1, 0),))  # f+ != f0 at 0
    with pytest.raises(DescriptorError):
        FiltrationProfile(((0, 2, 2, 1), ("1/2", 2, 1, 0)))  # broken chain


def test_multiset_errors_and_parse():
    with pytest.raises(InconsistencyError):
        JumpMultiset({0: 1}) - JumpMultiset({F(1, 2): 1})
    with pytest.raises(StructuralError):
        JumpMultiset({1: 1})
    assert parse_multiset("0:3, 1/2:3") == {0: 3, F(1, 2): 3}


def test_quotient_gating():
    with pytest.raises(DescriptorError):
        ExactSeqQuotient(InducedTorus(2, 2), InducedTorus(2, 1))


def test_wild_d_jumps_need_p_or_threshold():
    g = InducedTorus(4, 1)
    assert d_jumps_of(g, 5) == DJumpMultiset(5, {0: 1, 1: 1, 2: 1, 3: 1})
    with pytest.raises(UnsupportedInput):
        d_jumps_of(g, 4, p=2)


@pytest.mark.parametrize("entry", DESCRIPTORS, ids=lambda e: e.name)
def test_descriptor_json_round_trip(entry):
    obj = descriptor_to_json(entry.descriptor)
    assert descriptor_from_json(obj) == entry.descriptor
    import json

    assert descriptor_from_json(json.dumps({"descriptor": obj})) == entry.descriptor


def test_descriptor_errors():
    with pytest.raises(DescriptorError):
        descriptor_from_json({"type": "induced"})
    with pytest.raises(DescriptorError):
        descriptor_from_json({"type": "nope"})
    with pytest.raises(DescriptorError):
        descriptor_from_json("{not json")


def test_direct_sum_adds():
    g = DirectSum((InducedTorus(2, 1), Nu1(1, 3)))
    assert d_jumps_of(g, 5) == d_jumps_of(InducedTorus(2, 1), 5) + d_jumps_of(Nu1(1, 3), 5)
    assert c_tame(g) == F(1, 2) + 1
