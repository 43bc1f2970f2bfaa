"""Jump multisets, group descriptors and the jump calculus."""
from .calculus import (
    c_tame,
    check_ctame_additivity,
    check_ord_recurrence,
    check_uplus,
    d_jumps_of,
    e_of,
    filtration_profile,
    jumps_of,
    multiplicity_of_zero,
    ord_,
    ord_from_profile,
    read_off,
    split_rank,
    threshold,
)
from .descriptors import (
    ZERO,
    AbelianTotallyMultiplicative,
    BaseChange,
    DirectSum,
    ExactSeqQuotient,
    FiltrationProfile,
    GroupDescriptor,
    InducedTorus,
    Nu1,
    Profiled,
    describe,
    dimension,
    is_invertible,
    is_torus,
    split_torus,
)
from .io import descriptor_from_json, descriptor_to_json, djumps_to_json, jumps_to_json
from .multiset import DJumpMultiset, JumpMultiset, parse_multiset

ord = ord_  # noqa: A001  (public name matches the mathematical one)

__all__ = [
    "JumpMultiset", "DJumpMultiset", "parse_multiset",
    "InducedTorus", "ExactSeqQuotient", "DirectSum", "BaseChange", "Nu1",
    "AbelianTotallyMultiplicative", "Profiled", "FiltrationProfile", "GroupDescriptor",
    "ZERO", "split_torus", "dimension", "describe", "is_invertible", "is_torus",
    "jumps_of", "d_jumps_of", "ord", "ord_", "c_tame", "e_of", "threshold",
    "check_ord_recurrence", "multiplicity_of_zero", "split_rank",
    "check_ctame_additivity", "check_uplus",
    "descriptor_from_json", "descriptor_to_json", "jumps_to_json", "djumps_to_json", "filtration_profile", "read_off", "ord_from_profile",
]
