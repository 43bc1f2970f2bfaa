"""Finite groups, integer G-lattices, Tate cohomology and flasque resolutions."""
from .cohomology import TateH, fixed_lattice, invariant_rank, is_flasque, tate_cohomology, tate_table
from .flasque import FlasqueResolution, flasque_resolve, verify_resolution
from .groups import (
    FiniteGroup,
    alternating,
    cyclic,
    dihedral,
    direct_product,
    from_permutations,
    parse_group,
    quaternion,
    symmetric,
)
from .lattice import (
    GLattice,
    augmentation_ideal,
    direct_sum,
    dual,
    from_generators,
    norm_one_character,
    permutation,
    permutation_sum,
    regular,
    sign,
    trivial,
    zero,
)

__all__ = [
    "FiniteGroup", "cyclic", "dihedral", "direct_product", "from_permutations", "parse_group",
    "quaternion", "symmetric", "alternating",
    "GLattice", "trivial", "regular", "permutation", "permutation_sum", "zero",
    "direct_sum", "dual", "augmentation_ideal", "norm_one_character", "sign",
    "from_generators",
    "TateH", "tate_cohomology", "is_flasque", "invariant_rank", "fixed_lattice", "tate_table",
    "FlasqueResolution", "flasque_resolve", "verify_resolution",
]
