"""Grothendieck-ring classes and motivic zeta functions."""
from .kvar import KVarClass, LPolynomial, L_MINUS_1
from .lattice_input import LatticeData, character_lattice, splitting_degree, stabilizer_subgroup
from .motivic import (
    RationalityResult,
    ZetaInput,
    tails_have_ctame_slope,
    verify_rationality,
    zeta_closed_form,
    zeta_truncated,
)
from .series import RationalSeries, TailTerm, expand_power_sum, geometric_power_sum

__all__ = [
    "LPolynomial", "KVarClass", "L_MINUS_1",
    "RationalSeries", "TailTerm", "geometric_power_sum", "expand_power_sum",
    "ZetaInput", "zeta_truncated", "zeta_closed_form", "verify_rationality",
    "RationalityResult", "tails_have_ctame_slope",
    "character_lattice", "splitting_degree", "stabilizer_subgroup", "LatticeData",
]
