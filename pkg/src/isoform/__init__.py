"""Invariant vectors of finite subgroups of PGL2(C) with exact cyclotomic arithmetic."""
from .cyclofield import Cyclotomic
from .polygroup import FiniteMatrixGroup, GroupSpec, binary_group, build_group
from .chartab import character_table, decompose, format_decomposition, kappa, sym_power_char
from .binforms import BinaryForm, ground_forms
from .invec import generator_set, invariant_basis
from .detdiv import delta, divisor_of_char, verify_det_theorem
from .veritas import emit_table, run_verifications

__all__ = [
    "Cyclotomic", "FiniteMatrixGroup", "GroupSpec", "binary_group", "build_group",
    "character_table", "decompose", "format_decomposition", "kappa", "sym_power_char",
    "BinaryForm", "ground_forms", "generator_set", "invariant_basis",
    "delta", "divisor_of_char", "verify_det_theorem", "emit_table", "run_verifications",
]
__version__ = "0.1.0"
