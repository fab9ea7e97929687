"""D-Young and B-Young tableaux and the representations of D_n and B_n they define."""

from .group import GroupFamily, Reflection, SignedPermutation, enumerate_group, length, min_coset_reps, reflections
from .tableaux import FamilySpec, SignedTableau, SkewShape, enumerate_family, lift_m, lift_zero
from .rep import (build_representation, character, characters_equal, direct_sum, element_matrix,
                  induce_classical, specht_yof, verify_coxeter_relations)
from .homotopy import HomotopyFamily, verify_decomposition, verify_decomposition_B
from .cells import cell_from_content, cell_via_tableaux, is_convex, is_generic

__all__ = [
    "GroupFamily", "Reflection", "SignedPermutation", "enumerate_group", "length",
    "min_coset_reps", "reflections", "FamilySpec", "SignedTableau", "SkewShape",
    "enumerate_family", "lift_m", "lift_zero", "build_representation", "character",
    "characters_equal", "direct_sum", "element_matrix", "induce_classical", "specht_yof",
    "verify_coxeter_relations", "HomotopyFamily", "verify_decomposition",
    "verify_decomposition_B", "cell_from_content", "cell_via_tableaux", "is_convex", "is_generic",
]
