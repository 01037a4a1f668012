from .characters import (
    character_norm,
    class_size,
    conjugacy_classes,
    induced_sign_character,
    permutation_character,
)
from .group_algebra import GroupAlgebraElt, check_field, regular_matrix
from .jucys_murphy import (
    FormalCharacter,
    block_decompose,
    elementary_symmetric,
    gamma_of,
    induce_character,
    insert_residue,
    jm_eigenspaces,
    jucys_murphy,
    regular_character,
    remove_residue,
    restrict_character,
    tableau_character,
    verify_block_invariance,
    verify_daha,
    verify_jm_center,
)

__all__ = [
    "character_norm",
    "class_size",
    "conjugacy_classes",
    "induced_sign_character",
    "permutation_character",
    "GroupAlgebraElt",
    "check_field",
    "regular_matrix",
    "FormalCharacter",
    "block_decompose",
    "elementary_symmetric",
    "gamma_of",
    "induce_character",
    "insert_residue",
    "jm_eigenspaces",
    "jucys_murphy",
    "regular_character",
    "remove_residue",
    "restrict_character",
    "tableau_character",
    "verify_block_invariance",
    "verify_daha",
    "verify_jm_center",
]
