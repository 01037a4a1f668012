from .permutations import (
    Permutation,
    bruhat_leq,
    compose,
    conjugacy_class_representative,
    coset_representative,
    coset_reps,
    descents_right,
    inverse,
    length,
    parabolic_subgroup,
    parse_word,
    reduced_word,
)
from .tableaux import (
    Tableau,
    check_partition,
    hook_length_count,
    inverse_rsk,
    partitions,
    rsk,
    standard_tableaux,
    syt_count,
)

__all__ = [
    "Permutation",
    "bruhat_leq",
    "compose",
    "conjugacy_class_representative",
    "coset_representative",
    "coset_reps",
    "descents_right",
    "inverse",
    "length",
    "parabolic_subgroup",
    "parse_word",
    "reduced_word",
    "Tableau",
    "check_partition",
    "hook_length_count",
    "inverse_rsk",
    "partitions",
    "rsk",
    "standard_tableaux",
    "syt_count",
]
