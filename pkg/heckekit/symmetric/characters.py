"""Class functions on S_n, keyed by cycle type."""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from typing import Dict, Iterable, List

from ..combinatorics.permutations import (
    Permutation,
    compose,
    conjugacy_class_representative,
    coset_representative,
    coset_reps,
    parabolic_subgroup,
)
from ..combinatorics.tableaux import Partition, partitions

ClassFunction = Dict[Partition, int]


def centralizer_order(cycle_type: Partition) -> int:
    z = 1
    for k, m in Counter(cycle_type).items():
        z *= k ** m * math.factorial(m)
    return z


def class_size(cycle_type: Partition) -> int:
    return math.factorial(sum(cycle_type)) // centralizer_order(cycle_type)


def conjugacy_classes(n: int) -> Dict[Partition, Permutation]:
    """Cycle type -> standard representative, in reverse lexicographic order."""
    return {shape: conjugacy_class_representative(shape) for shape in partitions(n)}


def character_norm(n: int, chi: ClassFunction) -> Fraction:
    """``(1/n!) sum_w chi(w) chi(w^-1)``; ``w`` and its inverse share a class."""
    total = sum(class_size(shape) * value * value for shape, value in chi.items())
    return Fraction(total, math.factorial(n))


def character_inner(n: int, a: ClassFunction, b: ClassFunction) -> Fraction:
    total = sum(class_size(shape) * a[shape] * b.get(shape, 0) for shape in a)
    return Fraction(total, math.factorial(n))


def format_cycle_type(cycle_type: Partition) -> str:
    return "(" + ",".join(str(x) for x in cycle_type) + ")"


def _fixed_cosets(n: int, parabolic: Iterable[int], w: Permutation) -> List[Permutation]:
    """Shortest representatives ``x`` with ``W_J x w = W_J x``."""
    parabolic = frozenset(parabolic)
    return [x for x in coset_reps(n, parabolic) if coset_representative(compose(x, w), parabolic) == x]


def permutation_character(n: int, parabolic: Iterable[int]) -> ClassFunction:
    """Character of S_n permuting the right cosets ``W_J \\ S_n``."""
    parabolic = frozenset(parabolic)
    return {shape: len(_fixed_cosets(n, parabolic, w)) for shape, w in conjugacy_classes(n).items()}


def induced_sign_character(n: int, parabolic: Iterable[int]) -> ClassFunction:
    """
    Sign of ``W_J`` induced to S_n: a fixed coset ``W_J x`` contributes the
    sign of ``x w x^-1``, which lies in ``W_J``.
    """
    parabolic = frozenset(parabolic)
    out = {}
    for shape, w in conjugacy_classes(n).items():
        out[shape] = sum(compose(compose(x, w), x.inverse()).sign() for x in _fixed_cosets(n, parabolic, w))
    return out


def parabolic_order(n: int, parabolic: Iterable[int]) -> int:
    return len(parabolic_subgroup(n, parabolic))
