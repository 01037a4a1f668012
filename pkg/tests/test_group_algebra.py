import math
from fractions import Fraction

import pytest

from heckekit.combinatorics.permutations import Permutation
from heckekit.errors import InvalidInput, SizeMismatch
from heckekit.symmetric.characters import (
    centralizer_order,
    character_inner,
    character_norm,
    class_size,
    conjugacy_classes,
    format_cycle_type,
    induced_sign_character,
    parabolic_order,
    permutation_character,
)
from heckekit.symmetric.group_algebra import GroupAlgebraElt, check_field, regular_matrix


def test_arithmetic(s3):
    s = GroupAlgebraElt.generator(3, 1)
    t = GroupAlgebraElt.generator(3, 2)
    one = GroupAlgebraElt.identity(3)
    assert s * s == one
    assert s * t == GroupAlgebraElt.element(s3["st"])
    assert (one + s) * (one - s) == GroupAlgebraElt.zero(3)
    assert (one + s) * (one + s) == (one + s).scale(2)
    assert 2 * s == s + s
    assert s.right_mult(s3["t"]) == s * t
    assert s.left_mult(s3["t"]) == t * s


def test_transpositions(s3):
    assert GroupAlgebraElt.transposition(3, 1, 3) == GroupAlgebraElt.element(s3["sts"])
    assert GroupAlgebraElt.transposition(3, 2, 1) == GroupAlgebraElt.generator(3, 1)
    with pytest.raises(InvalidInput):
        GroupAlgebraElt.transposition(3, 2, 2)
    with pytest.raises(InvalidInput):
        GroupAlgebraElt.transposition(3, 1, 4)


def test_prime_field_coefficients():
    e = Permutation.identity(2)
    assert GroupAlgebraElt.from_ints(2, {e: 3}, p=2) == GroupAlgebraElt.identity(2, 2)
    assert GroupAlgebraElt.from_ints(2, {e: 4}, p=2).is_zero()
    assert GroupAlgebraElt.identity(2, 3).scale(Fraction(1, 2)) == GroupAlgebraElt.from_ints(2, {e: 2}, p=3)
    with pytest.raises(InvalidInput):
        GroupAlgebraElt.identity(2, 2).scale(Fraction(1, 2))


def test_fields_must_match():
    with pytest.raises(SizeMismatch):
        GroupAlgebraElt.identity(2, 2) + GroupAlgebraElt.identity(2, 3)
    with pytest.raises(SizeMismatch):
        GroupAlgebraElt.identity(2) * GroupAlgebraElt.identity(3)


@pytest.mark.parametrize("p", [0, 2, 3, 5, 7])
def test_check_field_accepts(p):
    assert check_field(p) == p


@pytest.mark.parametrize("p", [1, 4, 6, -3])
def test_check_field_rejects(p):
    with pytest.raises(InvalidInput, match="prime"):
        check_field(p)


def test_regular_matrix():
    elements = Permutation.all(3)
    s = GroupAlgebraElt.generator(3, 1)
    m = regular_matrix(s, elements, "left")
    assert (m.to_dense() * m.to_dense()).to_Matrix().is_Identity
    x = GroupAlgebraElt.identity(3) + s
    assert regular_matrix(x, elements, "right").to_Matrix().trace() == 6
    with pytest.raises(InvalidInput):
        regular_matrix(s, elements, "middle")


def test_json_and_fmt(s3):
    x = GroupAlgebraElt.from_ints(3, {s3["e"]: 2, s3["ts"]: -1})
    assert x.fmt() == "2e - s2s1"
    assert x.to_json() == {"[1,2,3]": "2", "[3,1,2]": "-1"}


@pytest.mark.parametrize("n", range(1, 7))
def test_class_sizes(n):
    assert sum(class_size(shape) for shape in conjugacy_classes(n)) == math.factorial(n)
    for shape, w in conjugacy_classes(n).items():
        assert w.cycle_type() == shape


def test_class_data():
    assert centralizer_order((2, 1)) == 2
    assert centralizer_order((1, 1, 1)) == 6
    assert class_size((2, 2)) == 3
    assert format_cycle_type((2, 1, 1)) == "(2,1,1)"


def test_permutation_characters():
    assert permutation_character(3, set()) == {(3,): 0, (2, 1): 0, (1, 1, 1): 6}
    trivial = permutation_character(3, {1, 2})
    assert trivial == {(3,): 1, (2, 1): 1, (1, 1, 1): 1}
    assert character_norm(3, trivial) == 1
    assert permutation_character(3, {1}) == {(3,): 0, (2, 1): 1, (1, 1, 1): 3}
    assert character_inner(3, permutation_character(3, {1}), trivial) == 1
    assert character_norm(3, permutation_character(3, {1})) == 2


def test_induced_sign_characters():
    assert induced_sign_character(3, {1, 2}) == {(3,): 1, (2, 1): -1, (1, 1, 1): 1}
    assert induced_sign_character(3, set()) == permutation_character(3, set())
    assert induced_sign_character(3, {1}) == {(3,): 0, (2, 1): -1, (1, 1, 1): 3}


def test_parabolic_order():
    assert parabolic_order(4, {1, 3}) == 4
    assert parabolic_order(4, {1, 2}) == 6
