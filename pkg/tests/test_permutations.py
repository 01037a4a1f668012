import itertools

import pytest

from heckekit.combinatorics.permutations import (
    Permutation,
    bruhat_leq,
    compose,
    conjugacy_class_representative,
    coset_representative,
    coset_reps,
    parabolic_subgroup,
    parse_word,
)
from heckekit.errors import InvalidInput, SizeMismatch


def test_products_follow_right_multiplication(s3):
    assert Permutation.from_word(3, [1, 2]) == Permutation((2, 3, 1))
    assert s3["s"] * s3["t"] == s3["st"]
    assert compose(s3["s"], s3["s"]) == s3["e"]
    assert s3["st"](1) == s3["s"](s3["t"](1))


def test_lengths_and_words(s3):
    assert [s3[k].length for k in ("e", "s", "st", "sts")] == [0, 1, 2, 3]
    assert s3["e"].reduced_word == ()
    assert s3["s"].reduced_word == (1,)
    assert Permutation.longest(3).reduced_word == (1, 2, 1)
    assert Permutation.longest(3) == s3["sts"]
    assert s3["sts"].fmt_word() == "s1 s2 s1"
    assert s3["e"].fmt_word() == "e"


@pytest.mark.parametrize("n", range(1, 6))
def test_reduced_words_rebuild_the_permutation(n):
    for w in Permutation.all(n):
        assert len(w.reduced_word) == w.length
        assert Permutation.from_word(n, w.reduced_word) == w
        assert w.inverse().length == w.length


def test_descents(s3):
    assert s3["st"].descents_right == {2}
    assert s3["st"].descents_left == {1}
    assert s3["sts"].descents_left == {1, 2}


def test_all_is_sorted_by_length():
    elements = Permutation.all(4)
    assert len(elements) == 24
    assert elements[0] == Permutation.identity(4)
    assert elements[-1] == Permutation.longest(4)
    assert [w.length for w in elements] == sorted(w.length for w in elements)


def test_bruhat_order(s3):
    for w in s3.values():
        assert bruhat_leq(s3["e"], w)
        assert bruhat_leq(w, s3["sts"])
    assert bruhat_leq(s3["s"], s3["st"])
    assert not bruhat_leq(s3["st"], s3["ts"])
    assert not bruhat_leq(s3["ts"], s3["st"])
    assert not bruhat_leq(s3["t"], s3["s"])


def subword_products(w):
    word = w.reduced_word
    return {
        Permutation.from_word(w.n, [word[k] for k in keep])
        for r in range(len(word) + 1)
        for keep in itertools.combinations(range(len(word)), r)
    }


@pytest.mark.parametrize("n", range(1, 5))
def test_bruhat_order_matches_subwords(n):
    elements = Permutation.all(n)
    for y in elements:
        below = subword_products(y)
        for x in elements:
            assert bruhat_leq(x, y) == (x in below), (x, y)


@pytest.mark.parametrize("n", range(1, 5))
def test_bruhat_order_is_a_partial_order(n):
    elements = Permutation.all(n)
    e, w0 = Permutation.identity(n), Permutation.longest(n)
    leq = {(x, y): bruhat_leq(x, y) for x in elements for y in elements}
    for x in elements:
        assert leq[x, x]
        assert leq[e, x] and leq[x, w0]
        for y in elements:
            if x != y and leq[x, y]:
                assert not leq[y, x]
                assert x.length < y.length
                for z in elements:
                    if leq[y, z]:
                        assert leq[x, z]


@pytest.mark.parametrize("n", range(1, 5))
def test_length_is_subadditive(n):
    for a, b in itertools.product(Permutation.all(n), repeat=2):
        # walk b's reduced word onto a; any step that shortens is a cancellation
        current, cancelled = a, False
        for i in b.reduced_word:
            step = current * Permutation.from_word(n, [i])
            cancelled = cancelled or step.length < current.length
            current = step
        assert current == a * b
        assert (a * b).length <= a.length + b.length
        assert (a * b).length % 2 == (a.length + b.length) % 2
        assert ((a * b).length == a.length + b.length) == (not cancelled)


def test_bruhat_order_needs_one_size():
    with pytest.raises(SizeMismatch):
        bruhat_leq(Permutation.identity(2), Permutation.identity(3))


def test_coset_reps(s3):
    assert set(coset_reps(3, {1})) == {s3["e"], s3["t"], s3["ts"]}
    assert coset_reps(3, {1, 2}) == [s3["e"]]
    assert coset_reps(3, set()) == Permutation.all(3)
    assert set(coset_reps(3, {1}, kind="longest")) == {s3["s"], s3["st"], s3["sts"]}
    with pytest.raises(InvalidInput):
        coset_reps(3, {3})
    with pytest.raises(InvalidInput, match="kind"):
        coset_reps(3, {1}, kind="middle")


@pytest.mark.parametrize("parabolic", [set(), {1}, {2}, {1, 3}, {1, 2}, {1, 2, 3}])
def test_cosets_partition_the_group(parabolic):
    sub = parabolic_subgroup(4, parabolic)
    reps = coset_reps(4, parabolic)
    assert len(sub) * len(reps) == 24
    assert {y * x for y in sub for x in reps} == set(Permutation.all(4))
    for w in Permutation.all(4):
        assert coset_representative(w, parabolic) in reps


def test_parse_word():
    assert parse_word("s1 s2 s1") == (1, 2, 1)
    assert parse_word("1 2") == (1, 2)
    assert parse_word("e") == ()
    with pytest.raises(InvalidInput, match="bad letter"):
        parse_word("s1 x2")


def test_parse_and_validation():
    assert Permutation.parse("[2,1,3]") == Permutation((2, 1, 3))
    with pytest.raises(InvalidInput):
        Permutation((1, 1, 2))
    with pytest.raises(InvalidInput):
        Permutation.parse("[2,1")
    with pytest.raises(InvalidInput):
        Permutation.simple_reflection(3, 3)
    with pytest.raises(InvalidInput):
        Permutation.from_word(3, [0])


def test_cycle_types():
    w = conjugacy_class_representative((3, 1))
    assert w == Permutation((2, 3, 1, 4))
    assert w.cycle_type() == (3, 1)
    assert Permutation.identity(4).cycle_type() == (1, 1, 1, 1)
    assert Permutation.longest(4).is_involution()
    assert Permutation.longest(4).sign() == 1
