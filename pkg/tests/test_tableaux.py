import math

import pytest

from heckekit.combinatorics.permutations import Permutation
from heckekit.combinatorics.tableaux import (
    Tableau,
    hook_length_count,
    inverse_rsk,
    partitions,
    rsk,
    standard_tableaux,
    syt_count,
)
from heckekit.errors import InvalidInput


def test_partitions():
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions(0) == [()]
    assert len(partitions(7)) == 15


@pytest.mark.parametrize("shape, count", [((3,), 1), ((2, 1), 2), ((2, 2), 2), ((3, 1), 3), ((3, 2), 5),
                                          ((3, 2, 1), 16), ((4, 2, 1), 35)])
def test_syt_count(shape, count):
    assert syt_count(shape) == count
    assert hook_length_count(shape) == count


@pytest.mark.parametrize("n", range(1, 8))
def test_sum_of_squares(n):
    assert sum(syt_count(shape) ** 2 for shape in partitions(n)) == math.factorial(n)


def test_standard_tableaux_are_standard():
    tableaux = list(standard_tableaux((3, 2)))
    assert len(set(tableaux)) == 5
    assert all(t.is_standard() for t in tableaux)
    assert Tableau(((1, 3), (2, 4), (5,))).is_standard()
    assert not Tableau(((2, 1), (3,))).is_standard()


def test_bad_shapes():
    with pytest.raises(InvalidInput):
        syt_count((1, 2))
    with pytest.raises(InvalidInput):
        syt_count((2, 0))


def test_tableau_rendering():
    t = Tableau(((1, 3), (2,)))
    assert t.fmt() == "13/2"
    assert t.shape == (2, 1)
    assert t.content_vector() == (0, -1, 1)


def test_rsk_examples(s3):
    p, q = rsk(s3["s"])
    assert (p.fmt(), q.fmt()) == ("13/2", "13/2")
    p, q = rsk(s3["ts"])
    assert (p.fmt(), q.fmt()) == ("12/3", "13/2")
    p, q = rsk(s3["sts"])
    assert p.shape == (1, 1, 1)
    assert rsk(s3["e"])[0].fmt() == "123"


@pytest.mark.parametrize("n", range(1, 6))
def test_rsk_is_a_bijection(n):
    images = {}
    for w in Permutation.all(n):
        p, q = rsk(w)
        assert p.is_standard() and q.is_standard()
        assert p.shape == q.shape
        assert inverse_rsk(p, q) == w
        assert rsk(w.inverse()) == (q, p)
        images[(p, q)] = w
    assert len(images) == math.factorial(n)


def test_inverse_rsk_rejects_mismatched_shapes():
    with pytest.raises(InvalidInput):
        inverse_rsk(Tableau(((1, 2),)), Tableau(((1,), (2,))))
