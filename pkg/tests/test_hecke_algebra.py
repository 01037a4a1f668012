import random

import pytest

from heckekit.combinatorics.permutations import Permutation
from heckekit.errors import InvalidInput, SizeMismatch
from heckekit.hecke.algebra import HeckeElt, bar_involution, ev, standard_basis_product, trace_tau
from heckekit.laurent import ONE, V, V_INV, LaurentPoly


def H(w):
    return HeckeElt.standard(w)


def random_element(n, rng):
    return HeckeElt(n, {w: LaurentPoly.from_dict({rng.randint(-2, 2): rng.randint(-3, 3)})
                        for w in rng.sample(Permutation.all(n), 3)})


def test_quadratic_relation(s3):
    hs = H(s3["s"])
    assert hs * hs == H(s3["e"]) + hs.scale(V_INV - V)
    assert (hs + H(s3["e"]).scale(V)) * (hs + H(s3["e"]).scale(V)) == (hs + H(s3["e"]).scale(V)).scale(V + V_INV)


def test_length_additive_products(s3):
    assert H(s3["s"]) * H(s3["t"]) == H(s3["st"])
    assert standard_basis_product(s3["st"], s3["s"]) == H(s3["sts"])
    for w in s3.values():
        assert H(s3["e"]) * H(w) == H(w) == H(w) * H(s3["e"])


def test_braid_relation(s3):
    hs, ht = H(s3["s"]), H(s3["t"])
    assert hs * ht * hs == ht * hs * ht


def test_generator_multiplication_sides(s3):
    x = H(s3["st"]) + H(s3["t"]).scale(V)
    assert x.right_mult_generator(1) == x * HeckeElt.generator(3, 1)
    assert x.left_mult_generator(2) == HeckeElt.generator(3, 2) * x


def test_bar_examples(s3):
    assert H(s3["s"]).bar() == H(s3["s"]) + H(s3["e"]).scale(V - V_INV)
    assert H(s3["e"]).bar() == H(s3["e"])
    kl_s = H(s3["s"]) + H(s3["e"]).scale(V)
    assert kl_s.bar() == kl_s


@pytest.mark.parametrize("seed", range(5))
def test_bar_is_a_ring_involution(seed):
    rng = random.Random(seed)
    a, b = random_element(3, rng), random_element(3, rng)
    assert bar_involution(bar_involution(a)) == a
    assert (a * b).bar() == a.bar() * b.bar()


def test_trace(s3):
    hs = H(s3["s"])
    assert trace_tau(hs) == 0
    assert trace_tau(hs * hs) == ONE
    assert (H(s3["st"]) * H(s3["ts"])).trace() == ONE


@pytest.mark.parametrize("n", range(1, 5))
def test_specialization_recovers_the_group(n):
    for x in Permutation.all(n):
        for y in Permutation.all(n):
            assert ev(standard_basis_product(x, y)) == {x * y: 1}


def test_size_checks(s3):
    with pytest.raises(SizeMismatch):
        H(s3["s"]) + HeckeElt.unit(2)
    with pytest.raises(SizeMismatch):
        HeckeElt(2, {s3["s"]: 1})
    with pytest.raises(InvalidInput):
        standard_basis_product(s3["s"], Permutation.identity(2))


def test_json_and_fmt(s3):
    x = H(s3["s"]).scale(V) - H(s3["e"])
    assert x.fmt() == "(v)H[2,1,3] - H[1,2,3]"
    assert HeckeElt.from_json(3, x.to_json()) == x
