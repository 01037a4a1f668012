import logging

import pytest

from heckekit.errors import InvalidInput, InvariantViolation
from heckekit.laurent import ONE, V, V_INV
from heckekit.matrix import LaurentMatrix
from heckekit.quantum.uqsl2 import (
    UqModule,
    character,
    decompose_by_character,
    signed_character,
    simple_module,
    tensor,
    tensor_power,
    verify_casimir_scalar,
    verify_relations,
)


def test_simple_module_matrices():
    m = simple_module(1)
    assert m.labels == ["0", "1"]
    assert m.K == LaurentMatrix.diagonal_matrix([V_INV, V])
    assert m.E == LaurentMatrix.from_dense([[0, 0], [1, 0]])
    hat = simple_module(2, "hat")
    assert hat.K[0, 0] == -(V ** -2)
    assert hat.F[0, 1] == -(V + V_INV)
    trivial = simple_module(0)
    assert trivial.E.is_zero() and trivial.K == LaurentMatrix.identity(1)


@pytest.mark.parametrize("variant", ["plain", "hat"])
@pytest.mark.parametrize("n", range(0, 7))
def test_relations_on_simple_modules(n, variant):
    m = simple_module(n, variant)
    assert verify_relations(m)
    assert m.dimension == n + 1
    assert m.simple == (n, variant)


@pytest.mark.parametrize("k", range(1, 6))
def test_relations_on_tensor_powers(k):
    m = tensor_power(simple_module(1, "hat"), k)
    assert m.dimension == 2 ** k
    assert verify_relations(m)


def test_tensor_power_zero_is_trivial():
    assert tensor_power(simple_module(3), 0).dimension == 1
    with pytest.raises(InvalidInput):
        tensor_power(simple_module(1), -1)


def test_cup_vector_is_invariant():
    m = tensor(simple_module(1, "hat"), simple_module(1, "hat"))
    assert m.labels == ["00", "01", "10", "11"]
    cup = {"01": ONE, "10": V}
    assert m.apply("E", cup) == {}
    assert m.apply("F", cup) == {}
    assert m.apply("K", cup) == cup


def test_trivial_factor_is_a_unit():
    for n in range(4):
        vn = simple_module(n)
        left = tensor(simple_module(0), vn)
        assert (left.E, left.F, left.K) == (vn.E, vn.F, vn.K)


def test_characters():
    assert character(simple_module(2)) == {-2: 1, 0: 1, 2: 1}
    assert signed_character(simple_module(1, "hat")) == {(-1, -1): 1, (-1, 1): 1}
    m = tensor_power(simple_module(1), 3)
    assert character(m) == {-3: 1, -1: 3, 1: 3, 3: 1}
    assert sum(character(m).values()) == m.dimension


@pytest.mark.parametrize("n", range(1, 6))
def test_clebsch_gordan(n):
    m = tensor(simple_module(1), simple_module(n))
    assert decompose_by_character(m) == [(n + 1, "plain"), (n - 1, "plain")]


def test_decompositions():
    v1 = simple_module(1)
    assert decompose_by_character(tensor_power(v1, 3)) == [(3, "plain"), (1, "plain"), (1, "plain")]
    assert decompose_by_character(tensor(v1, simple_module(0))) == [(1, "plain")]
    hat = simple_module(1, "hat")
    assert decompose_by_character(tensor(hat, hat)) == [(2, "plain"), (0, "plain")]
    assert decompose_by_character(tensor(hat, v1)) == [(2, "hat"), (0, "hat")]


@pytest.mark.parametrize("n", range(1, 7))
def test_top_summand_occurs_once(n):
    summands = decompose_by_character(tensor_power(simple_module(1), n))
    assert summands[0] == (n, "plain")
    assert all(k < n for k, _ in summands[1:])
    assert sum(k + 1 for k, _ in summands) == 2 ** n


def test_casimir():
    assert verify_casimir_scalar(simple_module(0)) == V + V_INV
    assert verify_casimir_scalar(simple_module(1)) == V ** 2 + V ** -2
    assert verify_casimir_scalar(simple_module(2)) == V ** 3 + V ** -3
    assert verify_casimir_scalar(simple_module(0, "hat")) == -(V + V_INV)
    with pytest.raises(InvariantViolation):
        verify_casimir_scalar(tensor(simple_module(1), simple_module(1)))


def test_bad_arguments():
    with pytest.raises(InvalidInput):
        simple_module(-1)
    with pytest.raises(InvalidInput, match="variant"):
        simple_module(1, "twisted")
    with pytest.raises(InvalidInput, match="shape"):
        UqModule(labels=["a"], E=LaurentMatrix.zeros(2), F=LaurentMatrix.zeros(1),
                 K=LaurentMatrix.identity(1), Kinv=LaurentMatrix.identity(1))


def test_broken_module_is_reported(caplog):
    one = LaurentMatrix.identity(2)
    broken = UqModule(labels=["a", "b"], E=one, F=LaurentMatrix.zeros(2), K=one, Kinv=one)
    with caplog.at_level(logging.WARNING, logger="heckekit.quantum.uqsl2"):
        assert not verify_relations(broken)
    assert "K E = v^2 E K" in caplog.text


def test_weights_need_diagonal_units():
    one = LaurentMatrix.identity(2)
    zero = LaurentMatrix.zeros(2)
    skew = UqModule(labels=["a", "b"], E=zero, F=zero, K=LaurentMatrix.from_dense([[1, 1], [0, 1]]), Kinv=one)
    with pytest.raises(InvalidInput, match="diagonally"):
        skew.weights()
    scaled = UqModule(labels=["a", "b"], E=zero, F=zero, K=LaurentMatrix.scalar(2, 2), Kinv=one)
    with pytest.raises(InvalidInput, match="not of the form"):
        scaled.weights()
