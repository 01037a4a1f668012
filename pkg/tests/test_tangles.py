import random

import pytest

from heckekit.errors import InvalidDiagram, InvalidInput, SizeMismatch
from heckekit.laurent import ONE, V, V_INV, ZERO, LaurentPoly
from heckekit.quantum.tangles import (
    Cap,
    Cup,
    ElementaryDiagram,
    Morphism,
    NegCross,
    PosCross,
    TangleWord,
    braid_closure,
    conjugate,
    crossing_signs,
    eval_elementary,
    eval_word,
    kauffman_bracket,
    kauffman_jones,
    markov_stabilize,
    mirror,
    orient,
    parse_braid,
    rt_invariant,
    skein_check,
    writhe,
)

HOPF = TangleWord((Cup(1), Cup(3), PosCross(2), PosCross(2), Cap(3), Cap(1)))
UNKNOT = TangleWord((Cup(1), Cap(1)))


def jones(braid, strands):
    return rt_invariant(braid_closure(braid, strands)).j


def random_braid(rng):
    strands = rng.randint(2, 4)
    letters = [rng.choice([-1, 1]) * rng.randint(1, strands - 1) for _ in range(rng.randint(1, 8))]
    return letters, strands


def test_cup_and_cap():
    cup = eval_elementary(Cup(1), 0)
    assert cup.apply({"": ONE}) == {"01": ONE, "10": V}
    cap = eval_elementary(Cap(1), 2)
    assert cap.entry("", "01") == V_INV
    assert cap.entry("", "10") == ONE
    assert cap.entry("", "00") == ZERO
    assert cup.then(cap).scalar() == V + V_INV


def test_crossing_on_a_wider_tensor_power():
    m = eval_elementary(PosCross(2), 3)
    assert m.apply({"001": ONE}) == {"001": V_INV - V, "010": ONE}
    assert m.apply({"100": ONE}) == {"100": -V}
    n = eval_elementary(NegCross(1), 2)
    assert n.apply({"10": ONE}) == {"01": ONE, "10": V - V_INV}


def test_crossings_are_inverse():
    ident = Morphism.identity(2)
    assert eval_word(TangleWord((PosCross(1), NegCross(1)), 2)) == ident
    assert eval_word(TangleWord((NegCross(1), PosCross(1)), 2)) == ident


@pytest.mark.parametrize("kind", [PosCross, NegCross])
def test_braid_relation(kind):
    a = eval_word(TangleWord((kind(1), kind(2), kind(1)), 3))
    b = eval_word(TangleWord((kind(2), kind(1), kind(2)), 3))
    assert a == b


def test_zig_zag():
    assert eval_word(TangleWord((Cup(2), Cap(1)), 1)) == Morphism.identity(1)
    assert eval_word(TangleWord((Cup(1), Cap(2)), 1)) == Morphism.identity(1)
    assert eval_word(TangleWord((), 3)) == Morphism.identity(3)


def test_hopf_fixture():
    assert eval_word(HOPF).scalar() == LaurentPoly.parse("v^-2 + 1 + v^2 + v^4")
    assert crossing_signs(HOPF) == {2: 1, 3: 1}
    result = rt_invariant(HOPF)
    assert result.j_hat == (V + V_INV) * (V + V ** 5)
    assert result.j == V + V ** 5
    assert kauffman_bracket(HOPF) == LaurentPoly.parse("v^-2 + 1 + v^2 + v^4")


def test_braid_closure_words():
    w = braid_closure([1, 1], 2)
    assert [str(s) for s in w] == ["Cup(1)", "Cup(2)", "NegCross(3)", "NegCross(3)", "Cap(2)", "Cap(1)"]
    assert len(braid_closure([1, 1, 1], 2)) == 7
    assert braid_closure([], 1) == UNKNOT
    assert str(braid_closure([-1], 2).steps[2]) == "PosCross(3)"


def test_hopf_closure():
    w = braid_closure([1, 1], 2)
    result = rt_invariant(w)
    assert result.phi == LaurentPoly.parse("v^-4 + v^-2 + 1 + v^2")
    assert result.j_hat == LaurentPoly.parse("1 + v^2 + v^4 + v^6")
    assert result.j == rt_invariant(HOPF).j
    assert kauffman_jones(w).bracket == LaurentPoly.parse("v^-2 + 1 + v^2 + v^4")


@pytest.mark.parametrize("braid, strands", [([], 1), ([1], 2), ([-1], 2), ([1, 2], 3), ([1, -2], 3)])
def test_unknots(braid, strands):
    w = braid_closure(braid, strands)
    assert rt_invariant(w).j == ONE
    assert kauffman_jones(w).j == ONE


def test_one_crossing_unknot():
    result = rt_invariant(braid_closure([1], 2))
    assert result.phi == -(V ** -3) - V_INV
    assert result.j == ONE


def test_unlink():
    w = braid_closure([], 2)
    assert kauffman_bracket(w) == (V + V_INV) ** 2
    assert rt_invariant(w).j == V + V_INV
    assert rt_invariant(UNKNOT).j == ONE


def test_trefoil():
    w = braid_closure([1, 1, 1], 2)
    assert rt_invariant(w).j == kauffman_jones(w).j
    assert rt_invariant(w).j == V ** 2 + V ** 6 - V ** 8
    assert writhe(w) == 3
    assert rt_invariant(mirror(w)).j == rt_invariant(w).j.bar()


@pytest.mark.parametrize("word", [HOPF, braid_closure([1, 1, 1], 2), braid_closure([1, -2, 1, -2], 3)])
def test_skein_relation_at_every_crossing(word):
    for t in word.crossings():
        assert skein_check(word, t)


def test_random_closures_agree():
    rng = random.Random(20240611)
    for _ in range(100):
        braid, strands = random_braid(rng)
        w = braid_closure(braid, strands)
        rt = rt_invariant(w)
        kj = kauffman_jones(w)
        assert rt.j_hat == kj.j_hat, (braid, strands)
        assert skein_check(w, rng.choice(w.crossings()))
        signs = crossing_signs(w)
        assert [signs[t] for t in w.crossings()] == [1 if b > 0 else -1 for b in braid]


def test_markov_moves():
    rng = random.Random(7)
    for _ in range(15):
        braid, strands = random_braid(rng)
        expected = jones(braid, strands)
        for sign in (1, -1):
            assert jones(*markov_stabilize(braid, strands, sign)) == expected
        gamma = [rng.choice([-1, 1]) * rng.randint(1, strands - 1) for _ in range(2)]
        assert jones(conjugate(braid, gamma), strands) == expected


def test_orientation_of_closures():
    w = braid_closure([1, -1], 2)
    assert set(orient(w).values()) == {(1, 1)}


def test_strands_beside_a_crossing_do_not_orient_it():
    # the closing strands at positions 1 and 2 run downward past every crossing
    one = braid_closure([1], 2)
    assert orient(one) == {2: (1, 1)}
    assert crossing_signs(one) == {2: 1}
    assert rt_invariant(one).j == ONE

    three = braid_closure([1, 2, -1], 3)
    assert orient(three) == {3: (1, 1), 4: (1, 1), 5: (1, 1)}
    assert crossing_signs(three) == {3: 1, 4: 1, 5: -1}
    assert rt_invariant(braid_closure([1, 1], 2)).j == V + V ** 5


def test_orientation_needs_a_closed_word():
    with pytest.raises(InvalidDiagram):
        orient(TangleWord((PosCross(1),), 2))


def test_word_validation():
    with pytest.raises(InvalidDiagram, match="step 0"):
        TangleWord((Cap(1),))
    with pytest.raises(InvalidDiagram, match="step 1"):
        TangleWord((Cup(1), PosCross(2)))
    with pytest.raises(InvalidDiagram):
        braid_closure([2], 2)
    with pytest.raises(InvalidDiagram):
        braid_closure([], 0)
    with pytest.raises(InvalidDiagram):
        Cup(1).flipped()


def test_invariants_need_closed_words():
    with pytest.raises(InvalidDiagram):
        rt_invariant(TangleWord((Cup(1),)))
    with pytest.raises(InvalidDiagram):
        rt_invariant(TangleWord())
    with pytest.raises(InvalidDiagram):
        kauffman_bracket(TangleWord((Cup(1),)))
    with pytest.raises(InvalidInput, match="signs"):
        rt_invariant(HOPF, {2: 1})
    with pytest.raises(InvalidDiagram):
        skein_check(HOPF, 0)


def test_morphism_checks():
    cup = eval_elementary(Cup(1), 0)
    with pytest.raises(SizeMismatch):
        cup.then(cup)
    with pytest.raises(InvalidInput):
        cup.scalar()
    with pytest.raises(SizeMismatch):
        cup.apply({"0": ONE})
    assert cup.to_json()["entries"] == [{"row": "01", "col": "", "value": "1"},
                                        {"row": "10", "col": "", "value": "v"}]


def test_parse_and_json():
    assert TangleWord.parse("Cup(1) Cup(3), PosCross(2) PosCross(2) Cap(3) Cap(1)") == HOPF
    assert TangleWord.from_json(HOPF.to_json()) == HOPF
    assert TangleWord.from_json([{"kind": "Cup", "position": 1}, {"kind": "Cap", "position": 1}]) == UNKNOT
    assert ElementaryDiagram.from_json({"kind": "NegCross", "position": 2}) == NegCross(2)
    with pytest.raises(InvalidDiagram):
        TangleWord.parse("Cup(1) Twist(1)")
    with pytest.raises(InvalidDiagram):
        ElementaryDiagram.from_json({"kind": "Loop", "position": 1})


def test_parse_braid():
    assert parse_braid("1 1 -2") == [1, 1, -2]
    assert parse_braid("") == []
    with pytest.raises(InvalidInput):
        parse_braid("1 x")
    with pytest.raises(InvalidInput, match="nonzero"):
        parse_braid("1 0")
