import json
import logging

import pytest

from heckekit.combinatorics.permutations import Permutation
from heckekit.config import Settings
from heckekit.errors import InvalidInput, SingularPairing
from heckekit.hecke.algebra import HeckeElt, mult_standard, trace_tau
from heckekit.hecke.kazhdan_lusztig import (
    KLTable,
    check_bar_invariance,
    check_dual_pairing,
    dual_kl_elt,
    dual_kl_table,
    invert_unimodular,
    kl_elt,
    kl_multiply,
    kl_polynomial,
    kl_table,
    load_kl_table,
    mu,
    to_kl_basis,
    warm_kl_tables,
)
from heckekit.laurent import ONE, V, V_INV, ZERO


def combo(terms):
    return HeckeElt(next(iter(terms)).n, terms)


def test_rank_one():
    s = Permutation((2, 1))
    assert kl_elt(s) == combo({s: ONE, Permutation.identity(2): V})


def test_s3_table(s3):
    e, s, t, st, ts, sts = (s3[k] for k in ("e", "s", "t", "st", "ts", "sts"))
    assert kl_elt(e) == HeckeElt.unit(3)
    assert kl_elt(s) == combo({s: ONE, e: V})
    assert kl_elt(st) == combo({st: ONE, s: V, t: V, e: V ** 2})
    assert kl_elt(ts) == combo({ts: ONE, s: V, t: V, e: V ** 2})
    assert kl_elt(sts) == combo({sts: ONE, st: V, ts: V, s: V ** 2, t: V ** 2, e: V ** 3})
    assert kl_polynomial(e, sts) == V ** 3
    assert kl_polynomial(st, ts) == ZERO


def test_mu(s3):
    assert mu(s3["s"], s3["sts"]) == 0
    assert mu(s3["st"], s3["sts"]) == 1
    assert mu(s3["e"], s3["s"]) == 1
    assert mu(s3["s"], s3["s"]) == 0


@pytest.mark.parametrize("n", range(1, 5))
def test_table_is_admissible_and_bar_invariant(n):
    table = kl_table(n)
    table.verify()
    check_bar_invariance(table)
    for x in table.elements:
        for y, h in table.kl[x].terms.items():
            assert all(c > 0 for _, c in h.terms())


@pytest.mark.slow
def test_s5_table_is_bar_invariant_and_positive():
    table = kl_table(5)
    table.verify()
    check_bar_invariance(table)
    for x in table.elements:
        for h in table.kl[x].terms.values():
            assert all(c > 0 for _, c in h.terms())


def test_s4_singular_polynomial():
    # 3412 is the smallest element whose h polynomials are not monomials
    x = Permutation((3, 4, 1, 2))
    y = Permutation.identity(4)
    assert kl_polynomial(y, x) == V ** 4 + V ** 2
    assert kl_polynomial(Permutation((1, 3, 2, 4)), x) == V ** 3 + V


def test_kl_multiply(s3):
    e, s, ts, sts = s3["e"], s3["s"], s3["ts"], s3["sts"]
    assert kl_multiply(s, s) == {s: V + V_INV}
    assert kl_multiply(s, ts) == {sts: ONE, s: ONE}
    assert kl_multiply(e, ts) == {ts: ONE}
    assert kl_multiply(sts, sts) == {sts: V ** 3 + 2 * V + 2 * V_INV + V ** -3}


@pytest.mark.parametrize("n", [3, 4])
def test_kl_multiply_agrees_with_standard_products(n):
    table = kl_table(n)
    for x in table.elements[:8]:
        for y in table.elements:
            expected = to_kl_basis(table, mult_standard(table.kl[x], table.kl[y]))
            assert kl_multiply(x, y, table) == expected


def test_to_kl_basis_inverts_expansion(s3):
    table = kl_table(3)
    elt = table.kl[s3["sts"]] + table.kl[s3["s"]].scale(V)
    assert to_kl_basis(table, elt) == {s3["sts"]: ONE, s3["s"]: V}


def test_trace_of_kl_square(s3):
    kl_s = kl_elt(s3["s"])
    assert trace_tau(kl_s * kl_s) == V ** 2 + 1


def test_dual_basis(s3):
    assert dual_kl_elt(s3["sts"]) == HeckeElt.standard(s3["sts"])
    assert dual_kl_elt(s3["st"]) == combo({s3["st"]: ONE, s3["sts"]: -V})
    assert dual_kl_elt(s3["s"]) == combo({s3["s"]: ONE, s3["st"]: -V, s3["ts"]: -V, s3["sts"]: V ** 2})
    s = Permutation((2, 1))
    assert dual_kl_elt(Permutation.identity(2)) == combo({Permutation.identity(2): ONE, s: -V})


@pytest.mark.parametrize("n", range(1, 5))
def test_dual_pairing(n):
    check_dual_pairing(n)
    assert len(dual_kl_table(n)) == len(kl_table(n).elements)


def test_invert_unimodular_requires_unit_pivots():
    assert invert_unimodular([{0: V, 1: ONE}, {1: -ONE}]) == [{0: V_INV, 1: V_INV}, {1: -ONE}]
    with pytest.raises(SingularPairing):
        invert_unimodular([{0: V + ONE}])


def test_json_roundtrip():
    table = kl_table(3)
    again = KLTable.from_json(json.loads(json.dumps(table.to_json())))
    assert again.kl == table.kl
    assert again.elements == table.elements


def test_cache_directory(tmp_path, caplog):
    settings = Settings(cache_dir=str(tmp_path))
    first = load_kl_table(3, settings)
    path = tmp_path / "kl_3.json"
    assert path.exists()
    assert load_kl_table(3, settings).kl == first.kl

    path.write_text("{not json", encoding="utf-8")
    with caplog.at_level(logging.WARNING, logger="heckekit.hecke.kazhdan_lusztig"):
        assert load_kl_table(3, settings).kl == first.kl
    assert "ignoring unreadable KL cache" in caplog.text


def test_small_tables_are_built_up_front(tmp_path):
    tables = warm_kl_tables(Settings(cache_dir=str(tmp_path)))
    assert [t.n for t in tables] == [1, 2, 3, 4, 5]
    assert [len(t.elements) for t in tables] == [1, 2, 6, 24, 120]
    assert (tmp_path / "kl_5.json").exists()
    assert [t.n for t in warm_kl_tables(upto=2)] == [1, 2]


def test_bad_arguments():
    with pytest.raises(InvalidInput):
        kl_table(0)
    with pytest.raises(InvalidInput):
        kl_table(3).kl_elt(Permutation.identity(2))
