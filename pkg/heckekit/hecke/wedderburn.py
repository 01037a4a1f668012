"""
The basis ``f_w = ev(D(w') KL(w))`` of Q[S_n], where ``w'`` is the involution
in the right cell of ``w`` and ``D`` is the dual KL basis. Up to scalars it
consists of matrix units adapted to the right cells.
"""

from __future__ import annotations

import logging
import time
from fractions import Fraction
from typing import Dict, List, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from ..combinatorics.permutations import Permutation
from ..combinatorics.tableaux import inverse_rsk, rsk
from ..models import CheckResult, WedderburnReport
from ..symmetric.characters import character_norm, conjugacy_classes
from ..symmetric.group_algebra import GroupAlgebraElt
from .algebra import ev
from .cells import cells
from .kazhdan_lusztig import dual_kl_table, kl_table

logger = logging.getLogger(__name__)


def cell_involution(w: Permutation) -> Permutation:
    """The involution sharing the insertion tableau of ``w``."""
    p, _ = rsk(w)
    return inverse_rsk(p, p)


def wedderburn_basis(n: int) -> Dict[Permutation, Dict[Permutation, int]]:
    table = kl_table(n)
    dual = dual_kl_table(n)
    basis = {}
    for w in table.elements:
        # ev is an algebra map, so the product can be taken after specializing
        left = GroupAlgebraElt.from_ints(n, ev(dual[cell_involution(w)]))
        right = GroupAlgebraElt.from_ints(n, ev(table.kl[w]))
        f = left * right
        basis[w] = {g: int(c) for g, c in f.terms.items()}
    return basis


def wedderburn_elements(n: int) -> Dict[Permutation, GroupAlgebraElt]:
    return {w: GroupAlgebraElt.from_ints(n, f) for w, f in wedderburn_basis(n).items()}


def _row(elt: GroupAlgebraElt, elements: List[Permutation]) -> List:
    return [QQ(c.numerator, c.denominator) for c in (Fraction(x) for x in elt.vector(elements))]


def _to_fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _direction(elt: GroupAlgebraElt) -> Tuple:
    """``elt`` scaled so its first coefficient is 1; equal iff proportional."""
    support = elt.support()
    lead = elt.terms[support[0]]
    return tuple((w, elt.terms[w] / lead) for w in support)


def _check_invertible(n: int, elements: List[Permutation], fs: Dict[Permutation, GroupAlgebraElt]) -> CheckResult:
    rows = [_row(fs[w], elements) for w in elements]
    rank = DomainMatrix(rows, (len(rows), len(elements)), QQ).rank()
    ok = rank == len(elements)
    return CheckResult("basis", ok, None if ok else f"rank {rank} < {len(elements)}")


def _check_right_cells(n: int, elements: List[Permutation],
                       fs: Dict[Permutation, GroupAlgebraElt]) -> List[CheckResult]:
    results = []
    classes = conjugacy_classes(n)
    for cell in cells(n, "right").classes:
        members = sorted(cell, key=Permutation.sort_key)
        label = rsk(members[0])[0].fmt()
        basis = DomainMatrix([_row(fs[x], elements) for x in members], (len(members), len(elements)), QQ)
        _, pivots = basis.rref()
        if len(pivots) != len(members):
            results.append(CheckResult(f"span {label}", False, "cell elements are linearly dependent"))
            continue
        square_inv = basis.extract(list(range(len(members))), list(pivots)).inv()

        rho: Dict[int, DomainMatrix] = {}
        failure = None
        for i in range(1, n):
            s = Permutation.simple_reflection(n, i)
            coords = []
            for x in members:
                target = DomainMatrix([_row(fs[x].right_mult(s), elements)], (1, len(elements)), QQ)
                c = target.extract([0], list(pivots)) * square_inv
                if (c * basis).to_sparse() != target.to_sparse():
                    failure = f"f{x.fmt()} s{i} leaves the span"
                    break
                coords.append(c.to_list()[0])
            if failure:
                break
            rho[i] = DomainMatrix(coords, (len(members), len(members)), QQ)
        results.append(CheckResult(f"span {label}", failure is None, failure))
        if failure:
            continue

        chi = {}
        for shape, w in classes.items():
            m = DomainMatrix.eye(len(members), QQ).to_dense()
            for i in w.reduced_word:
                m = m * rho[i]
            chi[shape] = sum((_to_fraction(d) for d in m.diagonal()), Fraction(0))
        norm = character_norm(n, chi)
        results.append(CheckResult(f"irreducible {label}", norm == 1, None if norm == 1 else f"norm {norm}"))
    return results


def _check_products(n: int, elements: List[Permutation], fs: Dict[Permutation, GroupAlgebraElt]) -> CheckResult:
    two_sided = cells(n, "two-sided")
    directions = {_direction(f): z for z, f in fs.items()}
    for x in elements:
        for y in elements:
            prod = fs[x] * fs[y]
            same_block = two_sided.class_index[x] == two_sided.class_index[y]
            if prod.is_zero():
                continue
            if not same_block:
                return CheckResult("products", False, f"f{x.fmt()} f{y.fmt()} != 0 across two-sided cells")
            if _direction(prod) not in directions:
                return CheckResult("products", False, f"f{x.fmt()} f{y.fmt()} is not proportional to any f_z")
    return CheckResult("products", True)


def verify_wedderburn(n: int, products: bool = True) -> WedderburnReport:
    """
    Check that the ``f_w`` form a basis of Q[S_n], that each right cell spans
    an irreducible right submodule of the regular module, and (when
    ``products``) that ``f_x f_y`` is zero or proportional to some ``f_z``,
    vanishing across two-sided cells.
    """
    started = time.perf_counter()
    elements = Permutation.all(n)
    fs = wedderburn_elements(n)
    report = WedderburnReport(n=n)
    report.checks.append(_check_invertible(n, elements, fs))
    report.checks.extend(_check_right_cells(n, elements, fs))
    if products:
        report.checks.append(_check_products(n, elements, fs))
    else:
        report.checks.append(CheckResult("products", True, skipped=True))
    logger.info("Wedderburn checks for S%d: %s in %.2fs", n,
                "passed" if report.passed else "FAILED", time.perf_counter() - started)
    return report


def wedderburn_table(n: int) -> List[Tuple[Permutation, GroupAlgebraElt]]:
    fs = wedderburn_elements(n)
    return [(w, fs[w]) for w in Permutation.all(n)]

