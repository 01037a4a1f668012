"""
Representations of the Hecke algebra given by the matrices of the KL
generators ``KL(s_i) = H_s + v``: cell modules, parabolic modules and their
specializations at ``v = 1``.

All matrices use the column convention: column ``j`` is the image of the
``j``-th basis vector. For a left module ``rho(ab) = rho(a) rho(b)``; for a
right module the product is taken in the opposite order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import reduce
from typing import Dict, Iterable, List, Optional, Sequence

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from ..combinatorics.permutations import Permutation, coset_reps
from ..combinatorics.tableaux import rsk, syt_count
from ..errors import InvalidInput, InvariantViolation
from ..laurent import ONE, V, V_INV, ZERO, LaurentPoly
from ..matrix import LaurentMatrix
from ..models import SpechtReport
from ..symmetric.characters import ClassFunction, character_norm, conjugacy_classes, format_cycle_type
from .cells import cells
from .kazhdan_lusztig import KLTable, generator_product, kl_table

logger = logging.getLogger(__name__)

SIDES = ("left", "right")
PARABOLIC_PARAMETERS = ("minus_v", "v_inverse")


@dataclass
class LinearRep:
    n: int
    side: str
    basis_labels: List[str]
    generator_matrices: Dict[int, LaurentMatrix] = field(repr=False)
    basis: Optional[List[Permutation]] = field(default=None, repr=False)
    # "cell" or "parabolic"
    origin: str = "cell"

    def __post_init__(self):
        if self.side not in SIDES:
            raise InvalidInput(f"side must be 'left' or 'right', got {self.side!r}")
        d = self.dimension
        for i, m in self.generator_matrices.items():
            if m.shape != (d, d):
                raise InvalidInput(f"matrix of s{i} has shape {m.shape}, expected ({d}, {d})")

    @property
    def dimension(self) -> int:
        return len(self.basis_labels)

    def matrix(self, i: int) -> LaurentMatrix:
        return self.generator_matrices[i]

    def word_matrix(self, word: Sequence[int]) -> LaurentMatrix:
        """Matrix of ``KL(s_i1) ... KL(s_ik)``."""
        mats = [self.generator_matrices[i] for i in word]
        if self.side == "right":
            mats.reverse()
        return reduce(lambda a, b: a @ b, mats, LaurentMatrix.identity(self.dimension))

    def check_relations(self):
        """
        ``A_i^2 = (v + v^-1) A_i``, ``A_i A_j = A_j A_i`` for ``|i - j| > 1``
        and ``A_i A_j A_i + A_j = A_j A_i A_j + A_i`` for ``|i - j| = 1``.
        """
        quantum_two = V + V_INV
        for i, a in self.generator_matrices.items():
            if a @ a != a.scale(quantum_two):
                raise InvariantViolation(f"quadratic relation fails for s{i}", witness=i)
        for i, a in self.generator_matrices.items():
            for j, b in self.generator_matrices.items():
                if j <= i:
                    continue
                if j - i > 1 and a @ b != b @ a:
                    raise InvariantViolation(f"s{i} and s{j} do not commute", witness=(i, j))
                if j - i == 1 and a @ b @ a + b != b @ a @ b + a:
                    raise InvariantViolation(f"braid relation fails for s{i}, s{j}", witness=(i, j))
        return True

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "side": self.side,
            "basis": self.basis_labels,
            "matrices": {str(i): m.to_json() for i, m in sorted(self.generator_matrices.items())},
        }


def cell_module(n: int, cell: Iterable[Permutation], side: str, table: Optional[KLTable] = None) -> LinearRep:
    """
    Span of ``KL(w)``, ``w`` in a left (right) cell, with ``KL(s)`` acting by
    left (right) multiplication and terms outside the cell dropped.
    """
    if side not in SIDES:
        raise InvalidInput(f"side must be 'left' or 'right', got {side!r}")
    table = table or kl_table(n)
    members = sorted(set(cell), key=Permutation.sort_key)
    if not members or any(w.n != n for w in members):
        raise InvalidInput(f"cell must be a nonempty set of elements of S{n}")
    if not cells(n, side, table).is_cell(members):
        raise InvalidInput(f"{[w.fmt() for w in members]} is not a {side} cell of S{n}")

    index = {w: k for k, w in enumerate(members)}
    matrices = {}
    for i in range(1, n):
        columns = []
        for w in members:
            product = generator_product(table, w, i, side)
            columns.append({index[y]: c for y, c in product.items() if y in index})
        matrices[i] = LaurentMatrix.from_columns(len(members), columns)
    rep = LinearRep(n=n, side=side, basis_labels=[w.fmt() for w in members],
                    generator_matrices=matrices, basis=members)
    rep.check_relations()
    return rep


def parabolic_module(n: int, parabolic: Iterable[int], u: str) -> LinearRep:
    """
    The right module with basis ``M_x``, ``x`` a shortest coset representative
    of ``W_J \\ S_n``:

        M_x KL(s) = M_xs + v M_x          xs a representative, xs > x
                  = M_xs + v^-1 M_x       xs a representative, xs < x
                  = (v + v^-1) M_x        xs not a representative, u = v^-1
                  = 0                     xs not a representative, u = -v
    """
    if u not in PARABOLIC_PARAMETERS:
        raise InvalidInput(f"u must be one of {', '.join(PARABOLIC_PARAMETERS)}; got {u!r}")
    parabolic = frozenset(parabolic)
    reps = coset_reps(n, parabolic)
    index = {x: k for k, x in enumerate(reps)}
    matrices = {}
    for i in range(1, n):
        columns = []
        for x in reps:
            xs = x.right_multiply(i)
            if xs in index:
                columns.append({index[xs]: ONE, index[x]: V if xs.length > x.length else V_INV})
            elif u == "v_inverse":
                columns.append({index[x]: V + V_INV})
            else:
                columns.append({})
        matrices[i] = LaurentMatrix.from_columns(len(reps), columns)
    rep = LinearRep(n=n, side="right", basis_labels=[f"M{x.fmt()}" for x in reps],
                    generator_matrices=matrices, basis=reps, origin="parabolic")
    rep.check_relations()
    return rep


def specialize(rep: LinearRep) -> Dict[int, DomainMatrix]:
    """Integer matrices of ``s_i`` at ``v = 1``, where ``KL(s_i)`` becomes ``e + s_i``."""
    eye = DomainMatrix.eye(rep.dimension, ZZ).to_dense()
    return {i: m.at_one().to_dense() - eye for i, m in rep.generator_matrices.items()}


def _equal(a: DomainMatrix, b: DomainMatrix) -> bool:
    return a.to_sparse() == b.to_sparse()


def check_group_relations(n: int, mats: Dict[int, DomainMatrix]):
    if not mats:
        return True
    d = next(iter(mats.values())).shape[0]
    eye = DomainMatrix.eye(d, ZZ).to_dense()
    for i, a in mats.items():
        if not _equal(a * a, eye):
            raise InvariantViolation(f"s{i} does not square to the identity at v = 1", witness=i)
        for j, b in mats.items():
            if j <= i:
                continue
            if j - i > 1 and not _equal(a * b, b * a):
                raise InvariantViolation(f"s{i} and s{j} do not commute at v = 1", witness=(i, j))
            if j - i == 1 and not _equal(a * b * a, b * a * b):
                raise InvariantViolation(f"braid relation fails for s{i}, s{j} at v = 1", witness=(i, j))
    return True


def group_element_matrix(side: str, mats: Dict[int, DomainMatrix], d: int, w: Permutation) -> DomainMatrix:
    word = list(w.reduced_word)
    if side == "right":
        word.reverse()
    result = DomainMatrix.eye(d, ZZ).to_dense()
    for i in word:
        result = result * mats[i]
    return result


def specialized_character(rep: LinearRep, mats: Optional[Dict[int, DomainMatrix]] = None) -> ClassFunction:
    mats = mats if mats is not None else specialize(rep)
    chi = {}
    for shape, w in conjugacy_classes(rep.n).items():
        m = group_element_matrix(rep.side, mats, rep.dimension, w)
        chi[shape] = int(sum(m.diagonal(), ZZ.zero))
    return chi


def specialize_and_test_specht(rep: LinearRep) -> SpechtReport:
    """Dimension, character and character norm of ``rep`` at ``v = 1``."""
    mats = specialize(rep)
    check_group_relations(rep.n, mats)
    chi = specialized_character(rep, mats)
    norm = character_norm(rep.n, chi)

    shape = expected = None
    if rep.origin == "cell" and rep.basis:
        shape = rsk(rep.basis[0])[0].shape
        expected = syt_count(shape)
        if expected != rep.dimension:
            raise InvariantViolation(
                f"cell of shape {shape} has dimension {rep.dimension}, expected {expected}",
                witness=rep.basis_labels,
            )
    logger.debug("specialized %s module of dimension %d has norm %s", rep.side, rep.dimension, norm)
    return SpechtReport(
        n=rep.n,
        side=rep.side,
        cell=list(rep.basis_labels),
        dimension=rep.dimension,
        character={format_cycle_type(k): v for k, v in chi.items()},
        norm=norm,
        shape=shape,
        expected_dimension=expected,
    )


def specht_reports(n: int, side: str = "left", table: Optional[KLTable] = None) -> List[SpechtReport]:
    table = table or kl_table(n)
    partition = cells(n, side, table)
    return [specialize_and_test_specht(cell_module(n, cls, side, table)) for cls in partition.classes]


def action_on(rep: LinearRep, i: int, k: int) -> Dict[str, LaurentPoly]:
    """Image of the ``k``-th basis vector under ``KL(s_i)``, by label."""
    return {rep.basis_labels[j]: c for j, c in rep.matrix(i).column(k).items() if c != ZERO}
