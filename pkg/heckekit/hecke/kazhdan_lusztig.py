"""
Kazhdan–Lusztig basis, mu-function and the dual basis.

The basis is built by induction on length: for ``w = x s`` with ``s`` the
smallest right descent of ``w``,

    KL(w) = KL(x) * (H_s + v) - sum mu(y, x) KL(y)   over y < x with ys < y.

Each ``KL(x)`` is kept as its expansion ``sum_y h_{y,x} H_y`` in the
standard basis.
"""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from ..combinatorics.permutations import Permutation, bruhat_leq
from ..config import Settings
from ..errors import InvalidInput, InvariantViolation, SingularPairing
from ..laurent import ONE, V, V_INV, ZERO, LaurentPoly
from .algebra import QUADRATIC, HeckeElt, bar_involution, mult_standard, trace_tau

logger = logging.getLogger(__name__)

# tables up to this n are built ahead of use by warm_kl_tables
EAGER_MAX_N = 5

LaurentRow = Dict[int, LaurentPoly]


@dataclass
class KLTable:
    n: int
    elements: List[Permutation]
    kl: Dict[Permutation, HeckeElt] = field(repr=False)

    def kl_elt(self, x: Permutation) -> HeckeElt:
        self._check(x)
        return self.kl[x]

    def h(self, y: Permutation, x: Permutation) -> LaurentPoly:
        """The polynomial ``h_{y,x}``: coefficient of ``H_y`` in ``KL(x)``."""
        return self.kl_elt(x).coeff(y)

    def mu(self, y: Permutation, x: Permutation) -> int:
        """Coefficient of ``v`` in ``h_{y,x}`` (zero on the diagonal)."""
        if y == x:
            return 0
        return self.h(y, x).coeff(1)

    @cached_property
    def mu_lists(self) -> Dict[Permutation, List[Tuple[Permutation, int]]]:
        """For each ``x`` the pairs ``(y, mu(y, x))`` with ``mu != 0``."""
        out = {}
        for x, elt in self.kl.items():
            out[x] = [(y, h.coeff(1)) for y, h in elt.items() if y != x and h.coeff(1)]
        return out

    @cached_property
    def index(self) -> Dict[Permutation, int]:
        return {w: k for k, w in enumerate(self.elements)}

    @cached_property
    def containing(self) -> Dict[Permutation, List[Tuple[Permutation, LaurentPoly]]]:
        """For each ``y`` the pairs ``(x, h_{y,x})`` with ``h_{y,x} != 0``."""
        out: Dict[Permutation, List[Tuple[Permutation, LaurentPoly]]] = {w: [] for w in self.elements}
        for x, elt in self.kl.items():
            for y, h in elt.terms.items():
                out[y].append((x, h))
        return out

    def _check(self, x: Permutation):
        if x.n != self.n:
            raise InvalidInput(f"{x} is not an element of S{self.n}")

    def verify(self):
        """Raise ``InvariantViolation`` unless every stored ``h`` is admissible."""
        for x, elt in self.kl.items():
            if elt.coeff(x) != ONE:
                raise InvariantViolation(f"h_{{x,x}} != 1 for x = {x}", witness=x)
            for y, h in elt.terms.items():
                if y == x:
                    continue
                if h.valuation() < 1:
                    raise InvariantViolation(f"h_{{{y},{x}}} = {h} is not in vZ[v]", witness=(y, x))
                if not bruhat_leq(y, x):
                    raise InvariantViolation(f"h_{{{y},{x}}} != 0 but {y} is not below {x}", witness=(y, x))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rows": {x.fmt(): self.kl[x].to_json() for x in self.elements},
        }

    @classmethod
    def from_json(cls, data: dict) -> KLTable:
        n = int(data["n"])
        elements = Permutation.all(n)
        rows = data["rows"]
        kl = {}
        for x in elements:
            kl[x] = HeckeElt.from_json(n, rows[x.fmt()])
        return cls(n=n, elements=elements, kl=kl)


def _compute_kl_table(n: int) -> KLTable:
    started = time.perf_counter()
    elements = Permutation.all(n)
    e = Permutation.identity(n)
    kl: Dict[Permutation, HeckeElt] = {e: HeckeElt.unit(n)}
    mu_lists: Dict[Permutation, List[Tuple[Permutation, int]]] = {e: []}

    for w in elements[1:]:
        i = min(w.descents_right)
        x = w.right_multiply(i)
        base = kl[x]
        elt = base.right_mult_generator(i) + base.scale(V)
        for y, m in mu_lists[x]:
            if i in y.descents_right:
                elt = elt - kl[y].scale(m)
        kl[w] = elt
        mu_lists[w] = [(y, h.coeff(1)) for y, h in elt.terms.items() if y != w and h.coeff(1)]
        logger.debug("KL(%s) has %d terms", w, len(elt.terms))

    table = KLTable(n=n, elements=elements, kl=kl)
    logger.info("computed KL table for S%d: %d elements in %.2fs", n, len(elements), time.perf_counter() - started)
    return table


@lru_cache(maxsize=None)
def kl_table(n: int) -> KLTable:
    if n < 1:
        raise InvalidInput(f"need n >= 1, got {n}")
    return _compute_kl_table(n)


def load_kl_table(n: int, settings: Optional[Settings] = None) -> KLTable:
    """
    ``kl_table(n)``, read from or written to ``settings.cache_dir`` when a
    cache directory is configured.
    """
    settings = settings or Settings.from_env()
    if settings.cache_dir is None:
        return kl_table(n)

    path = Path(settings.cache_dir) / f"kl_{n}.json"
    if path.exists():
        try:
            with open(path, "r", encoding="utf-8") as fh:
                table = KLTable.from_json(json.load(fh))
            if table.n != n:
                raise InvalidInput(f"cache file holds S{table.n}, expected S{n}")
            logger.info("loaded KL table for S%d from %s", n, path)
            return table
        except (OSError, ValueError, KeyError) as exc:
            logger.warning("ignoring unreadable KL cache %s: %s", path, exc)

    table = kl_table(n)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(table.to_json(), fh, indent=1, sort_keys=True)
        logger.info("wrote KL table for S%d to %s", n, path)
    except OSError as exc:
        logger.warning("could not write KL cache %s: %s", path, exc)
    return table


def warm_kl_tables(settings: Optional[Settings] = None, upto: int = EAGER_MAX_N) -> List[KLTable]:
    """Build the tables for S_1 .. S_upto now, through the cache when one is configured."""
    tables = [load_kl_table(n, settings) for n in range(1, upto + 1)]
    logger.info("KL tables ready for n <= %d", upto)
    return tables


def kl_elt(x: Permutation) -> HeckeElt:
    return kl_table(x.n).kl_elt(x)


def kl_polynomial(y: Permutation, x: Permutation) -> LaurentPoly:
    return kl_table(x.n).h(y, x)


def mu(y: Permutation, x: Permutation) -> int:
    return kl_table(x.n).mu(y, x)


def check_bar_invariance(table: KLTable):
    for x in table.elements:
        elt = table.kl[x]
        if bar_involution(elt) != elt:
            raise InvariantViolation(f"KL({x}) is not bar-invariant", witness=x)


def to_kl_basis(table: KLTable, elt: HeckeElt) -> Dict[Permutation, LaurentPoly]:
    """Rewrite a standard-basis element in the KL basis, peeling off longest terms."""
    rem = dict(elt.terms)
    out: Dict[Permutation, LaurentPoly] = {}
    while rem:
        w = max(rem, key=Permutation.sort_key)
        c = rem[w]
        out[w] = c
        for y, h in table.kl[w].terms.items():
            total = rem.get(y, ZERO) - c * h
            if total:
                rem[y] = total
            else:
                rem.pop(y, None)
    return out


def generator_product(table: KLTable, x: Permutation, i: int, side: str = "right") -> Dict[Permutation, LaurentPoly]:
    """
    ``KL(x) KL(s_i)`` (side="right") or ``KL(s_i) KL(x)`` (side="left") in
    the KL basis, read off from the mu-function:

        KL(x) KL(s) = (v + v^-1) KL(x)                            if xs < x
                    = KL(xs) + sum mu(y, x) KL(y) over ys < y     otherwise
    """
    if side == "right":
        descents = lambda w: w.descents_right
        step = x.right_multiply(i)
    elif side == "left":
        descents = lambda w: w.descents_left
        step = x.left_multiply(i)
    else:
        raise InvalidInput(f"side must be 'left' or 'right', got {side!r}")

    if i in descents(x):
        return {x: V + V_INV}
    out = {step: ONE}
    for y, m in table.mu_lists[x]:
        if i in descents(y):
            out[y] = out.get(y, ZERO) + LaurentPoly.constant(m)
    return out


def kl_multiply(x: Permutation, y: Permutation, table: Optional[KLTable] = None) -> Dict[Permutation, LaurentPoly]:
    """Structure constants of ``KL(x) KL(y)`` in the KL basis."""
    table = table or kl_table(x.n)
    table._check(x)
    table._check(y)
    if x.length == 0:
        return {y: ONE}
    if y.length == 0:
        return {x: ONE}
    if y.length == 1:
        return generator_product(table, x, y.reduced_word[0], "right")
    if x.length == 1:
        return generator_product(table, y, x.reduced_word[0], "left")
    return to_kl_basis(table, mult_standard(table.kl[x], table.kl[y]))


def pairing_rows(n: int) -> List[LaurentRow]:
    """
    ``rows[z][w] = tau(H_z H_w)`` computed from the multiplication rule: for
    ``z = z' s``, ``tau(H_z H_w) = tau(H_z' H_sw) + [sw < w] (v^-1 - v) tau(H_z' H_w)``.
    """
    elements = Permutation.all(n)
    index = {w: k for k, w in enumerate(elements)}
    rows: List[LaurentRow] = [dict() for _ in elements]
    rows[0] = {0: ONE}
    for k, z in enumerate(elements[1:], 1):
        i = min(z.descents_right)
        prev = rows[index[z.right_multiply(i)]]
        row: LaurentRow = {}
        for u, c in prev.items():
            w = elements[u]
            target = index[w.left_multiply(i)]
            row[target] = row.get(target, ZERO) + c
            if i in w.descents_left:
                row[u] = row.get(u, ZERO) + c * QUADRATIC
        rows[k] = {w: c for w, c in row.items() if c}
    return rows


def pairing_matrix(table: KLTable) -> List[LaurentRow]:
    """``G[z][y] = tau(H_z KL(y^-1))`` indexed by positions in ``table.elements``."""
    index = table.index
    rows = pairing_rows(table.n)
    containing = table.containing
    gram: List[LaurentRow] = []
    for r in rows:
        row: LaurentRow = {}
        for w, c in r.items():
            for x, h in containing[table.elements[w]]:
                y = index[x.inverse()]
                row[y] = row.get(y, ZERO) + c * h
        gram.append({y: c for y, c in row.items() if c})
    return gram


def _subtract_row(target: LaurentRow, factor: LaurentPoly, source: LaurentRow):
    for j, c in source.items():
        total = target.get(j, ZERO) - factor * c
        if total:
            target[j] = total
        else:
            target.pop(j, None)


def invert_unimodular(matrix: List[LaurentRow]) -> List[LaurentRow]:
    """
    Gauss–Jordan inverse over ``Z[v, v^-1]``. Pivots must be units ``±v^k``;
    the diagonal is preferred when it qualifies.
    """
    size = len(matrix)
    rows = [dict(r) for r in matrix]
    aug: List[LaurentRow] = [{k: ONE} for k in range(size)]
    pivot_of: Dict[int, int] = {}
    free = set(range(size))
    for col in range(size):
        candidates = [r for r in free if col in rows[r] and rows[r][col].is_unit()]
        if not candidates:
            raise SingularPairing(f"no unit pivot in column {col}", witness=col)
        r = col if col in candidates else min(candidates)
        free.remove(r)
        inv = rows[r][col] ** -1
        if inv != ONE:
            rows[r] = {j: inv * c for j, c in rows[r].items()}
            aug[r] = {j: inv * c for j, c in aug[r].items()}
        for other in range(size):
            if other != r and col in rows[other]:
                factor = rows[other][col]
                _subtract_row(rows[other], factor, rows[r])
                _subtract_row(aug[other], factor, aug[r])
        pivot_of[col] = r
    return [aug[pivot_of[col]] for col in range(size)]


def _row_times_matrix(row: LaurentRow, matrix: List[LaurentRow]) -> LaurentRow:
    out: LaurentRow = {}
    for k, c in row.items():
        for j, x in matrix[k].items():
            out[j] = out.get(j, ZERO) + c * x
    return {j: c for j, c in out.items() if c}


@lru_cache(maxsize=None)
def dual_kl_table(n: int) -> Dict[Permutation, HeckeElt]:
    """
    The dual basis ``D(x)`` with ``tau(D(x) KL(y^-1)) = delta_{x,y}``, written
    in the standard basis. Solved from the pairing matrix and checked post hoc.
    """
    table = kl_table(n)
    started = time.perf_counter()
    gram = pairing_matrix(table)
    inverse = invert_unimodular(gram)
    for k, row in enumerate(inverse):
        if _row_times_matrix(row, gram) != {k: ONE}:
            raise InvariantViolation(f"dual basis element for {table.elements[k]} fails the pairing",
                                     witness=table.elements[k])
    dual = {
        x: HeckeElt(n, {table.elements[z]: c for z, c in inverse[k].items()})
        for k, x in enumerate(table.elements)
    }
    logger.info("computed dual KL basis for S%d in %.2fs", n, time.perf_counter() - started)
    return dual


def dual_kl_elt(x: Permutation) -> HeckeElt:
    return dual_kl_table(x.n)[x]


def check_dual_pairing(n: int):
    """Brute-force ``tau(D(x) KL(y^-1)) = delta`` through standard multiplication."""
    table = kl_table(n)
    dual = dual_kl_table(n)
    for x in table.elements:
        for y in table.elements:
            value = trace_tau(mult_standard(dual[x], table.kl[y.inverse()]))
            expected = ONE if x == y else ZERO
            if value != expected:
                raise InvariantViolation(f"tau(D({x}) KL({y}^-1)) = {value}", witness=(x, y))
