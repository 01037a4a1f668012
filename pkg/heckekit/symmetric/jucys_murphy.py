"""
Jucys–Murphy elements ``x_k = (1,k) + (2,k) + ... + (k-1,k)`` of F[S_n], the
degenerate affine Hecke relations they satisfy together with the simple
reflections, and the decomposition of the regular module into simultaneous
generalized eigenspaces ``M_i`` grouped into blocks ``M(gamma)``.

Residues live in ``{0, ..., p-1}`` over F_p and in ``{-(n-1), ..., n-1}`` over Q.
"""

from __future__ import annotations

import itertools
import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from ..combinatorics.permutations import Permutation
from ..combinatorics.tableaux import partitions, standard_tableaux, syt_count
from ..errors import InvalidInput, InvariantViolation
from ..models import Block, BlockReport
from .group_algebra import GroupAlgebraElt, check_field, field_domain, regular_matrix

logger = logging.getLogger(__name__)

Residues = Tuple[int, ...]
Gamma = Tuple[Tuple[int, int], ...]


def jucys_murphy(k: int, n: int, p: int = 0) -> GroupAlgebraElt:
    if not 1 <= k <= n:
        raise InvalidInput(f"x{k} is not defined in S{n}")
    p = check_field(p)
    total = GroupAlgebraElt.zero(n, p)
    for i in range(1, k):
        total = total + GroupAlgebraElt.transposition(n, i, k, p)
    return total


def elementary_symmetric(r: int, xs: Sequence[GroupAlgebraElt]) -> GroupAlgebraElt:
    """``e_r(x_1, ..., x_m)``; the ``xs`` must commute."""
    if not xs:
        raise InvalidInput("need at least one element")
    n, p = xs[0].n, xs[0].p
    total = GroupAlgebraElt.zero(n, p)
    for subset in itertools.combinations(xs, r):
        term = GroupAlgebraElt.identity(n, p)
        for x in subset:
            term = term * x
        total = total + term
    return total


def verify_jm_center(n: int, p: int = 0) -> bool:
    """
    Pairwise commutativity of ``x_1, ..., x_n`` and centrality of ``e_1(x)``
    and ``e_2(x)``, tested against every simple reflection.
    """
    xs = [jucys_murphy(k, n, p) for k in range(1, n + 1)]
    for a, b in itertools.combinations(range(n), 2):
        if not xs[a].commutes_with(xs[b]):
            logger.warning("x%d and x%d do not commute in F%d[S%d]", a + 1, b + 1, p, n)
            return False
    for r in (1, 2):
        e = elementary_symmetric(r, xs)
        for i in range(1, n):
            if not e.commutes_with(GroupAlgebraElt.generator(n, i, p)):
                logger.warning("e%d(x) does not commute with s%d", r, i)
                return False
    return True


def verify_daha(n: int, p: int = 0) -> bool:
    """
    Degenerate affine Hecke relations with ``T_i = s_i`` and ``X_k = x_k``:
    ``T_i^2 = 1``, the braid and far commutation relations, ``X_k X_l = X_l X_k``,
    ``X_{i+1} T_i = T_i X_i + 1`` and ``T_i X_k = X_k T_i`` for ``k != i, i+1``.
    """
    one = GroupAlgebraElt.identity(n, p)
    ts = {i: GroupAlgebraElt.generator(n, i, p) for i in range(1, n)}
    xs = {k: jucys_murphy(k, n, p) for k in range(1, n + 1)}

    checks = []
    for i, t in ts.items():
        checks.append((f"T{i}^2 = 1", t * t == one))
        if i + 1 in xs:
            checks.append((f"X{i + 1} T{i} = T{i} X{i} + 1", xs[i + 1] * t == t * xs[i] + one))
        for k, x in xs.items():
            if k not in (i, i + 1):
                checks.append((f"T{i} X{k} = X{k} T{i}", t.commutes_with(x)))
        for j, u in ts.items():
            if j - i > 1:
                checks.append((f"T{i} T{j} = T{j} T{i}", t.commutes_with(u)))
            if j - i == 1:
                checks.append((f"braid T{i} T{j}", t * u * t == u * t * u))
    for k, l in itertools.combinations(xs, 2):
        checks.append((f"X{k} X{l} = X{l} X{k}", xs[k].commutes_with(xs[l])))

    failed = [name for name, ok in checks if not ok]
    if failed:
        logger.warning("degenerate affine relations failing in S%d: %s", n, ", ".join(failed))
    return not failed


def residues(n: int, p: int) -> List[int]:
    return list(range(p)) if p else list(range(-(n - 1), n))


def gamma_of(weight: Residues) -> Gamma:
    """Residue -> number of coordinates equal to it."""
    return tuple(sorted(Counter(weight).items()))


def insert_residue(gamma: Gamma, i: int) -> Gamma:
    counts = dict(gamma)
    counts[i] = counts.get(i, 0) + 1
    return tuple(sorted(counts.items()))


def remove_residue(gamma: Gamma, i: int) -> Gamma:
    counts = dict(gamma)
    if not counts.get(i):
        raise InvalidInput(f"residue {i} does not occur in {list(gamma)}")
    counts[i] -= 1
    return tuple(sorted((r, c) for r, c in counts.items() if c))


@dataclass
class FormalCharacter:
    p: int
    n: int
    weights: Dict[Residues, int] = field(default_factory=dict)

    def __post_init__(self):
        self.weights = {tuple(w): m for w, m in self.weights.items() if m}
        for w, m in self.weights.items():
            if len(w) != self.n or m < 0:
                raise InvalidInput(f"bad weight {w} with multiplicity {m} for n={self.n}")

    @property
    def total(self) -> int:
        return sum(self.weights.values())

    def blocks(self) -> Dict[Gamma, int]:
        out: Dict[Gamma, int] = {}
        for w, m in self.weights.items():
            g = gamma_of(w)
            out[g] = out.get(g, 0) + m
        return out

    def __add__(self, other: FormalCharacter) -> FormalCharacter:
        if (self.p, self.n) != (other.p, other.n):
            raise InvalidInput("characters of different (p, n) cannot be added")
        weights = dict(self.weights)
        for w, m in other.weights.items():
            weights[w] = weights.get(w, 0) + m
        return FormalCharacter(self.p, self.n, weights)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "weights": [{"residues": list(w), "multiplicity": m} for w, m in sorted(self.weights.items())],
        }


def _residue(p: int, i: int) -> int:
    return i % p if p else i


def restrict_character(ch: FormalCharacter, i: int) -> FormalCharacter:
    """Weights ending in ``i``, with that last coordinate removed."""
    if ch.n < 1:
        raise InvalidInput("cannot restrict a character of S0")
    i = _residue(ch.p, i)
    weights: Dict[Residues, int] = {}
    for w, m in ch.weights.items():
        if w[-1] == i:
            weights[w[:-1]] = weights.get(w[:-1], 0) + m
    return FormalCharacter(ch.p, ch.n - 1, weights)


def induce_character(ch: FormalCharacter, i: int) -> FormalCharacter:
    """
    Every weight extended by the coordinate ``i``. This is bookkeeping on
    weights only; it is not the character of an induced module.
    """
    i = _residue(ch.p, i)
    return FormalCharacter(ch.p, ch.n + 1, {w + (i,): m for w, m in ch.weights.items()})


def tableau_character(n: int, p: int = 0) -> FormalCharacter:
    """Content vectors of standard tableaux (mod ``p``), each counted ``d_lambda`` times."""
    p = check_field(p)
    weights: Dict[Residues, int] = {}
    for shape in partitions(n):
        d = syt_count(shape)
        for t in standard_tableaux(shape):
            w = tuple(_residue(p, c) for c in t.content_vector())
            weights[w] = weights.get(w, 0) + d
    return FormalCharacter(p, n, weights)


def _generalized_eigenspace(X: DomainMatrix, r: int, basis: DomainMatrix, cap: int):
    """Columns spanning ``ker (X - r)^N`` inside the X-invariant column span of ``basis``."""
    K = X.domain
    N = X.shape[0]
    A = X if r == 0 else X.sub(DomainMatrix.eye(N, K).scalarmul(K(r)))
    d = basis.shape[1]
    Y = basis
    prev = d
    for _ in range(cap):
        Y = A.matmul(Y)
        rk = Y.rank()
        if rk == prev:
            break
        prev = rk
    if prev == d:
        return None
    kernel = Y.nullspace().to_sparse()
    return basis.matmul(kernel.transpose())


def jm_eigenspaces(n: int, p: int = 0) -> List[Tuple[Residues, DomainMatrix]]:
    """
    Simultaneous generalized eigenspaces of ``x_1, ..., x_n`` on the left
    regular module, as (residue vector, column basis) pairs.
    """
    p = check_field(p)
    K = field_domain(p)
    elements = Permutation.all(n)
    size = len(elements)
    xs = [regular_matrix(jucys_murphy(k, n, p), elements, "left") for k in range(1, n + 1)]
    found: List[Tuple[Residues, DomainMatrix]] = []

    def split(k: int, basis: DomainMatrix, prefix: Residues):
        if k == n:
            found.append((prefix, basis))
            return
        for r in residues(n, p):
            sub = _generalized_eigenspace(xs[k], r, basis, size)
            if sub is not None:
                split(k + 1, sub, prefix + (r,))

    split(0, DomainMatrix.eye(size, K), ())
    dims = sum(b.shape[1] for _, b in found)
    if dims != size:
        raise InvariantViolation(f"eigenspaces of the regular module of S{n} have total dimension {dims}",
                                 witness=[(w, b.shape[1]) for w, b in found])
    return found


def _report(n: int, p: int, spaces: List[Tuple[Residues, DomainMatrix]]) -> BlockReport:
    grouped: Dict[Gamma, Dict[Residues, int]] = {}
    for w, basis in spaces:
        grouped.setdefault(gamma_of(w), {})[w] = basis.shape[1]
    blocks = [Block(gamma=g, dimension=sum(ws.values()), weights=ws) for g, ws in sorted(grouped.items())]
    return BlockReport(n=n, p=p, blocks=blocks)


def block_decompose(n: int, p: int = 0) -> BlockReport:
    started = time.perf_counter()
    report = _report(n, p, jm_eigenspaces(n, p))
    logger.info("F%d[S%d] splits into %d blocks in %.2fs", p, n, len(report.blocks), time.perf_counter() - started)
    return report


def regular_character(n: int, p: int = 0) -> FormalCharacter:
    return FormalCharacter(p, n, {w: b.shape[1] for w, b in jm_eigenspaces(n, p)})


def verify_block_invariance(n: int, p: int = 0) -> BlockReport:
    """Block decomposition, with each ``M(gamma)`` checked stable under every ``s_i``."""
    spaces = jm_eigenspaces(n, p)
    report = _report(n, p, spaces)
    elements = Permutation.all(n)
    gens = [regular_matrix(GroupAlgebraElt.generator(n, i, p), elements, "left") for i in range(1, n)]
    by_gamma: Dict[Gamma, List[DomainMatrix]] = {}
    for w, basis in spaces:
        by_gamma.setdefault(gamma_of(w), []).append(basis.to_dense())
    invariant = True
    for g, bases in by_gamma.items():
        B = bases[0].hstack(*bases[1:]) if len(bases) > 1 else bases[0]
        rank = B.rank()
        for i, S in enumerate(gens, 1):
            image = S.to_dense() * B
            if B.hstack(image).rank() != rank:
                logger.warning("block %s of F%d[S%d] is not stable under s%d", list(g), p, n, i)
                invariant = False
    report.invariant = invariant
    return report
