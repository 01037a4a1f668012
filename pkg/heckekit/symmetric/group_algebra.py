"""
The group algebra of S_n over Q (``p = 0``) or a prime field F_p.

Coefficients are ``fractions.Fraction`` over Q and reduced integers over
F_p; zero coefficients are never stored.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Union

from sympy import isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.matrices import DomainMatrix

from ..combinatorics.permutations import Permutation
from ..errors import InvalidInput, SizeMismatch

Coefficient = Union[int, Fraction]


def check_field(p: int) -> int:
    p = int(p)
    if p != 0 and not isprime(p):
        raise InvalidInput(f"field characteristic must be 0 or a prime, got {p}")
    return p


def field_domain(p: int):
    """The sympy domain for ``p``: ``QQ`` or ``GF(p)``."""
    return QQ if check_field(p) == 0 else GF(p)


def _transposition(n: int, i: int, j: int) -> Permutation:
    images = list(range(1, n + 1))
    images[i - 1], images[j - 1] = j, i
    return Permutation(tuple(images))


class GroupAlgebraElt:
    __slots__ = ("n", "p", "terms")

    def __init__(self, n: int, terms: Optional[Dict[Permutation, Coefficient]] = None, p: int = 0):
        self.n = n
        self.p = p
        self.terms: Dict[Permutation, Coefficient] = {}
        for w, c in (terms or {}).items():
            if w.n != n:
                raise SizeMismatch(f"{w} is not an element of S{n}")
            c = self._normalize(c)
            if c:
                self.terms[w] = c

    def _normalize(self, c: Coefficient) -> Coefficient:
        if self.p:
            if isinstance(c, Fraction):
                if c.denominator % self.p == 0:
                    raise InvalidInput(f"{c} has no image in F{self.p}")
                return c.numerator * pow(c.denominator, -1, self.p) % self.p
            return int(c) % self.p
        return Fraction(c)

    @classmethod
    def zero(cls, n: int, p: int = 0) -> GroupAlgebraElt:
        return cls(n, {}, p)

    @classmethod
    def element(cls, w: Permutation, p: int = 0, coeff: Coefficient = 1) -> GroupAlgebraElt:
        return cls(w.n, {w: coeff}, p)

    @classmethod
    def identity(cls, n: int, p: int = 0) -> GroupAlgebraElt:
        return cls.element(Permutation.identity(n), p)

    @classmethod
    def generator(cls, n: int, i: int, p: int = 0) -> GroupAlgebraElt:
        return cls.element(Permutation.simple_reflection(n, i), p)

    @classmethod
    def transposition(cls, n: int, i: int, j: int, p: int = 0) -> GroupAlgebraElt:
        if not (1 <= i <= n and 1 <= j <= n) or i == j:
            raise InvalidInput(f"({i},{j}) is not a transposition of S{n}")
        return cls.element(_transposition(n, i, j), p)

    @classmethod
    def from_ints(cls, n: int, terms: Dict[Permutation, int], p: int = 0) -> GroupAlgebraElt:
        return cls(n, dict(terms), p)

    def coeff(self, w: Permutation) -> Coefficient:
        return self.terms.get(w, 0)

    def support(self) -> List[Permutation]:
        return sorted(self.terms, key=Permutation.sort_key)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check(self, other: GroupAlgebraElt):
        if self.n != other.n or self.p != other.p:
            raise SizeMismatch(f"cannot combine elements of F{self.p}[S{self.n}] and F{other.p}[S{other.n}]")

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupAlgebraElt):
            return NotImplemented
        return self.n == other.n and self.p == other.p and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.p, frozenset(self.terms.items())))

    def __add__(self, other: GroupAlgebraElt) -> GroupAlgebraElt:
        if not isinstance(other, GroupAlgebraElt):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return GroupAlgebraElt(self.n, terms, self.p)

    def __neg__(self) -> GroupAlgebraElt:
        return GroupAlgebraElt(self.n, {w: -c for w, c in self.terms.items()}, self.p)

    def __sub__(self, other: GroupAlgebraElt) -> GroupAlgebraElt:
        if not isinstance(other, GroupAlgebraElt):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Coefficient) -> GroupAlgebraElt:
        c = self._normalize(c)
        return GroupAlgebraElt(self.n, {w: c * x for w, x in self.terms.items()}, self.p)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElt):
            self._check(other)
            terms: Dict[Permutation, Coefficient] = {}
            for g, a in self.terms.items():
                for h, b in other.terms.items():
                    gh = g * h
                    terms[gh] = terms.get(gh, 0) + a * b
            return GroupAlgebraElt(self.n, terms, self.p)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def right_mult(self, w: Permutation) -> GroupAlgebraElt:
        return GroupAlgebraElt(self.n, {g * w: c for g, c in self.terms.items()}, self.p)

    def left_mult(self, w: Permutation) -> GroupAlgebraElt:
        return GroupAlgebraElt(self.n, {w * g: c for g, c in self.terms.items()}, self.p)

    def commutes_with(self, other: GroupAlgebraElt) -> bool:
        return self * other == other * self

    def vector(self, elements: Sequence[Permutation]) -> List[Coefficient]:
        return [self.terms.get(w, 0) for w in elements]

    def fmt(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in self.support():
            c = self.terms[w]
            label = w.fmt_word().replace(" ", "")
            if c == 1:
                parts.append(label)
            elif c == -1:
                parts.append(f"-{label}")
            else:
                parts.append(f"{c}{label}" if label != "e" else f"{c}e")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"GroupAlgebraElt({self.fmt()})"

    def to_json(self) -> Dict[str, str]:
        return {w.fmt(): str(c) for w, c in ((w, self.terms[w]) for w in self.support())}


def to_domain(K, c: Coefficient):
    if isinstance(c, Fraction):
        return K(c.numerator, c.denominator)
    return K(c)


def regular_matrix(elt: GroupAlgebraElt, elements: Sequence[Permutation], side: str = "left") -> DomainMatrix:
    """
    Sparse matrix of ``x -> elt * x`` (side="left") or ``x -> x * elt`` on the
    regular module with basis ``elements``; column ``j`` is the image of
    ``elements[j]``.
    """
    if side not in ("left", "right"):
        raise InvalidInput(f"side must be 'left' or 'right', got {side!r}")
    K = field_domain(elt.p)
    index = {w: k for k, w in enumerate(elements)}
    entries: Dict[int, Dict[int, object]] = {}
    for j, x in enumerate(elements):
        for g, c in elt.terms.items():
            target = index[g * x] if side == "left" else index[x * g]
            row = entries.setdefault(target, {})
            row[j] = row.get(j, K.zero) + to_domain(K, c)
    entries = {i: {j: c for j, c in row.items() if c} for i, row in entries.items()}
    entries = {i: row for i, row in entries.items() if row}
    return DomainMatrix(entries, (len(elements), len(elements)), K)
