"""
The Hecke algebra of S_n over Z[v, v^-1] in the standard basis.

Normalization: ``H_s^2 = H_e + (v^-1 - v) H_s``, so the Kazhdan–Lusztig
generator is ``H_s + v H_e`` and ``v = 1`` recovers the group algebra.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from ..combinatorics.permutations import Permutation
from ..errors import InvalidInput, SizeMismatch
from ..laurent import ONE, V, V_INV, ZERO, LaurentPoly, Scalar, as_laurent

# H_s^2 = H_e + QUADRATIC * H_s
QUADRATIC = V_INV - V
# bar(H_s) = H_s + BAR_SHIFT * H_e
BAR_SHIFT = V - V_INV


def _accumulate(terms: Dict[Permutation, LaurentPoly], w: Permutation, c: LaurentPoly):
    total = terms.get(w, ZERO) + c
    if total:
        terms[w] = total
    else:
        terms.pop(w, None)


class HeckeElt:
    """A finite sum ``sum_x c_x H_x``; zero coefficients are never stored."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Optional[Dict[Permutation, Scalar]] = None):
        self.n = n
        self.terms: Dict[Permutation, LaurentPoly] = {}
        for w, c in (terms or {}).items():
            if w.n != n:
                raise SizeMismatch(f"H_{w} does not belong to the Hecke algebra of S{n}")
            c = as_laurent(c)
            if c:
                self.terms[w] = c

    @classmethod
    def standard(cls, w: Permutation) -> HeckeElt:
        return cls(w.n, {w: ONE})

    @classmethod
    def unit(cls, n: int) -> HeckeElt:
        return cls.standard(Permutation.identity(n))

    @classmethod
    def generator(cls, n: int, i: int) -> HeckeElt:
        return cls.standard(Permutation.simple_reflection(n, i))

    def coeff(self, w: Permutation) -> LaurentPoly:
        return self.terms.get(w, ZERO)

    def support(self) -> List[Permutation]:
        return sorted(self.terms, key=Permutation.sort_key)

    def items(self) -> Iterator[Tuple[Permutation, LaurentPoly]]:
        for w in self.support():
            yield w, self.terms[w]

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _check(self, other: HeckeElt):
        if self.n != other.n:
            raise SizeMismatch(f"Hecke elements of S{self.n} and S{other.n} cannot be combined")

    def __add__(self, other: HeckeElt) -> HeckeElt:
        if not isinstance(other, HeckeElt):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            _accumulate(terms, w, c)
        return HeckeElt(self.n, terms)

    def __neg__(self) -> HeckeElt:
        return HeckeElt(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: HeckeElt) -> HeckeElt:
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> HeckeElt:
        c = as_laurent(c)
        return HeckeElt(self.n, {w: c * x for w, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return mult_standard(self, other)
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def right_mult_generator(self, i: int) -> HeckeElt:
        """``self * H_{s_i}``."""
        out: Dict[Permutation, LaurentPoly] = {}
        for y, c in self.terms.items():
            _accumulate(out, y.right_multiply(i), c)
            if i in y.descents_right:
                _accumulate(out, y, c * QUADRATIC)
        return HeckeElt(self.n, out)

    def left_mult_generator(self, i: int) -> HeckeElt:
        """``H_{s_i} * self``."""
        out: Dict[Permutation, LaurentPoly] = {}
        for y, c in self.terms.items():
            _accumulate(out, y.left_multiply(i), c)
            if i in y.descents_left:
                _accumulate(out, y, c * QUADRATIC)
        return HeckeElt(self.n, out)

    def bar(self) -> HeckeElt:
        return bar_involution(self)

    def trace(self) -> LaurentPoly:
        return trace_tau(self)

    def at_one(self) -> Dict[Permutation, int]:
        return ev(self)

    def fmt(self) -> str:
        """``(v)H[2,1,3] + H[1,2,3]``-style listing, longest elements first."""
        if not self.terms:
            return "0"
        parts = []
        for w in reversed(self.support()):
            c = self.terms[w]
            label = f"H{w.fmt()}"
            if c == 1:
                parts.append(label)
            elif c == -1:
                parts.append(f"-{label}")
            else:
                parts.append(f"({c.fmt()}){label}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"HeckeElt({self.fmt()})"

    def to_json(self) -> Dict[str, str]:
        return {w.fmt(): c.fmt() for w, c in self.items()}

    @classmethod
    def from_json(cls, n: int, data: Dict[str, str]) -> HeckeElt:
        return cls(n, {Permutation.parse(k): LaurentPoly.parse(c) for k, c in data.items()})


def mult_standard(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    """Product in the standard basis, one generator of each ``H_y`` at a time."""
    a._check(b)
    result = HeckeElt(a.n)
    for y, c in b.terms.items():
        prod = a
        for i in y.reduced_word:
            prod = prod.right_mult_generator(i)
        result = result + prod.scale(c)
    return result


@lru_cache(maxsize=None)
def bar_standard(w: Permutation) -> HeckeElt:
    """``bar(H_w)``, the product of ``H_s + (v - v^-1) H_e`` along a reduced word."""
    if w.length == 0:
        return HeckeElt.standard(w)
    i = w.reduced_word[-1]
    prev = bar_standard(w.right_multiply(i))
    return prev.right_mult_generator(i) + prev.scale(BAR_SHIFT)


def bar_involution(a: HeckeElt) -> HeckeElt:
    result = HeckeElt(a.n)
    for w, c in a.terms.items():
        result = result + bar_standard(w).scale(c.bar())
    return result


def trace_tau(a: HeckeElt) -> LaurentPoly:
    """Coefficient of ``H_e``."""
    return a.coeff(Permutation.identity(a.n))


def ev(a: HeckeElt) -> Dict[Permutation, int]:
    """Specialize ``v = 1``: ``H_w`` goes to ``w`` in the integral group ring."""
    out = {}
    for w, c in a.terms.items():
        x = c.eval_at_one()
        if x:
            out[w] = x
    return out


def standard_basis_product(x: Permutation, y: Permutation) -> HeckeElt:
    if x.n != y.n:
        raise InvalidInput(f"H_{x} and H_{y} live in different Hecke algebras")
    return mult_standard(HeckeElt.standard(x), HeckeElt.standard(y))
