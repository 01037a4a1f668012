"""
Integer Laurent polynomials in one variable ``v``.

Every other module takes its coefficients from here: Hecke algebra
structure constants, quantum integers, tangle matrices and link invariants.
"""

from __future__ import annotations

import dataclasses
import re
from typing import Dict, Iterator, List, Sequence, Tuple, Union

from .errors import InvalidInput, NonDivisible

Scalar = Union[int, "LaurentPoly"]


@dataclasses.dataclass(init=False, eq=False, repr=False)
class LaurentPoly:
    """
    A Laurent polynomial over the integers, stored as a valuation and a dense
    tuple of coefficients starting at that power. The zero polynomial has
    valuation 0 and no coefficients; leading and trailing zeros are trimmed
    on construction, so two equal polynomials always have equal fields.

    >>> LaurentPoly(-1, (1, 0, 1))
    LaurentPoly('v^-1 + v')
    >>> LaurentPoly(-1, (1, 0, 1)) ** 2
    LaurentPoly('v^-2 + 2 + v^2')
    >>> LaurentPoly(0, (0, 0))
    LaurentPoly('0')
    """
    val: int
    coeffs: Tuple[int, ...]

    def __init__(self, val: int = 0, coeffs: Sequence[int] = ()):
        l, r = 0, len(coeffs)
        while l < r and coeffs[l] == 0:
            l += 1
            val += 1
        while l < r and coeffs[r - 1] == 0:
            r -= 1

        if l == r:
            self.val = 0
            self.coeffs = ()
        else:
            self.val = val
            self.coeffs = tuple(int(c) for c in coeffs[l:r])

    @classmethod
    def from_dict(cls, terms: Dict[int, int]) -> LaurentPoly:
        """Build from an ``{exponent: coefficient}`` mapping."""
        terms = {int(e): int(c) for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        coeffs = [0] * (hi - lo + 1)
        for e, c in terms.items():
            coeffs[e - lo] += c
        return cls(lo, coeffs)

    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 0) -> LaurentPoly:
        return cls(exp, (coeff,))

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls(0, (c,))

    @property
    def coefficients(self) -> Dict[int, int]:
        return {e: c for e, c in self.terms()}

    def terms(self) -> Iterator[Tuple[int, int]]:
        """Nonzero ``(exponent, coefficient)`` pairs, exponents ascending."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.val + i, c

    def coeff(self, exp: int) -> int:
        i = exp - self.val
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def is_unit(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] in (1, -1)

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def valuation(self) -> int:
        """Lowest exponent, or 0 for the zero polynomial."""
        return self.val

    def degree(self) -> int:
        """Highest exponent, or -1 for the zero polynomial."""
        return self.val + len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        other = as_laurent(other)
        if other is None:
            return NotImplemented
        return self.val == other.val and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.val, self.coeffs))

    def __add__(self, other: Scalar) -> LaurentPoly:
        other = as_laurent(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        # Minval is the smallest valuation in the result.
        # Maxpow is one more than the largest power which occurs.
        minval = min(self.val, other.val)
        maxpow = max(self.val + len(self.coeffs), other.val + len(other.coeffs))

        coeffs = [0] * (maxpow - minval)
        for i, c in enumerate(self.coeffs):
            coeffs[self.val + i - minval] += c
        for i, c in enumerate(other.coeffs):
            coeffs[other.val + i - minval] += c
        return LaurentPoly(minval, coeffs)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.val, [-c for c in self.coeffs])

    def __sub__(self, other: Scalar) -> LaurentPoly:
        other = as_laurent(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        other = as_laurent(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LaurentPoly(self.val, [other * c for c in self.coeffs])
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        coeffs = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(other.coeffs):
                coeffs[i + j] += x * y
        return LaurentPoly(self.val + other.val, coeffs)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        """
        Integer powers; negative powers exist only for units ``±v^k``.

        >>> V ** -2
        LaurentPoly('v^-2')
        """
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            if not self.is_unit():
                raise NonDivisible(f"{self.fmt()} is not a unit, cannot raise to {n}")
            base = LaurentPoly(-self.val, self.coeffs)
            n = -n
        result = ONE
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``v^k``."""
        return LaurentPoly(self.val + k, self.coeffs)

    def bar(self) -> LaurentPoly:
        if self.is_zero():
            return self
        return LaurentPoly(-self.degree(), self.coeffs[::-1])

    def psi(self) -> LaurentPoly:
        return LaurentPoly.from_dict({-e: c if e % 2 == 0 else -c for e, c in self.terms()})

    def eval_at_one(self) -> int:
        return sum(self.coeffs)

    def exact_div(self, other: Scalar) -> LaurentPoly:
        return exact_div(self, other)

    def fmt(self) -> str:
        """
        Signed monomial list with ascending exponents.

        >>> LaurentPoly(-2, (1, 0, 1, 0, 1, 0, 1)).fmt()
        'v^-2 + 1 + v^2 + v^4'
        >>> (-V + 3).fmt()
        '3 - v'
        """
        if self.is_zero():
            return "0"
        parts: List[str] = []
        for e, c in self.terms():
            sign = " + " if (c > 0 and parts) else " - " if (c < 0 and parts) else "" if c > 0 else "-"
            term = "" if e == 0 else "v" if e == 1 else f"v^{e}"
            coeff = f"{abs(c)}" if (term == "" or abs(c) != 1) else ""
            parts.append(sign + coeff + term)
        return "".join(parts)

    def __str__(self) -> str:
        return self.fmt()

    def __repr__(self) -> str:
        return f"LaurentPoly('{self.fmt()}')"

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """
        Inverse of :meth:`fmt`; also accepts ``v^1`` and unordered terms.

        >>> LaurentPoly.parse("v^-2 + 1 + v^2 + v^4") == LaurentPoly(-2, (1, 0, 1, 0, 1, 0, 1))
        True
        """
        s = text.strip()
        if not s:
            raise InvalidInput("cannot parse an empty Laurent polynomial")
        terms: Dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = _TERM_RE.match(s, pos)
            sign, digits, var, exp = m.groups()
            if (digits is None and var is None) or (sign is None and pos > 0):
                raise InvalidInput(f"cannot parse Laurent polynomial {text!r} at offset {pos}")
            c = int(digits) if digits else 1
            if sign == "-":
                c = -c
            e = (int(exp) if exp is not None else 1) if var else 0
            terms[e] = terms.get(e, 0) + c
            pos = m.end()
        return cls.from_dict(terms)

    def to_json(self) -> List[List[int]]:
        return [[e, c] for e, c in self.terms()]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> LaurentPoly:
        terms: Dict[int, int] = {}
        for pair in data:
            if len(pair) != 2:
                raise InvalidInput(f"expected [exponent, coefficient] pairs, got {pair!r}")
            e, c = pair
            terms[int(e)] = terms.get(int(e), 0) + int(c)
        return cls.from_dict(terms)


_TERM_RE = re.compile(r"\s*([+-])?\s*(\d+)?(v(?:\^(-?\d+))?)?\s*")


def as_laurent(x) -> "LaurentPoly | None":
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return None


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
V = LaurentPoly.monomial(1, 1)
V_INV = LaurentPoly.monomial(1, -1)


def bar(p: LaurentPoly) -> LaurentPoly:
    """Substitute ``v -> v^-1``."""
    return p.bar()


def psi(p: LaurentPoly) -> LaurentPoly:
    """Substitute ``v -> -v^-1``."""
    return p.psi()


def eval_at_one(p: LaurentPoly) -> int:
    return p.eval_at_one()


def exact_div(p: Scalar, q: Scalar) -> LaurentPoly:
    """
    Return ``r`` with ``q * r == p``.

    Both operands are shifted to ordinary polynomials with nonzero constant
    term; ``p = q * r`` then forces the quotient to be an ordinary polynomial
    as well, so plain long division from the top degree decides it.

    >>> exact_div(LaurentPoly(0, (1, 0, 1, 0, 1, 0, 1)), V + V_INV)
    LaurentPoly('v + v^5')
    """
    p, q = as_laurent(p), as_laurent(q)
    if p is None or q is None:
        raise InvalidInput("exact_div expects integers or Laurent polynomials")
    if q.is_zero():
        raise InvalidInput("division by the zero polynomial")
    if p.is_zero():
        return ZERO

    rem = list(p.coeffs)
    dq = len(q.coeffs) - 1
    lead = q.coeffs[-1]
    if len(rem) <= dq:
        raise NonDivisible(f"{p.fmt()} is not divisible by {q.fmt()}")
    quot = [0] * (len(rem) - dq)
    for k in range(len(quot) - 1, -1, -1):
        c = rem[k + dq]
        if c == 0:
            continue
        if c % lead:
            raise NonDivisible(f"{p.fmt()} is not divisible by {q.fmt()}")
        m = c // lead
        quot[k] = m
        for j, qc in enumerate(q.coeffs):
            rem[k + j] -= m * qc
    if any(rem):
        raise NonDivisible(f"{p.fmt()} is not divisible by {q.fmt()}")
    return LaurentPoly(p.val - q.val, quot)


def quantum_integer(a: int) -> LaurentPoly:
    """
    ``[a] = v^(a-1) + v^(a-3) + ... + v^(1-a)`` with ``[0] = 0`` and ``[-a] = -[a]``.

    >>> quantum_integer(2)
    LaurentPoly('v^-1 + v')
    """
    if a == 0:
        return ZERO
    if a < 0:
        return -quantum_integer(-a)
    return LaurentPoly(1 - a, [1, 0] * (a - 1) + [1])


def quantum_binomial(a: int, n: int) -> LaurentPoly:
    """
    Gaussian binomial ``[a; n]``, built by sequential exact division so every
    intermediate value stays a Laurent polynomial.

    >>> quantum_binomial(4, 2)
    LaurentPoly('v^-4 + v^-2 + 2 + v^2 + v^4')
    """
    if n < 0:
        raise InvalidInput(f"quantum_binomial needs n >= 0, got {n}")
    result = ONE
    for k in range(1, n + 1):
        result = exact_div(result * quantum_integer(a - k + 1), quantum_integer(k))
    return result


def quantum_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise InvalidInput(f"quantum_factorial needs n >= 0, got {n}")
    result = ONE
    for k in range(2, n + 1):
        result = result * quantum_integer(k)
    return result
