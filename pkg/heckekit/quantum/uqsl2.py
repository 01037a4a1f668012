"""
Finite-dimensional modules over U_v(sl2) with integral structure constants.

A module is given by the matrices of ``E``, ``F``, ``K`` and ``K^-1`` over
Z[v, v^-1]. The relations

    K E = v^2 E K,   K F = v^-2 F K,   K K^-1 = 1,
    (v - v^-1)(E F - F E) = K - K^-1

are checked exactly, the last one with the denominator cleared.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..errors import InvalidInput, InvariantViolation
from ..laurent import V, V_INV, LaurentPoly, quantum_integer
from ..matrix import LaurentMatrix

logger = logging.getLogger(__name__)

VARIANTS = ("plain", "hat")

# (n, variant)
Summand = Tuple[int, str]


def _join(a: str, b: str) -> str:
    if set(a + b) <= {"0", "1"}:
        return a + b
    return f"{a}|{b}"


@dataclass
class UqModule:
    labels: List[str]
    E: LaurentMatrix = field(repr=False)
    F: LaurentMatrix = field(repr=False)
    K: LaurentMatrix = field(repr=False)
    Kinv: LaurentMatrix = field(repr=False)
    # the simple module this is, when known
    simple: Optional[Summand] = None

    def __post_init__(self):
        d = self.dimension
        for name in ("E", "F", "K", "Kinv"):
            if getattr(self, name).shape != (d, d):
                raise InvalidInput(f"{name} has shape {getattr(self, name).shape}, expected ({d}, {d})")

    @property
    def dimension(self) -> int:
        return len(self.labels)

    def weights(self) -> List[Tuple[int, int]]:
        """``(sign, exponent)`` of the K-eigenvalue of each basis vector."""
        if not self.K.is_diagonal():
            raise InvalidInput("K does not act diagonally on this basis")
        out = []
        for c in self.K.diagonal():
            if not c.is_unit():
                raise InvalidInput(f"K eigenvalue {c} is not of the form +-v^k")
            (exp, coeff), = c.terms()
            out.append((1 if coeff > 0 else -1, exp))
        return out

    def apply(self, op: str, vector: Dict[str, LaurentPoly]) -> Dict[str, LaurentPoly]:
        """Apply ``E``, ``F``, ``K`` or ``Kinv`` to a vector given by labels."""
        index = {label: k for k, label in enumerate(self.labels)}
        image = getattr(self, op).apply({index[label]: c for label, c in vector.items()})
        return {self.labels[k]: c for k, c in sorted(image.items())}

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "labels": self.labels,
            "character": {str(k): m for k, m in sorted(character(self).items())},
        }


def simple_module(n: int, variant: str = "plain") -> UqModule:
    """
    Basis ``w_0 .. w_n`` with ``E w_k = [k+1] w_{k+1}``, ``F w_k = [n-k+1] w_{k-1}``
    and ``K w_k = v^(2k-n) w_k``; the hat variant negates ``F``, ``K`` and ``K^-1``.
    """
    if n < 0:
        raise InvalidInput(f"simple modules are indexed by n >= 0, got {n}")
    if variant not in VARIANTS:
        raise InvalidInput(f"variant must be 'plain' or 'hat', got {variant!r}")
    d = n + 1
    sign = 1 if variant == "plain" else -1
    E = LaurentMatrix(d, d, {k + 1: {k: quantum_integer(k + 1)} for k in range(n)})
    F = LaurentMatrix(d, d, {k - 1: {k: quantum_integer(n - k + 1) * sign} for k in range(1, d)})
    K = LaurentMatrix.diagonal_matrix([LaurentPoly.monomial(sign, 2 * k - n) for k in range(d)])
    Kinv = LaurentMatrix.diagonal_matrix([LaurentPoly.monomial(sign, n - 2 * k) for k in range(d)])
    labels = [str(k) for k in range(d)] if n == 1 else [f"w{k}" for k in range(d)]
    module = UqModule(labels=labels, E=E, F=F, K=K, Kinv=Kinv, simple=(n, variant))
    if not verify_relations(module):
        raise InvariantViolation(f"relations fail on the simple module ({n}, {variant})", witness=(n, variant))
    return module


def verify_relations(m: UqModule) -> bool:
    E, F, K, Kinv = m.E, m.F, m.K, m.Kinv
    one = LaurentMatrix.identity(m.dimension)
    checks = {
        "K Kinv = 1": K @ Kinv == one and Kinv @ K == one,
        "K E = v^2 E K": K @ E == (E @ K).scale(V * V),
        "K F = v^-2 F K": K @ F == (F @ K).scale(V_INV * V_INV),
        "(v - v^-1)(EF - FE) = K - Kinv": (E @ F - F @ E).scale(V - V_INV) == K - Kinv,
    }
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        logger.warning("U_v(sl2) relations failing on a %d-dimensional module: %s", m.dimension, ", ".join(failed))
    return not failed


def tensor(a: UqModule, b: UqModule) -> UqModule:
    """``a (x) b`` through ``E -> 1(x)E + E(x)K``, ``F -> K^-1(x)F + F(x)1``, ``K -> K(x)K``."""
    one_a = LaurentMatrix.identity(a.dimension)
    one_b = LaurentMatrix.identity(b.dimension)
    E = one_a.kron(b.E) + a.E.kron(b.K)
    F = a.Kinv.kron(b.F) + a.F.kron(one_b)
    K = a.K.kron(b.K)
    Kinv = a.Kinv.kron(b.Kinv)
    labels = [_join(x, y) for x in a.labels for y in b.labels]
    module = UqModule(labels=labels, E=E, F=F, K=K, Kinv=Kinv)
    if not verify_relations(module):
        raise InvariantViolation("relations fail on a tensor product", witness=(a.dimension, b.dimension))
    return module


def tensor_power(m: UqModule, k: int) -> UqModule:
    if k < 0:
        raise InvalidInput(f"tensor power must be non-negative, got {k}")
    if k == 0:
        return simple_module(0)
    result = m
    for _ in range(k - 1):
        result = tensor(result, m)
    return result


def signed_character(m: UqModule) -> Dict[Tuple[int, int], int]:
    """``(sign, exponent)`` of each K-eigenvalue ``+-v^k`` -> multiplicity."""
    out: Dict[Tuple[int, int], int] = {}
    for w in m.weights():
        out[w] = out.get(w, 0) + 1
    return out


def character(m: UqModule) -> Dict[int, int]:
    """Exponent ``k`` of each K-eigenvalue ``+-v^k`` -> multiplicity."""
    out: Dict[int, int] = {}
    for _, exp in m.weights():
        out[exp] = out.get(exp, 0) + 1
    return out


def decompose_by_character(m: UqModule) -> List[Summand]:
    """
    Simple summands, by repeatedly removing the weights ``n, n-2, .., -n`` of
    the highest remaining weight. Eigenvalues ``+v^k`` belong to plain
    modules and ``-v^k`` to hat modules.
    """
    remaining = signed_character(m)
    summands: List[Summand] = []
    for sign, variant in ((1, "plain"), (-1, "hat")):
        while True:
            exps = [e for (s, e), mult in remaining.items() if s == sign and mult > 0]
            if not exps:
                break
            top = max(exps)
            if top < 0:
                raise InvariantViolation(f"weights {remaining} are not a character of a module", witness=remaining)
            for e in range(-top, top + 1, 2):
                key = (sign, e)
                if remaining.get(key, 0) <= 0:
                    raise InvariantViolation(f"weights {remaining} are not a character of a module",
                                             witness=remaining)
                remaining[key] -= 1
            summands.append((top, variant))
    summands.sort(key=lambda s: (s[1] != "plain", -s[0]))
    return summands


def verify_casimir_scalar(m: UqModule) -> LaurentPoly:
    """The scalar by which ``(v - v^-1)^2 F E + v K + v^-1 K^-1`` acts."""
    q = V - V_INV
    casimir = (m.F @ m.E).scale(q * q) + m.K.scale(V) + m.Kinv.scale(V_INV)
    scalar = casimir.is_scalar()
    if scalar is None:
        raise InvariantViolation("the Casimir element does not act by a scalar", witness=m.labels)
    return scalar
