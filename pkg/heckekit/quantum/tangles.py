"""
Tangle diagrams as words of elementary diagrams, read bottom to top.

A word is evaluated on tensor powers of the two-dimensional module with
basis ``0, 1``: the basis of the k-fold power is the set of 0-1 strings of
length k, strand 1 being the leftmost symbol, and a string is stored at
index ``int(string, 2)``. Closed words evaluate to a scalar, which
normalizes to the Jones polynomial. The Kauffman bracket gives a second,
independent route through crossingless resolutions.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache, reduce
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from ..errors import InvalidDiagram, InvalidInput, SizeMismatch
from ..laurent import ONE, V, V_INV, LaurentPoly, exact_div
from ..matrix import LaurentMatrix
from .temperley_lieb import PlanarMatching, compose_all

logger = logging.getLogger(__name__)

Signs = Dict[int, int]


class DiagramKind(Enum):
    CUP = "Cup"
    CAP = "Cap"
    POS_CROSS = "PosCross"
    NEG_CROSS = "NegCross"


_DELTA = {DiagramKind.CUP: 2, DiagramKind.CAP: -2, DiagramKind.POS_CROSS: 0, DiagramKind.NEG_CROSS: 0}

# images of the pair of symbols at the crossing
_CROSSINGS = {
    DiagramKind.POS_CROSS: {
        "00": {"00": -V},
        "11": {"11": -V},
        "01": {"01": V_INV - V, "10": ONE},
        "10": {"01": ONE},
    },
    DiagramKind.NEG_CROSS: {
        "00": {"00": -V_INV},
        "11": {"11": -V_INV},
        "01": {"10": ONE},
        "10": {"01": ONE, "10": V - V_INV},
    },
}
_CUP = {"01": ONE, "10": V}
_CAP = {"01": V_INV, "10": ONE}

_STEP_RE = re.compile(r"\s*(Cup|Cap|PosCross|NegCross)\s*\(\s*(\d+)\s*\)\s*,?")


@dataclass(frozen=True)
class ElementaryDiagram:
    kind: DiagramKind
    position: int

    @property
    def delta(self) -> int:
        """Change in the number of strands."""
        return _DELTA[self.kind]

    @property
    def is_crossing(self) -> bool:
        return self.kind in (DiagramKind.POS_CROSS, DiagramKind.NEG_CROSS)

    def flipped(self) -> ElementaryDiagram:
        if not self.is_crossing:
            raise InvalidDiagram(f"{self} is not a crossing")
        other = DiagramKind.NEG_CROSS if self.kind is DiagramKind.POS_CROSS else DiagramKind.POS_CROSS
        return ElementaryDiagram(other, self.position)

    def check(self, arity: int):
        i = self.position
        top = arity + 1 if self.kind is DiagramKind.CUP else arity - 1
        if not 1 <= i <= top:
            raise InvalidDiagram(f"{self} does not fit on {arity} strands")

    def __str__(self) -> str:
        return f"{self.kind.value}({self.position})"

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "position": self.position}

    @classmethod
    def from_json(cls, data: dict) -> ElementaryDiagram:
        try:
            return cls(DiagramKind(data["kind"]), int(data["position"]))
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidDiagram(f"bad elementary diagram {data!r}") from e


def Cup(i: int) -> ElementaryDiagram:
    return ElementaryDiagram(DiagramKind.CUP, i)


def Cap(i: int) -> ElementaryDiagram:
    return ElementaryDiagram(DiagramKind.CAP, i)


def PosCross(i: int) -> ElementaryDiagram:
    return ElementaryDiagram(DiagramKind.POS_CROSS, i)


def NegCross(i: int) -> ElementaryDiagram:
    return ElementaryDiagram(DiagramKind.NEG_CROSS, i)


@dataclass(frozen=True)
class TangleWord:
    steps: Tuple[ElementaryDiagram, ...] = ()
    source_arity: int = 0
    _arities: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        if self.source_arity < 0:
            raise InvalidDiagram(f"source arity must be non-negative, got {self.source_arity}")
        arities = [self.source_arity]
        for t, step in enumerate(self.steps):
            try:
                step.check(arities[-1])
            except InvalidDiagram as e:
                raise InvalidDiagram(f"step {t}: {e}") from e
            arities.append(arities[-1] + step.delta)
        object.__setattr__(self, "_arities", tuple(arities))

    def arities(self) -> Tuple[int, ...]:
        """Number of strands below each step, then at the top."""
        return self._arities

    @property
    def target_arity(self) -> int:
        return self._arities[-1]

    @property
    def is_closed(self) -> bool:
        return self.source_arity == 0 and self.target_arity == 0

    def crossings(self) -> List[int]:
        return [t for t, s in enumerate(self.steps) if s.is_crossing]

    def replace(self, index: int, new_steps: Sequence[ElementaryDiagram]) -> TangleWord:
        steps = self.steps[:index] + tuple(new_steps) + self.steps[index + 1:]
        return TangleWord(steps, self.source_arity)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[ElementaryDiagram]:
        return iter(self.steps)

    def __str__(self) -> str:
        return " ".join(str(s) for s in self.steps)

    @classmethod
    def parse(cls, text: str, source_arity: int = 0) -> TangleWord:
        """Read ``"Cup(1) Cup(3) PosCross(2) ..."``; commas between steps are allowed."""
        steps = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _STEP_RE.match(text, pos)
            if not m:
                raise InvalidDiagram(f"cannot parse tangle word {text!r} at offset {pos}")
            steps.append(ElementaryDiagram(DiagramKind(m.group(1)), int(m.group(2))))
            pos = m.end()
        return cls(tuple(steps), source_arity)

    def to_json(self) -> dict:
        return {"source_arity": self.source_arity, "steps": [s.to_json() for s in self.steps]}

    @classmethod
    def from_json(cls, data: Union[dict, list]) -> TangleWord:
        """Accepts ``{"source_arity", "steps"}`` or a bare list of steps."""
        if isinstance(data, list):
            data = {"steps": data}
        steps = tuple(ElementaryDiagram.from_json(s) for s in data.get("steps", []))
        return cls(steps, int(data.get("source_arity", 0)))


def bits_of(index: int, length: int) -> str:
    return format(index, f"0{length}b") if length else ""


def index_of(bits: str) -> int:
    return int(bits, 2) if bits else 0


@dataclass(frozen=True)
class Morphism:
    """A map between tensor powers, as a ``2^target x 2^source`` matrix."""
    source: int
    target: int
    matrix: LaurentMatrix

    def __post_init__(self):
        if self.matrix.shape != (2 ** self.target, 2 ** self.source):
            raise SizeMismatch(f"a matrix of shape {self.matrix.shape} cannot map "
                               f"{self.source} strands to {self.target}")

    @classmethod
    def identity(cls, arity: int) -> Morphism:
        return cls(arity, arity, LaurentMatrix.identity(2 ** arity))

    def then(self, other: Morphism) -> Morphism:
        """``other`` applied after ``self``."""
        if other.source != self.target:
            raise SizeMismatch(f"cannot follow a map to {self.target} strands by one from {other.source}")
        return Morphism(self.source, other.target, other.matrix @ self.matrix)

    def scalar(self) -> LaurentPoly:
        if self.source or self.target:
            raise InvalidInput(f"a map from {self.source} to {self.target} strands is not a scalar")
        return self.matrix[0, 0]

    def entry(self, row: str, col: str) -> LaurentPoly:
        return self.matrix[index_of(row), index_of(col)]

    def apply(self, vector: Dict[str, LaurentPoly]) -> Dict[str, LaurentPoly]:
        for bits in vector:
            if len(bits) != self.source:
                raise SizeMismatch(f"{bits!r} is not a basis vector on {self.source} strands")
        image = self.matrix.apply({index_of(b): c for b, c in vector.items()})
        return {bits_of(i, self.target): c for i, c in sorted(image.items())}

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "target": self.target,
            "entries": [{"row": bits_of(i, self.target), "col": bits_of(j, self.source), "value": c.fmt()}
                        for i, j, c in self.matrix.items()],
        }


@lru_cache(maxsize=None)
def eval_elementary(d: ElementaryDiagram, arity: int) -> Morphism:
    d.check(arity)
    i = d.position
    target = arity + d.delta
    columns = []
    for s in range(2 ** arity):
        bits = bits_of(s, arity)
        head, tail = bits[:i - 1], bits[i - 1:]
        if d.kind is DiagramKind.CUP:
            image = {index_of(head + pair + tail): c for pair, c in _CUP.items()}
        elif d.kind is DiagramKind.CAP:
            c = _CAP.get(tail[:2])
            image = {index_of(head + tail[2:]): c} if c else {}
        else:
            image = {index_of(head + pair + tail[2:]): c for pair, c in _CROSSINGS[d.kind][tail[:2]].items()}
        columns.append(image)
    return Morphism(arity, target, LaurentMatrix.from_columns(2 ** target, columns))


def eval_word(w: TangleWord) -> Morphism:
    arities = w.arities()
    return reduce(lambda acc, t: acc.then(eval_elementary(w.steps[t], arities[t])),
                  range(len(w)), Morphism.identity(w.source_arity))


def _closed_scalar(w: TangleWord) -> LaurentPoly:
    # one vector through the word instead of full matrix products
    vector = {0: ONE}
    for step, a in zip(w.steps, w.arities()):
        vector = eval_elementary(step, a).matrix.apply(vector)
    return vector.get(0, LaurentPoly())


def parse_braid(text: str) -> List[int]:
    """``"1 1 -2"`` is sigma_1 sigma_1 sigma_2^-1."""
    try:
        letters = [int(tok) for tok in text.split()]
    except ValueError as e:
        raise InvalidInput(f"braid words are whitespace-separated signed integers, got {text!r}") from e
    if 0 in letters:
        raise InvalidInput("braid letters are nonzero")
    return letters


def braid_closure(braid: Sequence[int], strands: int) -> TangleWord:
    """
    Trace closure with nested cups on the left half and the braid acting on
    strands ``k+1 .. 2k``. ``+i`` becomes ``NegCross(k+i)``, which is the
    positive crossing for the upward orientation the closure gives the braid
    strands; ``-i`` becomes ``PosCross(k+i)``.
    """
    k = strands
    if k < 1:
        raise InvalidDiagram(f"a braid needs at least one strand, got {k}")
    for b in braid:
        if not 1 <= abs(b) < k:
            raise InvalidDiagram(f"letter {b} is not a generator of the braid group on {k} strands")
    steps = [Cup(j) for j in range(1, k + 1)]
    steps += [NegCross(k + b) if b > 0 else PosCross(k - b) for b in braid]
    steps += [Cap(j) for j in range(k, 0, -1)]
    return TangleWord(tuple(steps))


def markov_stabilize(braid: Sequence[int], strands: int, sign: int = 1) -> Tuple[List[int], int]:
    """Append ``sigma_k^(+-1)`` on a new strand; the closure is the same link."""
    if sign not in (1, -1):
        raise InvalidInput(f"sign must be +1 or -1, got {sign}")
    return list(braid) + [sign * strands], strands + 1


def conjugate(braid: Sequence[int], gamma: Sequence[int]) -> List[int]:
    """``gamma braid gamma^-1``."""
    return list(gamma) + list(braid) + [-g for g in reversed(gamma)]


def mirror(w: TangleWord) -> TangleWord:
    return TangleWord(tuple(s.flipped() if s.is_crossing else s for s in w.steps), w.source_arity)


def _links(w: TangleWord) -> Dict[Tuple[int, int, str], Tuple[int, int, str]]:
    # ports (level, position, side): "u" leaves a point upward through the step above it
    links = {}

    def join(a, b):
        links[a] = b
        links[b] = a

    for t, (step, a) in enumerate(zip(w.steps, w.arities())):
        i = step.position
        if step.kind is DiagramKind.CUP:
            for q in range(1, a + 1):
                join((t, q, "u"), (t + 1, q if q < i else q + 2, "d"))
            join((t + 1, i, "d"), (t + 1, i + 1, "d"))
        elif step.kind is DiagramKind.CAP:
            for q in range(1, a + 1):
                if q not in (i, i + 1):
                    join((t, q, "u"), (t + 1, q if q < i else q - 2, "d"))
            join((t, i, "u"), (t, i + 1, "u"))
        else:
            for q in range(1, a + 1):
                join((t, q, "u"), (t + 1, i + 1 if q == i else i if q == i + 1 else q, "d"))
    return links


def orient(w: TangleWord) -> Dict[int, Tuple[int, int]]:
    """
    Direct every component of a closed word, starting at the right foot of its
    lowest cup and moving up. Returns, for each crossing step, the directions
    ``(dA, dB)`` of its two strands, +1 for upward: strand A runs from bottom
    position ``i`` to top position ``i+1`` and strand B the other way.
    """
    if not w.is_closed:
        raise InvalidDiagram("only closed words can be oriented")
    links = _links(w)
    directions: Dict[int, Dict[str, int]] = {t: {} for t in w.crossings()}
    seen = set()
    for t, step in enumerate(w.steps):
        if step.kind is not DiagramKind.CUP or (t + 1, step.position + 1) in seen:
            continue
        start = port = (t + 1, step.position + 1, "u")
        while True:
            level, pos, side = port
            seen.add((level, pos))
            nlevel, npos, nside = links[port]
            if nlevel != level:
                s, bottom, d = (level, pos, 1) if side == "u" else (nlevel, npos, -1)
                # strands beside the crossing pass its level without touching it
                i = w.steps[s].position if s in directions else None
                if i is not None and bottom in (i, i + 1):
                    directions[s]["A" if bottom == i else "B"] = d
            port = (nlevel, npos, "u" if nside == "d" else "d")
            if port == start:
                break
    return {t: (d["A"], d["B"]) for t, d in directions.items()}


def _sign(kind: DiagramKind, dA: int, dB: int) -> int:
    return dA * dB if kind is DiagramKind.NEG_CROSS else -dA * dB


def crossing_signs(w: TangleWord) -> Signs:
    """Step index -> +1 or -1 for every crossing of a closed word."""
    return {t: _sign(w.steps[t].kind, dA, dB) for t, (dA, dB) in orient(w).items()}


def writhe(w: TangleWord) -> int:
    return sum(crossing_signs(w).values())


def _counts(signs: Signs) -> Tuple[int, int]:
    n_plus = sum(1 for s in signs.values() if s > 0)
    return n_plus, len(signs) - n_plus


def _normalize(w: TangleWord, signs: Optional[Signs]) -> Signs:
    if not w.is_closed:
        raise InvalidDiagram(f"expected a closed word, got {w.source_arity} -> {w.target_arity} strands")
    if signs is None:
        return crossing_signs(w)
    if set(signs) != set(w.crossings()):
        raise InvalidInput(f"signs given for steps {sorted(signs)}, crossings are at {w.crossings()}")
    return signs


def _framing(signs: Signs) -> LaurentPoly:
    n_plus, n_minus = _counts(signs)
    return LaurentPoly.monomial((-1) ** n_minus, n_plus - 2 * n_minus)


class RTInvariant(NamedTuple):
    phi: LaurentPoly
    j_hat: LaurentPoly
    j: LaurentPoly


class KauffmanJones(NamedTuple):
    bracket: LaurentPoly
    j_hat: LaurentPoly
    j: LaurentPoly


def rt_invariant(w: TangleWord, signs: Optional[Signs] = None) -> RTInvariant:
    """
    ``phi`` is the scalar the closed word evaluates to. Each ``NegCross``
    contributes a factor ``-v`` on top of the writhe normalization, as its
    matrix is ``-v^-1`` times the bracket's resolution of the same crossing.
    """
    if not w.steps:
        raise InvalidDiagram("the empty word is not a link")
    signs = _normalize(w, signs)
    phi = _closed_scalar(w)
    negs = sum(1 for s in w.steps if s.kind is DiagramKind.NEG_CROSS)
    j_hat = _framing(signs) * LaurentPoly.monomial((-1) ** negs, negs) * phi
    return RTInvariant(phi, j_hat, exact_div(j_hat, V + V_INV))


def _resolution(step: ElementaryDiagram, arity: int, smooth: bool) -> List[PlanarMatching]:
    i = step.position
    if step.kind is DiagramKind.CUP:
        return [PlanarMatching.cup(arity, i)]
    if step.kind is DiagramKind.CAP:
        return [PlanarMatching.cap(arity, i)]
    if smooth:
        return [PlanarMatching.cap(arity, i), PlanarMatching.cup(arity - 2, i)]
    return []


def kauffman_bracket(w: TangleWord) -> LaurentPoly:
    """
    State sum over all resolutions. A positive-kind crossing resolves first
    to the cap-cup picture and second to the identity; a negative-kind one the
    other way round. Second resolutions weigh ``-v``, loops ``v + v^-1``.
    """
    if not w.is_closed:
        raise InvalidDiagram("the bracket is defined on closed words")
    crossings = w.crossings()
    arities = w.arities()
    loop = V + V_INV
    total = LaurentPoly()
    for mask in range(1 << len(crossings)):
        second = {t: bool(mask >> k & 1) for k, t in enumerate(crossings)}
        pieces: List[PlanarMatching] = []
        for t, step in enumerate(w.steps):
            smooth = step.is_crossing and ((step.kind is DiagramKind.POS_CROSS) != second[t])
            pieces.extend(_resolution(step, arities[t], smooth))
        m = compose_all(pieces, w.source_arity).loops
        s = bin(mask).count("1")
        total = total + LaurentPoly.monomial((-1) ** s, s) * loop ** m
    logger.debug("bracket of a %d-step word summed over %d states", len(w), 1 << len(crossings))
    return total


def kauffman_jones(w: TangleWord, signs: Optional[Signs] = None) -> KauffmanJones:
    signs = _normalize(w, signs)
    bracket = kauffman_bracket(w)
    j_hat = _framing(signs) * bracket
    return KauffmanJones(bracket, j_hat, exact_div(j_hat, V + V_INV))


def _shift(signs: Signs, index: int, by: int) -> Signs:
    return {(t + by if t > index else t): s for t, s in signs.items() if t != index}


def skein_check(w: TangleWord, index: int) -> bool:
    """
    ``v^2 J(L-) - v^-2 J(L+) = (v - v^-1) J(L0)`` at the crossing ``w.steps[index]``.

    ``L+`` and ``L-`` are the word and its copy with that crossing switched,
    assigned by the crossing's sign; ``L0`` is the oriented smoothing. All
    three keep the orientation of the original word.
    """
    if not 0 <= index < len(w) or not w.steps[index].is_crossing:
        raise InvalidDiagram(f"step {index} of {w} is not a crossing")
    step = w.steps[index]
    directions = orient(w)
    signs = {t: _sign(w.steps[t].kind, dA, dB) for t, (dA, dB) in directions.items()}
    switched = (w.replace(index, [step.flipped()]), {**signs, index: -signs[index]})
    original = (w, signs)
    plus, minus = (original, switched) if signs[index] > 0 else (switched, original)

    dA, dB = directions[index]
    if dA * dB > 0:
        smoothed = (w.replace(index, []), _shift(signs, index, -1))
    else:
        i = step.position
        smoothed = (w.replace(index, [Cap(i), Cup(i)]), _shift(signs, index, 1))

    def jones(pair) -> LaurentPoly:
        word, s = pair
        return rt_invariant(word, s).j

    lhs = V * V * jones(minus) - V_INV * V_INV * jones(plus)
    rhs = (V - V_INV) * jones(smoothed)
    if lhs != rhs:
        logger.warning("skein relation fails at step %d of %s: %s != %s", index, w, lhs.fmt(), rhs.fmt())
    return lhs == rhs
