"""
The symmetric group S_n in one-line notation.

Conventions used throughout heckekit:

* ``compose(a, b)(i) = a(b(i))``; a word ``[i1, ..., ik]`` stands for the
  product ``s_i1 * ... * s_ik``.
* Right multiplication by ``s_i`` swaps the entries in positions ``i, i+1``;
  left multiplication swaps the values ``i, i+1``.
* ``i`` is a right descent of ``w`` iff ``w(i) > w(i+1)`` and a left descent
  iff the value ``i+1`` appears before the value ``i``.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Sequence, Set, Tuple

from ..errors import InvalidInput, SizeMismatch


@dataclass(frozen=True)
class Permutation:
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidInput(f"{list(images)} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple_reflection(cls, n: int, i: int) -> Permutation:
        if not 1 <= i < n:
            raise InvalidInput(f"s{i} is not a simple reflection of S{n}")
        return cls.identity(n).right_multiply(i)

    @classmethod
    def longest(cls, n: int) -> Permutation:
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def from_word(cls, n: int, word: Iterable[int]) -> Permutation:
        w = cls.identity(n)
        for i in word:
            if not 1 <= i < n:
                raise InvalidInput(f"s{i} is not a simple reflection of S{n}")
            w = w.right_multiply(i)
        return w

    @classmethod
    def all(cls, n: int) -> List[Permutation]:
        """Every element of S_n, sorted by length then one-line notation."""
        return sorted((cls(p) for p in itertools.permutations(range(1, n + 1))), key=Permutation.sort_key)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Read ``"[2,1,3]"`` (or a JSON array)."""
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"cannot parse permutation {text!r}: {exc}") from exc
        if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
            raise InvalidInput(f"permutation must be a list of integers, got {text!r}")
        return cls(tuple(data))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return self.length, self.images

    @cached_property
    def length(self) -> int:
        """Number of inversions."""
        a = self.images
        return sum(1 for i in range(len(a)) for j in range(i + 1, len(a)) if a[i] > a[j])

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, x in enumerate(self.images, 1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def right_multiply(self, i: int) -> Permutation:
        """``self * s_i``."""
        a = list(self.images)
        a[i - 1], a[i] = a[i], a[i - 1]
        return Permutation(tuple(a))

    def left_multiply(self, i: int) -> Permutation:
        """``s_i * self``."""
        swap = {i: i + 1, i + 1: i}
        return Permutation(tuple(swap.get(x, x) for x in self.images))

    @cached_property
    def descents_right(self) -> FrozenSet[int]:
        a = self.images
        return frozenset(i for i in range(1, self.n) if a[i - 1] > a[i])

    @cached_property
    def descents_left(self) -> FrozenSet[int]:
        pos = self.inverse().images
        return frozenset(i for i in range(1, self.n) if pos[i - 1] > pos[i])

    @cached_property
    def reduced_word(self) -> Tuple[int, ...]:
        """Lexicographically smallest reduced word: peel off the smallest left descent."""
        word = []
        w = self
        while w.descents_left:
            i = min(w.descents_left)
            word.append(i)
            w = w.left_multiply(i)
        return tuple(word)

    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def cycle_type(self) -> Tuple[int, ...]:
        """Cycle lengths as a partition (weakly decreasing)."""
        seen: Set[int] = set()
        lengths = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            k, i = 0, start
            while i not in seen:
                seen.add(i)
                i = self(i)
                k += 1
            lengths.append(k)
        return tuple(sorted(lengths, reverse=True))

    def is_involution(self) -> bool:
        return all(self(self(i)) == i for i in range(1, self.n + 1))

    def fmt(self) -> str:
        return "[" + ",".join(str(x) for x in self.images) + "]"

    def fmt_word(self) -> str:
        """``"s1 s2 s1"``; the identity prints as ``"e"``."""
        return " ".join(f"s{i}" for i in self.reduced_word) or "e"

    def __str__(self) -> str:
        return self.fmt()

    def to_json(self) -> List[int]:
        return list(self.images)


def _same_n(a: Permutation, b: Permutation):
    if a.n != b.n:
        raise SizeMismatch(f"permutations of different sizes: S{a.n} and S{b.n}")


def compose(a: Permutation, b: Permutation) -> Permutation:
    _same_n(a, b)
    return Permutation(tuple(a(b(i)) for i in range(1, a.n + 1)))


def inverse(a: Permutation) -> Permutation:
    return a.inverse()


def length(a: Permutation) -> int:
    return a.length


def descents_right(a: Permutation) -> FrozenSet[int]:
    return a.descents_right


def reduced_word(a: Permutation) -> Tuple[int, ...]:
    return a.reduced_word


_WORD_RE = re.compile(r"^s?(\d+)$")


def parse_word(text: str) -> Tuple[int, ...]:
    """Read ``"s1 s2 s1"`` (the ``s`` prefixes are optional; ``"e"`` is empty)."""
    word = []
    for token in text.split():
        if token == "e":
            continue
        m = _WORD_RE.match(token)
        if not m:
            raise InvalidInput(f"cannot parse word {text!r}: bad letter {token!r}")
        word.append(int(m.group(1)))
    return tuple(word)


def bruhat_leq(x: Permutation, y: Permutation) -> bool:
    """
    Bruhat order via the dot criterion: ``x <= y`` iff for every prefix
    length ``k`` the sorted first ``k`` entries of ``x`` are entrywise at
    most those of ``y``.
    """
    _same_n(x, y)
    for k in range(1, x.n):
        xs = sorted(x.images[:k])
        ys = sorted(y.images[:k])
        if any(a > b for a, b in zip(xs, ys)):
            return False
    return True


def coset_representative(w: Permutation, parabolic: Iterable[int]) -> Permutation:
    """Shortest element of the right coset ``W_J w``."""
    parabolic = set(parabolic)
    while True:
        inside = w.descents_left & parabolic
        if not inside:
            return w
        w = w.left_multiply(min(inside))


def _check_parabolic(n: int, parabolic: Iterable[int]) -> FrozenSet[int]:
    parabolic = frozenset(parabolic)
    bad = [i for i in parabolic if not 1 <= i < n]
    if bad:
        raise InvalidInput(f"parabolic generators {sorted(bad)} are not simple reflections of S{n}")
    return parabolic


def coset_reps(n: int, parabolic: Iterable[int], kind: str = "shortest") -> List[Permutation]:
    """
    Distinguished representatives of the right cosets ``W_J \\ S_n``.

    Shortest representatives have no left descent in ``J``; longest ones have
    every generator of ``J`` as a left descent.
    """
    parabolic = _check_parabolic(n, parabolic)
    if kind == "shortest":
        return [w for w in Permutation.all(n) if not (w.descents_left & parabolic)]
    if kind == "longest":
        return [w for w in Permutation.all(n) if parabolic <= w.descents_left]
    raise InvalidInput(f"kind must be 'shortest' or 'longest', got {kind!r}")


def parabolic_subgroup(n: int, parabolic: Iterable[int]) -> List[Permutation]:
    parabolic = _check_parabolic(n, parabolic)
    return [w for w in Permutation.all(n) if set(w.reduced_word) <= parabolic]


def conjugacy_class_representative(cycle_type: Sequence[int]) -> Permutation:
    """The permutation ``(1 2 .. l1)(l1+1 .. l1+l2)...`` of the given cycle type."""
    images = []
    start = 1
    for k in cycle_type:
        images.extend(range(start + 1, start + k))
        images.append(start)
        start += k
    return Permutation(tuple(images))
