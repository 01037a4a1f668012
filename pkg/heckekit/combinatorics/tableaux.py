"""Partitions, standard Young tableaux and the Robinson–Schensted correspondence."""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from ..errors import InvalidInput
from .permutations import Permutation

Partition = Tuple[int, ...]

# Enumeration is used up to this size, the hook length formula beyond it.
ENUMERATION_LIMIT = 8


@dataclass(frozen=True)
class Tableau:
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows if len(r)))

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def entry_position(self, x: int) -> Tuple[int, int]:
        for r, row in enumerate(self.rows):
            if x in row:
                return r, row.index(x)
        raise InvalidInput(f"{x} does not occur in {self.rows}")

    def is_standard(self) -> bool:
        shape = self.shape
        if any(a < b for a, b in zip(shape, shape[1:])):
            return False
        entries = sorted(x for row in self.rows for x in row)
        if entries != list(range(1, self.size + 1)):
            return False
        for r, row in enumerate(self.rows):
            if any(a >= b for a, b in zip(row, row[1:])):
                return False
            if r and any(self.rows[r - 1][c] >= x for c, x in enumerate(row)):
                return False
        return True

    def content_vector(self) -> Tuple[int, ...]:
        """Contents ``col - row`` of the boxes holding ``1, 2, ..., n``."""
        contents = [0] * self.size
        for r, row in enumerate(self.rows):
            for c, x in enumerate(row):
                contents[x - 1] = c - r
        return tuple(contents)

    def to_json(self) -> List[List[int]]:
        return [list(r) for r in self.rows]

    def fmt(self) -> str:
        return "/".join("".join(str(x) if x < 10 else f"({x})" for x in r) for r in self.rows)

    def __str__(self) -> str:
        return self.fmt()


def check_partition(shape: Sequence[int]) -> Partition:
    shape = tuple(int(x) for x in shape)
    if any(x <= 0 for x in shape) or any(a < b for a, b in zip(shape, shape[1:])):
        raise InvalidInput(f"{list(shape)} is not a partition")
    return shape


def partitions(n: int) -> List[Partition]:
    """Partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if n < 0:
        raise InvalidInput(f"cannot partition {n}")

    def gen(remaining: int, largest: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return list(gen(n, n))


def standard_tableaux(shape: Sequence[int]) -> Iterator[Tableau]:
    """Every standard tableau of the given shape, by placing ``n, n-1, ...`` in corners."""
    shape = check_partition(shape)

    def fill(sh: Partition) -> Iterator[List[List[int]]]:
        n = sum(sh)
        if n == 0:
            yield [[] for _ in shape]
            return
        for r, length in enumerate(sh):
            below = sh[r + 1] if r + 1 < len(sh) else 0
            if length > below:
                smaller = sh[:r] + (length - 1,) + sh[r + 1:]
                for rows in fill(smaller):
                    rows = [list(x) for x in rows]
                    rows[r].append(n)
                    yield rows

    for rows in fill(shape):
        yield Tableau(tuple(tuple(r) for r in rows))


def hook_length_count(shape: Sequence[int]) -> int:
    shape = check_partition(shape)
    n = sum(shape)
    conj = [sum(1 for x in shape if x > c) for c in range(shape[0])] if shape else []
    hooks = 1
    for r, length in enumerate(shape):
        for c in range(length):
            hooks *= (length - c - 1) + (conj[c] - r - 1) + 1
    return math.factorial(n) // hooks


def syt_count(shape: Sequence[int]) -> int:
    """Number of standard Young tableaux of ``shape``."""
    shape = check_partition(shape)
    if sum(shape) <= ENUMERATION_LIMIT:
        return sum(1 for _ in standard_tableaux(shape))
    return hook_length_count(shape)


def rsk(w: Permutation) -> Tuple[Tableau, Tableau]:
    """
    Row insertion of ``w(1), ..., w(n)``; returns ``(p(w), q(w))``, the
    insertion and recording tableaux.
    """
    p_rows: List[List[int]] = []
    q_rows: List[List[int]] = []
    for step, x in enumerate(w.images, 1):
        r = 0
        while True:
            if r == len(p_rows):
                p_rows.append([x])
                q_rows.append([step])
                break
            row = p_rows[r]
            k = bisect.bisect_right(row, x)
            if k == len(row):
                row.append(x)
                q_rows[r].append(step)
                break
            x, row[k] = row[k], x
            r += 1
    return Tableau(tuple(map(tuple, p_rows))), Tableau(tuple(map(tuple, q_rows)))


def inverse_rsk(p: Tableau, q: Tableau) -> Permutation:
    """The permutation with insertion tableau ``p`` and recording tableau ``q``."""
    if p.shape != q.shape or not p.is_standard() or not q.is_standard():
        raise InvalidInput(f"need two standard tableaux of one shape, got {p.rows} and {q.rows}")
    p_rows = [list(r) for r in p.rows]
    q_pos: Dict[int, int] = {x: r for r, row in enumerate(q.rows) for x in row}
    images = [0] * p.size
    for step in range(p.size, 0, -1):
        r = q_pos[step]
        x = p_rows[r].pop()
        for above in range(r - 1, -1, -1):
            row = p_rows[above]
            k = bisect.bisect_left(row, x) - 1
            x, row[k] = row[k], x
        images[step - 1] = x
    return Permutation(tuple(images))
