"""
Crossingless matchings between ``bottom`` and ``top`` points, composed by
stacking with closed loops counted.

Points are numbered ``0 .. bottom-1`` along the bottom from left to right and
``bottom .. bottom+top-1`` along the top from right to left, so a matching is
crossingless exactly when it reads as a balanced bracket sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..errors import InvalidDiagram, SizeMismatch


def is_crossingless(pairs: Sequence[int]) -> bool:
    n = len(pairs)
    if not all(0 <= pairs[i] < n and pairs[i] != i and pairs[pairs[i]] == i for i in range(n)):
        return False
    stack: List[int] = []
    for i in range(n):
        if i < pairs[i]:
            stack.append(pairs[i])
        elif not stack or stack.pop() != i:
            return False
    return True


@dataclass(frozen=True)
class PlanarMatching:
    bottom: int
    top: int
    pairs: Tuple[int, ...]
    loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(self.pairs))
        if self.bottom < 0 or self.top < 0 or len(self.pairs) != self.bottom + self.top:
            raise InvalidDiagram(f"matching on {len(self.pairs)} points cannot join {self.bottom} to {self.top}")
        if not is_crossingless(self.pairs):
            raise InvalidDiagram(f"{list(self.pairs)} is not a crossingless perfect matching")

    def top_index(self, j: int) -> int:
        """Index of the ``j``-th top point counted from the left (1-based)."""
        return self.bottom + self.top - j

    @classmethod
    def identity(cls, n: int) -> PlanarMatching:
        return cls(n, n, tuple(2 * n - 1 - i for i in range(2 * n)))

    @classmethod
    def cup(cls, n: int, i: int) -> PlanarMatching:
        """``n`` strands with a new arc created between top positions ``i, i+1``."""
        if not 1 <= i <= n + 1:
            raise InvalidDiagram(f"cup position {i} out of range for {n} strands")
        top = n + 2
        pairs = [0] * (n + top)
        for q in range(1, n + 1):
            t = n + top - (q if q < i else q + 2)
            pairs[q - 1], pairs[t] = t, q - 1
        a, b = n + top - i, n + top - i - 1
        pairs[a], pairs[b] = b, a
        return cls(n, top, tuple(pairs))

    @classmethod
    def cap(cls, n: int, i: int) -> PlanarMatching:
        """``n`` strands with bottom positions ``i, i+1`` joined."""
        if not 1 <= i <= n - 1:
            raise InvalidDiagram(f"cap position {i} out of range for {n} strands")
        top = n - 2
        pairs = [0] * (n + top)
        for q in range(1, n + 1):
            if q in (i, i + 1):
                continue
            t = n + top - (q if q < i else q - 2)
            pairs[q - 1], pairs[t] = t, q - 1
        pairs[i - 1], pairs[i] = i, i - 1
        return cls(n, top, tuple(pairs))


def tl_compose(lower: PlanarMatching, upper: PlanarMatching) -> PlanarMatching:
    """Stack ``upper`` on top of ``lower``; closed loops are removed and counted."""
    if lower.top != upper.bottom:
        raise SizeMismatch(f"cannot stack a matching with {upper.bottom} bottom points "
                           f"on one with {lower.top} top points")
    mid = lower.top
    bot = lower.bottom
    size = bot + upper.top
    result = [-1] * size
    visited = [False] * (mid + 1)

    def lower_mid(j: int) -> int:
        return lower.top_index(j)

    for start in range(size):
        if result[start] >= 0:
            continue
        # walk from a free endpoint until the path leaves the middle row
        on_lower, v = (True, start) if start < bot else (False, start - bot + upper.bottom)
        while True:
            if on_lower:
                u = lower.pairs[v]
                if u < bot:
                    end = u
                    break
                j = bot + mid - u
                visited[j] = True
                on_lower, v = False, j - 1
            else:
                u = upper.pairs[v]
                if u >= upper.bottom:
                    end = u - upper.bottom + bot
                    break
                j = u + 1
                visited[j] = True
                on_lower, v = True, lower_mid(j)
        result[start], result[end] = end, start

    loops = 0
    for j in range(1, mid + 1):
        if visited[j]:
            continue
        loops += 1
        k = j
        while not visited[k]:
            visited[k] = True
            k2 = upper.pairs[k - 1] + 1
            visited[k2] = True
            k = bot + mid - lower.pairs[lower_mid(k2)]
    return PlanarMatching(bot, upper.top, tuple(result), lower.loops + upper.loops + loops)


def compose_all(matchings: Sequence[PlanarMatching], arity: int = 0) -> PlanarMatching:
    """Stack a bottom-to-top sequence of matchings."""
    current = PlanarMatching.identity(arity)
    for m in matchings:
        current = tl_compose(current, m)
    return current
