"""
Kazhdan–Lusztig cells of S_n.

``x -> y`` is an edge when ``KL(y)`` occurs in ``KL(s) KL(x)`` (left) or
``KL(x) KL(s)`` (right) for a simple reflection ``s``. Cells are the strongly
connected components of this graph; the cell preorder is reachability
between components.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from sympy.utilities.iterables import strongly_connected_components

from ..combinatorics.permutations import Permutation
from ..combinatorics.tableaux import rsk
from ..errors import InvalidInput
from .kazhdan_lusztig import KLTable, generator_product, kl_table

logger = logging.getLogger(__name__)

KINDS = ("left", "right", "two-sided")


@dataclass
class CellPartition:
    n: int
    kind: str
    classes: List[FrozenSet[Permutation]]
    # (a, b) in ``below`` means class a <= class b in the cell preorder
    below: Set[Tuple[int, int]] = field(default_factory=set, repr=False)

    @cached_property
    def class_index(self) -> Dict[Permutation, int]:
        return {w: k for k, cls in enumerate(self.classes) for w in cls}

    def class_of(self, w: Permutation) -> FrozenSet[Permutation]:
        try:
            return self.classes[self.class_index[w]]
        except KeyError:
            raise InvalidInput(f"{w} is not an element of S{self.n}") from None

    def leq(self, a: int, b: int) -> bool:
        """Preorder between classes (by index): ``a`` is reachable from ``b``."""
        return a == b or (a, b) in self.below

    def leq_elements(self, x: Permutation, y: Permutation) -> bool:
        return self.leq(self.class_index[x], self.class_index[y])

    def is_cell(self, cell) -> bool:
        return frozenset(cell) in set(self.classes)

    def label(self, k: int) -> str:
        """Tableau label: ``p`` for right cells, ``q`` for left cells, the shape otherwise."""
        w = sorted(self.classes[k], key=Permutation.sort_key)[0]
        p, q = rsk(w)
        if self.kind == "right":
            return p.fmt()
        if self.kind == "left":
            return q.fmt()
        return "(" + ",".join(str(x) for x in p.shape) + ")"

    def members(self, k: int) -> List[Permutation]:
        return sorted(self.classes[k], key=Permutation.sort_key)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "kind": self.kind,
            "cells": [
                {"label": self.label(k), "members": [w.fmt() for w in self.members(k)]}
                for k in range(len(self.classes))
            ],
            "order": sorted([a, b] for a, b in self.below),
        }


def cell_edges(table: KLTable, kind: str) -> List[Tuple[Permutation, Permutation]]:
    if kind not in KINDS:
        raise InvalidInput(f"kind must be one of {', '.join(KINDS)}; got {kind!r}")
    sides = ("left", "right") if kind == "two-sided" else (kind,)
    edges = set()
    for x in table.elements:
        for side in sides:
            for i in range(1, table.n):
                for y in generator_product(table, x, i, side):
                    if y != x:
                        edges.add((x, y))
    return sorted(edges, key=lambda e: (e[0].sort_key(), e[1].sort_key()))


def _reachability(nclasses: int, class_edges: Set[Tuple[int, int]]) -> Set[Tuple[int, int]]:
    succ: Dict[int, Set[int]] = {k: set() for k in range(nclasses)}
    for a, b in class_edges:
        succ[a].add(b)
    below = set()
    for start in range(nclasses):
        stack = list(succ[start])
        seen: Set[int] = set()
        while stack:
            k = stack.pop()
            if k in seen:
                continue
            seen.add(k)
            stack.extend(succ[k])
        below.update((k, start) for k in seen if k != start)
    return below


def partition_from_edges(n: int, kind: str, elements: List[Permutation],
                         edges: List[Tuple[Permutation, Permutation]]) -> CellPartition:
    position = {w: k for k, w in enumerate(elements)}
    graph = (list(range(len(elements))), [(position[x], position[y]) for x, y in edges])
    components = strongly_connected_components(graph)
    classes = sorted((frozenset(elements[k] for k in c) for c in components),
                     key=lambda c: min(w.sort_key() for w in c))
    index = {w: k for k, c in enumerate(classes) for w in c}
    class_edges = {(index[x], index[y]) for x, y in edges if index[x] != index[y]}
    return CellPartition(n=n, kind=kind, classes=classes, below=_reachability(len(classes), class_edges))


def cells(n: int, kind: str, table: Optional[KLTable] = None) -> CellPartition:
    table = table or kl_table(n)
    edges = cell_edges(table, kind)
    partition = partition_from_edges(n, kind, table.elements, edges)
    logger.info("S%d has %d %s cells", n, len(partition.classes), kind)
    return partition


def rsk_partition(n: int, kind: str) -> List[FrozenSet[Permutation]]:
    """Classes of S_n with equal ``p`` (right), ``q`` (left) or shape (two-sided)."""
    if kind not in KINDS:
        raise InvalidInput(f"kind must be one of {', '.join(KINDS)}; got {kind!r}")
    groups: Dict[object, Set[Permutation]] = {}
    for w in Permutation.all(n):
        p, q = rsk(w)
        key = {"right": p, "left": q, "two-sided": p.shape}[kind]
        groups.setdefault(key, set()).add(w)
    return [frozenset(g) for g in groups.values()]


def check_rsk_cells(n: int) -> bool:
    table = kl_table(n)
    for kind in KINDS:
        computed = set(cells(n, kind, table).classes)
        if computed != set(rsk_partition(n, kind)):
            logger.warning("%s cells of S%d disagree with the tableau description", kind, n)
            return False
    return True
