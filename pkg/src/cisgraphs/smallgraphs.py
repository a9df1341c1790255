"""Exhaustive enumeration of graphs of small order, one per isomorphism class.

Every labeled graph on ``n`` vertices is encoded as an integer whose bit
``j*(j-1)/2 + i`` records the pair ``i < j`` (the graph6 cell order).  The
labeled codes are swept in increasing order; the first unmarked code is the
minimum of its orbit under vertex relabeling, so it is emitted and its whole
orbit (all ``n!`` images) is marked at once.  Each of the
``2**(n(n-1)/2)`` labeled graphs is marked exactly by its own orbit.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterator

import numpy as np

from .errors import OrderTooLarge
from .graph import Graph

MAX_DEFAULT_ORDER = 7
MAX_LONG_ORDER = 8

_CHUNK = 1 << 16


def pair_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def code_to_graph(n: int, code: int) -> Graph:
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if code >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, rows)


def graph_to_code(g: Graph) -> int:
    code = 0
    for i, j in g.edges():
        code |= 1 << pair_index(i, j)
    return code


def _pair_images(n: int) -> np.ndarray:
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    perms = list(permutations(range(n)))
    out = np.empty((len(perms), len(pairs)), dtype=np.int64)
    for r, p in enumerate(perms):
        out[r] = [pair_index(p[i], p[j]) for i, j in pairs]
    return out


def iter_class_codes(n: int, allow_long: bool = False) -> Iterator[tuple[int, int]]:
    """Yield ``(min_code, orbit_size)`` for every isomorphism class on ``n`` vertices."""
    limit = MAX_LONG_ORDER if allow_long else MAX_DEFAULT_ORDER
    if n < 1 or n > limit:
        raise OrderTooLarge(f"exhaustive enumeration supports 1 <= n <= {limit}")
    m = n * (n - 1) // 2
    total = 1 << m
    if m == 0:
        yield 0, 1
        return
    images = _pair_images(n)
    weights = np.left_shift(np.int64(1), images)
    seen = np.zeros(total, dtype=bool)
    positions = np.arange(m, dtype=np.int64)
    ptr = 0
    covered = 0
    while ptr < total:
        free = np.flatnonzero(~seen[ptr:ptr + _CHUNK])
        if free.size == 0:
            ptr += _CHUNK
            continue
        code = ptr + int(free[0])
        present = (code >> positions) & 1
        orbit = np.unique(weights @ present)
        seen[orbit] = True
        covered += orbit.size
        yield code, int(orbit.size)
        ptr = code + 1
    if covered != total:
        raise AssertionError(f"orbits covered {covered} of {total} labeled graphs")


def iter_graph_classes(n: int, allow_long: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class, in increasing code order."""
    for code, _ in iter_class_codes(n, allow_long):
        yield code_to_graph(n, code)


def count_classes(n: int, allow_long: bool = False) -> int:
    return sum(1 for _ in iter_class_codes(n, allow_long))
