"""Neighbourhood-equivalence quotients and lexicographic factorizations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, VertexSet, bits

OPEN = "open"
CLOSED = "closed"


@dataclass(frozen=True)
class QuotientResult:
    quotient: Graph
    classes: tuple[VertexSet, ...]
    kind: str

    def class_sizes(self) -> list[int]:
        return [c.bit_count() for c in self.classes]


def neighborhood_partition(g: Graph, mode: str = OPEN) -> QuotientResult:
    """Group vertices with identical open (or closed) neighbourhoods.

    Classes are ordered by their minimum vertex, which also serves as the
    class representative; quotient vertex ``i`` is class ``i``.
    """
    if mode not in (OPEN, CLOSED):
        raise ValueError(f"mode must be {OPEN!r} or {CLOSED!r}")
    by_key: dict[int, int] = {}
    for v in range(g.order):
        key = g.adj[v] if mode == OPEN else g.adj[v] | (1 << v)
        by_key[key] = by_key.get(key, 0) | (1 << v)
    classes = sorted(by_key.values(), key=lambda c: c & -c)
    rep_index = {}
    for i, c in enumerate(classes):
        for v in bits(c):
            rep_index[v] = i
    rows = []
    for i, c in enumerate(classes):
        rep = (c & -c).bit_length() - 1
        row = 0
        for u in bits(g.adj[rep]):
            if rep_index[u] != i:
                row |= 1 << rep_index[u]
        rows.append(row)
    return QuotientResult(Graph(len(classes), rows), tuple(classes), mode)


def irreducible_quotient(g: Graph) -> QuotientResult:
    return neighborhood_partition(g, OPEN)


def is_irreducible(g: Graph) -> bool:
    return len(set(g.adj)) == g.order


def factor_lex_complete(g: Graph) -> Optional[tuple[Graph, int]]:
    """``(Z, m)`` with ``g ≅ Z[K_m]`` and ``m >= 2``, read off the closed classes."""
    q = neighborhood_partition(g, CLOSED)
    sizes = set(q.class_sizes())
    if len(sizes) != 1:
        return None
    (m,) = sizes
    if m < 2:
        return None
    return q.quotient, m


def factor_lex_empty(g: Graph) -> Optional[tuple[Graph, int]]:
    """``(X, n)`` with ``g ≅ X[empty_n]`` where ``X`` is the irreducible quotient."""
    q = neighborhood_partition(g, OPEN)
    sizes = set(q.class_sizes())
    if len(sizes) != 1:
        return None
    (n,) = sizes
    return q.quotient, n
