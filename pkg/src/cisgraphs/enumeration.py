"""Maximal clique / stable set enumeration and the predicates built on it.

Everything here is exact.  Families are enumerated with a pivoted
Bron-Kerbosch expansion over bitset adjacency; when a family would exceed
the configured limit the enumeration stops and the family is marked
truncated.  Predicates that need a complete family raise
:class:`EnumerationLimitExceeded` instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .errors import (
    AllVerticesIsolated,
    EnumerationLimitExceeded,
    IsolatedVertex,
    OrderTooLargeForExactColoring,
)
from .graph import Graph, VertexSet, bits, complement

DEFAULT_LIMIT = 5_000_000
COLORING_MAX_ORDER = 64

CLIQUES = "clique"
STABLE_SETS = "stable"


@dataclass(frozen=True)
class MaximalFamily:
    members: tuple[VertexSet, ...]
    kind: str
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.members)

    def sizes(self) -> set[int]:
        return {m.bit_count() for m in self.members}


@dataclass(frozen=True)
class CisCertificate:
    is_cis: bool
    clique: Optional[VertexSet] = None
    stable_set: Optional[VertexSet] = None


@dataclass(frozen=True)
class CoverWitness:
    holds: bool
    first: Optional[VertexSet] = None
    second: Optional[VertexSet] = None


def _branch_set(adj: tuple[int, ...], p: int, x: int) -> int:
    # pivot maximizing |P ∩ N(u)| over P ∪ X, ties to the smallest index
    best = -1
    pivot_nb = 0
    for u in bits(p | x):
        c = (p & adj[u]).bit_count()
        if c > best:
            best = c
            pivot_nb = adj[u]
    return p & ~pivot_nb


def iter_maximal_cliques(g: Graph) -> Iterator[VertexSet]:
    """Yield every maximal clique of ``g`` exactly once (unsorted)."""
    adj = g.adj
    p0 = g.vertex_set
    stack = [[0, p0, 0, _branch_set(adj, p0, 0)]]
    while stack:
        frame = stack[-1]
        r, p, x, todo = frame
        if not todo:
            stack.pop()
            continue
        low = todo & -todo
        frame[3] = todo ^ low
        frame[1] = p & ~low
        frame[2] = x | low
        nb = adj[low.bit_length() - 1]
        np_ = p & nb
        nx = x & nb
        if not np_:
            if not nx:
                yield r | low
            continue
        stack.append([r | low, np_, nx, _branch_set(adj, np_, nx)])


@lru_cache(maxsize=128)
def _family(g: Graph, kind: str, limit: int) -> MaximalFamily:
    source = g if kind == CLIQUES else complement(g)
    out = []
    truncated = False
    for s in iter_maximal_cliques(source):
        if len(out) == limit:
            truncated = True
            break
        out.append(s)
    out.sort()
    return MaximalFamily(tuple(out), kind, truncated)


def maximal_cliques(g: Graph, limit: int = DEFAULT_LIMIT) -> MaximalFamily:
    if limit < 1:
        raise ValueError("limit must be at least 1")
    return _family(g, CLIQUES, limit)


def maximal_stable_sets(g: Graph, limit: int = DEFAULT_LIMIT) -> MaximalFamily:
    if limit < 1:
        raise ValueError("limit must be at least 1")
    return _family(g, STABLE_SETS, limit)


def _complete(fam: MaximalFamily) -> MaximalFamily:
    if fam.truncated:
        raise EnumerationLimitExceeded(
            f"maximal {fam.kind} family exceeds the limit of {len(fam)} members")
    return fam


def is_maximal_clique(g: Graph, s: VertexSet) -> bool:
    if not s or not g.is_clique(s):
        return False
    common = g.vertex_set & ~s
    for v in bits(s):
        common &= g.adj[v]
    return not common


def is_maximal_stable_set(g: Graph, s: VertexSet) -> bool:
    if not s or not g.is_stable(s):
        return False
    dominated = s
    for v in bits(s):
        dominated |= g.adj[v]
    return dominated == g.vertex_set


def clique_number(g: Graph, limit: int = DEFAULT_LIMIT) -> int:
    return max(_complete(maximal_cliques(g, limit)).sizes())


def stability_number(g: Graph, limit: int = DEFAULT_LIMIT) -> int:
    return max(_complete(maximal_stable_sets(g, limit)).sizes())


def alpha_omega(g: Graph, limit: int = DEFAULT_LIMIT) -> tuple[int, int]:
    return stability_number(g, limit), clique_number(g, limit)


def _uniform(fam: MaximalFamily) -> CoverWitness:
    first = fam.members[0]
    size = first.bit_count()
    for s in fam.members:
        if s.bit_count() != size:
            return CoverWitness(False, first, s)
    return CoverWitness(True)


def is_well_covered(g: Graph, limit: int = DEFAULT_LIMIT) -> CoverWitness:
    """All maximal stable sets have one size; otherwise a pair of different sizes."""
    return _uniform(_complete(maximal_stable_sets(g, limit)))


def is_co_well_covered(g: Graph, limit: int = DEFAULT_LIMIT) -> CoverWitness:
    """All maximal cliques have one size; otherwise a pair of different sizes."""
    return _uniform(_complete(maximal_cliques(g, limit)))


def is_cis(g: Graph, limit: int = DEFAULT_LIMIT) -> CisCertificate:
    """Decide whether every maximal clique meets every maximal stable set.

    On failure the certificate holds the first disjoint pair, scanning
    cliques then stable sets in bit-pattern order.
    """
    cliques = _complete(maximal_cliques(g, limit)).members
    stables = _complete(maximal_stable_sets(g, limit)).members
    for c in cliques:
        for s in stables:
            if not c & s:
                return CisCertificate(False, c, s)
    return CisCertificate(True)


def verify_cis_certificate(g: Graph, cert: CisCertificate) -> bool:
    """Re-check a negative certificate directly against ``g``."""
    if cert.is_cis:
        return cert.clique is None and cert.stable_set is None
    return (cert.clique is not None and cert.stable_set is not None
            and not cert.clique & cert.stable_set
            and is_maximal_clique(g, cert.clique)
            and is_maximal_stable_set(g, cert.stable_set))


def verify_cover_witness(g: Graph, w: CoverWitness, kind: str) -> bool:
    if w.holds:
        return w.first is None and w.second is None
    check = is_maximal_clique if kind == CLIQUES else is_maximal_stable_set
    return (w.first is not None and w.second is not None
            and w.first.bit_count() != w.second.bit_count()
            and check(g, w.first) and check(g, w.second))


def rho_vertex(g: Graph, v: int, limit: int = DEFAULT_LIMIT) -> int:
    """Minimum of |S ∩ N(v)| over maximal stable sets S not containing v."""
    nb = g.adj[v]
    if not nb:
        raise IsolatedVertex(f"vertex {v} is isolated")
    stables = _complete(maximal_stable_sets(g, limit)).members
    return min((s & nb).bit_count() for s in stables if not s >> v & 1)


def rho(g: Graph, v: Optional[int] = None, limit: int = DEFAULT_LIMIT) -> int:
    if v is not None:
        return rho_vertex(g, v, limit)
    candidates = [u for u in range(g.order) if g.adj[u]]
    if not candidates:
        raise AllVerticesIsolated("rho needs a non-isolated vertex")
    return min(rho_vertex(g, u, limit) for u in candidates)


def p4_property(g: Graph) -> tuple[bool, Optional[tuple[int, int, int, int]]]:
    """Check that every induced path a-b-c-d has a vertex joined to b, c and to neither a nor d.

    Returns ``(True, None)`` or ``(False, path)`` for the first failing path.
    """
    adj = g.adj
    for b in range(g.order):
        for c in bits(adj[b] >> (b + 1)):
            c += b + 1
            nb_b, nb_c = adj[b], adj[c]
            ends_a = nb_b & ~nb_c & ~(1 << c)
            ends_d = nb_c & ~nb_b & ~(1 << b)
            middle = nb_b & nb_c
            for a in bits(ends_a):
                for d in bits(ends_d & ~adj[a]):
                    if not middle & ~adj[a] & ~adj[d]:
                        return False, (a, b, c, d)
    return True, None


def red_edges(g: Graph, limit: int = DEFAULT_LIMIT) -> list[tuple[int, int]]:
    """Edges lying in at least two distinct maximum cliques."""
    fam = _complete(maximal_cliques(g, limit))
    omega = max(fam.sizes())
    seen: dict[tuple[int, int], int] = {}
    for c in fam.members:
        if c.bit_count() != omega:
            continue
        vs = list(bits(c))
        for i, u in enumerate(vs):
            for w in vs[i + 1:]:
                seen[(u, w)] = seen.get((u, w), 0) + 1
    return sorted(e for e, k in seen.items() if k >= 2)


def _greedy_coloring(adj: tuple[int, ...], order: list[int]) -> int:
    colors: dict[int, int] = {}
    for v in order:
        used = {colors[u] for u in bits(adj[v]) if u in colors}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return max(colors.values()) + 1


def chromatic_number(g: Graph, max_order: int = COLORING_MAX_ORDER,
                     limit: int = DEFAULT_LIMIT) -> int:
    """Exact chromatic number by branch and bound.

    Lower bound from a maximum clique, upper bound from a greedy coloring in
    descending-degree order; the search colors vertices in that same order
    and never opens a colour class that would reach the incumbent.
    """
    n = g.order
    if n > max_order:
        raise OrderTooLargeForExactColoring(f"order {n} exceeds {max_order}")
    adj = g.adj
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    lower = clique_number(g, limit)
    best = _greedy_coloring(adj, order)
    if best == lower:
        return best
    # color_sets[c] = vertices holding colour c
    color_sets: list[int] = []

    def search(i: int) -> bool:
        nonlocal best
        if i == n:
            best = len(color_sets)
            return best == lower
        v = order[i]
        nb = adj[v]
        for c in range(len(color_sets)):
            if not color_sets[c] & nb:
                color_sets[c] |= 1 << v
                if search(i + 1):
                    return True
                color_sets[c] &= ~(1 << v)
        if len(color_sets) + 1 < best:
            color_sets.append(1 << v)
            if search(i + 1):
                return True
            color_sets.pop()
        return False

    search(0)
    return best


def maximum_cliques(g: Graph, limit: int = DEFAULT_LIMIT) -> list[VertexSet]:
    fam = _complete(maximal_cliques(g, limit))
    omega = max(fam.sizes())
    return [c for c in fam.members if c.bit_count() == omega]


def near_clique_pair(g: Graph, limit: int = DEFAULT_LIMIT) -> Optional[tuple[VertexSet, VertexSet]]:
    """Two maximum cliques meeting in exactly omega-1 vertices, if any exist."""
    top = maximum_cliques(g, limit)
    omega = top[0].bit_count()
    for i, a in enumerate(top):
        for b in top[i + 1:]:
            if (a & b).bit_count() == omega - 1:
                return a, b
    return None
