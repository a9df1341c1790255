"""Automorphism groups, canonical forms and regular-subgroup search.

The search is the classic individualization-refinement scheme: refine an
ordered partition to an equitable one, individualize a vertex of the first
smallest non-singleton cell, repeat until the partition is discrete.  Each
leaf gives a relabeled graph; two leaves with identical relabeled graphs
yield an automorphism.  Subtrees are skipped only when

* a discovered automorphism fixing the current prefix maps an explored
  child onto them, or
* their refinement trace already exceeds the best leaf's (and differs from
  the first leaf's, so no automorphism is lost).

The canonical form is the graph6 encoding of the minimal leaf under the key
``(trace, relabeled adjacency)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .enumeration import (
    DEFAULT_LIMIT,
    CisCertificate,
    alpha_omega,
    is_cis,
    is_co_well_covered,
    is_well_covered,
)
from .errors import GroupTooLarge, NotVertexTransitive, SearchBudgetExceeded
from .graph import Graph, bits, graph6_encode

DEFAULT_BUDGET = 2_000_000
GROUP_CAP = 1_000_000

Permutation = tuple[int, ...]


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p ∘ q``: apply ``q`` first, then ``p``."""
    return tuple(p[i] for i in q)


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def is_automorphism(g: Graph, p: Sequence[int]) -> bool:
    if sorted(p) != list(range(g.order)):
        return False
    for u, row in enumerate(g.adj):
        image = 0
        for w in bits(row):
            image |= 1 << p[w]
        if g.adj[p[u]] != image:
            return False
    return True


def format_permutation(p: Sequence[int]) -> str:
    return " ".join(map(str, p))


def parse_permutation(text: str) -> Permutation:
    return tuple(int(t) for t in text.split())


def orbits_of(n: int, generators: Sequence[Permutation]) -> list[frozenset[int]]:
    """Orbit partition of ``{0..n-1}`` under the generated group, ordered by minimum."""
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for gen in generators:
        for i, j in enumerate(gen):
            ri, rj = find(i), find(j)
            if ri != rj:
                if ri < rj:
                    parent[rj] = ri
                else:
                    parent[ri] = rj
    cells: dict[int, set[int]] = {}
    for v in range(n):
        cells.setdefault(find(v), set()).add(v)
    return [frozenset(cells[r]) for r in sorted(cells)]


@dataclass
class PermutationGroup:
    degree: int
    generators: list[Permutation]
    order: int
    orbits: list[frozenset[int]]
    elements: Optional[list[Permutation]] = field(default=None, repr=False)

    def materialize(self, cap: int = GROUP_CAP) -> list[Permutation]:
        """Enumerate every element by closure under the generators."""
        if self.elements is not None:
            return self.elements
        if self.order > cap:
            raise GroupTooLarge(f"group order {self.order} exceeds cap {cap}")
        self.elements = generate_group(self.degree, self.generators, cap)
        return self.elements

    def stabilizer_order(self, v: int = 0) -> int:
        orbit = next(o for o in self.orbits if v in o)
        return self.order // len(orbit)


def generate_group(n: int, generators: Sequence[Permutation],
                   cap: int = GROUP_CAP) -> list[Permutation]:
    identity = tuple(range(n))
    seen = {identity}
    out = [identity]
    frontier = [identity]
    while frontier:
        nxt = []
        for h in frontier:
            for gen in generators:
                e = compose(gen, h)
                if e not in seen:
                    seen.add(e)
                    out.append(e)
                    nxt.append(e)
                    if len(out) > cap:
                        raise GroupTooLarge(f"group exceeds cap {cap}")
        frontier = nxt
    out.sort()
    return out


# --------------------------------------------------------------- refinement

def _refine(adj: tuple[int, ...], cells: list[int], splitters: list[int]):
    """Equitable refinement of an ordered partition, in place by position.

    Cells are split by the number of neighbours in each splitter, fragments
    ordered by that count.  Returns the new cell list and a label-invariant
    trace of the splits performed.
    """
    cells = list(cells)
    queue = list(splitters)
    trace = []
    qi = 0
    while qi < len(queue):
        w = queue[qi]
        qi += 1
        i = 0
        while i < len(cells):
            x = cells[i]
            if not x & (x - 1):
                i += 1
                continue
            groups: dict[int, int] = {}
            for v in bits(x):
                c = (adj[v] & w).bit_count()
                groups[c] = groups.get(c, 0) | (1 << v)
            if len(groups) == 1:
                i += 1
                continue
            keys = sorted(groups)
            frags = [groups[k] for k in keys]
            cells[i:i + 1] = frags
            trace.append((i, tuple((k, groups[k].bit_count()) for k in keys)))
            queue.extend(frags)
            i += len(frags)
    return cells, tuple(trace)


class _Search:
    def __init__(self, g: Graph, budget: int):
        self.g = g
        self.n = g.order
        self.adj = g.adj
        self.budget = budget
        self.nodes = 0
        self.generators: list[Permutation] = []
        self.first_path: Optional[list[int]] = None
        self.first_traces: Optional[tuple] = None
        self.best_key = None
        self.best_rows: Optional[tuple[int, ...]] = None
        self.leaves: dict[tuple[int, ...], tuple[list[int], list[int]]] = {}
        self.order = 1

    def run(self) -> None:
        cells, tr = _refine(self.adj, [self.g.vertex_set], [self.g.vertex_set])
        self._visit(cells, [], (tr,))

    def _fixing(self, path: list[int]) -> list[Permutation]:
        return [p for p in self.generators if all(p[u] == u for u in path)]

    def _visit(self, cells: list[int], path: list[int], traces: tuple) -> Optional[int]:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(f"search exceeded {self.budget} nodes")
        depth = len(path)
        if self.first_traces is not None:
            if (traces != self.first_traces[:depth + 1]
                    and traces > self.best_key[0][:depth + 1]):
                return None
        if len(cells) == self.n:
            return self._leaf(cells, path, traces)

        size, idx = min((c.bit_count(), i) for i, c in enumerate(cells) if c & (c - 1))
        target = cells[idx]
        on_first = self.first_path is None or self.first_path[:depth] == path
        processed: list[int] = []
        orbit_gens = -1
        orbit_of: dict[int, frozenset[int]] = {}
        for v in bits(target):
            if processed:
                fixing = self._fixing(path)
                if len(fixing) != orbit_gens:
                    orbit_gens = len(fixing)
                    orbit_of = {}
                    for o in orbits_of(self.n, fixing):
                        for u in o:
                            orbit_of[u] = o
                if orbit_of and any(u in orbit_of[v] for u in processed):
                    continue
            processed.append(v)
            child = cells[:idx] + [1 << v, target & ~(1 << v)] + cells[idx + 1:]
            child, tr = _refine(self.adj, child, [1 << v])
            r = self._visit(child, path + [v], traces + (tr,))
            if r is not None and r < depth:
                return r
        if on_first and self.first_path is not None and depth < len(self.first_path):
            fixing = self._fixing(path)
            w = self.first_path[depth]
            orbit = next(o for o in orbits_of(self.n, fixing) if w in o)
            self.order *= len(orbit)
        return None

    def _leaf(self, cells: list[int], path: list[int], traces: tuple) -> Optional[int]:
        lab = [c.bit_length() - 1 for c in cells]
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            image = 0
            for u in bits(row):
                image |= 1 << pos[u]
            rows[pos[v]] = image
        rows = tuple(rows)
        key = (traces, rows)
        if self.first_path is None:
            self.first_path = path
            self.first_traces = traces
            self.best_key = key
            self.leaves[rows] = (lab, path)
            return None
        if key < self.best_key:
            self.best_key = key
        stored = self.leaves.get(rows)
        if stored is None:
            self.leaves[rows] = (lab, path)
            return None
        other_lab, other_path = stored
        gamma = [0] * self.n
        for a, b in zip(other_lab, lab):
            gamma[a] = b
        gamma = tuple(gamma)
        if gamma != tuple(range(self.n)) and gamma not in self.generators:
            self.generators.append(gamma)
        d = 0
        while d < len(path) and d < len(other_path) and path[d] == other_path[d]:
            d += 1
        return d


def _search(g: Graph, budget: int) -> _Search:
    s = _Search(g, budget)
    s.run()
    return s


def automorphism_group(g: Graph, budget: int = DEFAULT_BUDGET) -> PermutationGroup:
    s = _search(g, budget)
    return PermutationGroup(g.order, list(s.generators), s.order,
                            orbits_of(g.order, s.generators))


def canonical_labeling(g: Graph, budget: int = DEFAULT_BUDGET) -> Graph:
    """The canonically relabeled copy of ``g``."""
    s = _search(g, budget)
    return Graph(g.order, s.best_key[1])


def canonical_form(g: Graph, budget: int = DEFAULT_BUDGET) -> bytes:
    return graph6_encode(canonical_labeling(g, budget))


def are_isomorphic(a: Graph, b: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    if a.order != b.order or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_form(a, budget) == canonical_form(b, budget)


@dataclass(frozen=True)
class Transitivity:
    is_vertex_transitive: bool
    orbits: list[frozenset[int]]


def transitivity(g: Graph, budget: int = DEFAULT_BUDGET) -> Transitivity:
    grp = automorphism_group(g, budget)
    return Transitivity(len(grp.orbits) == 1, grp.orbits)


def is_vertex_transitive(g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    return transitivity(g, budget).is_vertex_transitive


def vt_cis_check(g: Graph, limit: int = DEFAULT_LIMIT,
                 budget: int = DEFAULT_BUDGET) -> CisCertificate:
    """CIS verdict for a vertex-transitive graph from cover sizes alone.

    The graph is CIS iff it is well-covered, co-well-covered and
    ``alpha * omega == n``.  The verdict never intersects the two families;
    a disjoint pair is looked up afterwards only to attach a witness.
    """
    if not is_vertex_transitive(g, budget):
        raise NotVertexTransitive("vt_cis_check needs a vertex-transitive graph")
    a, w = alpha_omega(g, limit)
    verdict = (is_well_covered(g, limit).holds and is_co_well_covered(g, limit).holds
               and a * w == g.order)
    if verdict:
        return CisCertificate(True)
    cert = is_cis(g, limit)
    if cert.is_cis:
        raise AssertionError("vertex-transitive graph failed the size criterion but is CIS")
    return cert


# ----------------------------------------------------- regular subgroups

def _closure_semiregular(n: int, gens: list[Permutation], cap: int) -> Optional[list[Permutation]]:
    """Group generated by ``gens`` if it has at most ``cap`` elements, all fixed-point-free."""
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for h in frontier:
            for gen in gens:
                e = compose(gen, h)
                if e in seen:
                    continue
                if any(e[i] == i for i in range(n)):
                    return None
                seen.add(e)
                if len(seen) > cap:
                    return None
                nxt.append(e)
        frontier = nxt
    return list(seen)


def find_regular_subgroup(group: PermutationGroup,
                          cap: int = GROUP_CAP) -> Optional[list[Permutation]]:
    """Generators of a subgroup acting regularly on the points, or ``None``.

    Backtracks over generator choices: the next generator must send 0 to the
    smallest point not yet reached, and every partial subgroup must stay
    semiregular (no non-identity element fixes a point).
    """
    n = group.degree
    elements = group.materialize(cap)
    if len(group.orbits) != 1:
        return None
    by_image: dict[int, list[Permutation]] = {}
    for e in elements:
        if all(e[i] != i for i in range(n)):
            by_image.setdefault(e[0], []).append(e)

    def extend(gens: list[Permutation], members: list[Permutation]) -> Optional[list[Permutation]]:
        reached = {m[0] for m in members}
        if len(members) == n:
            return gens
        target = min(set(range(n)) - reached)
        for cand in by_image.get(target, []):
            closure = _closure_semiregular(n, gens + [cand], n)
            if closure is None or n % len(closure):
                continue
            found = extend(gens + [cand], closure)
            if found is not None:
                return found
        return None

    return extend([], [tuple(range(n))])


def is_regular_subgroup(n: int, gens: Sequence[Permutation]) -> bool:
    """Direct check: order ``n``, transitive, trivial point stabilizers."""
    try:
        elements = generate_group(n, gens, cap=n)
    except GroupTooLarge:
        return False
    if len(elements) != n:
        return False
    identity = tuple(range(n))
    if any(e != identity and any(e[i] == i for i in range(n)) for e in elements):
        return False
    return {e[0] for e in elements} == set(range(n))
