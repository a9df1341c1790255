"""Immutable simple graphs over bitset adjacency, structural operators and the graph6 codec.

Vertex sets are plain Python ints used as bit vectors: bit ``v`` is set iff
vertex ``v`` belongs to the set.  Every adjacency row ``adj[v]`` is such a set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    AsymmetricAdjacency,
    EmptyOrder,
    EmptySet,
    Graph6Error,
    IsolatedVertex,
    LoopEdge,
    MalformedHeader,
    NoEdges,
    NonzeroPadding,
    OrderTooLarge,
    TruncatedBody,
    VertexOutOfRange,
)

MAX_ORDER = 128

VertexSet = int


def bits(s: VertexSet) -> Iterator[int]:
    """Yield the members of a vertex set in increasing order."""
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def to_set(vertices: Iterable[int]) -> VertexSet:
    s = 0
    for v in vertices:
        s |= 1 << v
    return s


def full_set(n: int) -> VertexSet:
    return (1 << n) - 1


def _check_order(n: int) -> None:
    if n < 1:
        raise EmptyOrder("graph must have at least one vertex")
    if n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} exceeds cap {MAX_ORDER}")


class Graph:
    """Simple undirected graph on vertices ``0..order-1``.

    Instances are immutable; equality is labeled equality (same order, same
    edge set).  Use :func:`cisgraphs.symmetry.are_isomorphic` for
    isomorphism.
    """

    __slots__ = ("order", "adj", "_hash")

    def __init__(self, order: int, adj: Sequence[int]):
        # trusted constructor; validation lives in from_edges / from_rows
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build from adjacency bit rows, validating symmetry and irreflexivity."""
        n = len(rows)
        _check_order(n)
        mask = full_set(n)
        for v, row in enumerate(rows):
            if row & ~mask:
                raise VertexOutOfRange(f"row {v} has bits beyond order {n}")
            if row >> v & 1:
                raise LoopEdge(f"loop at vertex {v}")
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise AsymmetricAdjacency(f"asymmetric adjacency between {v} and {u}")
        return cls(n, rows)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.adj == other.adj

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.order, self.adj))
            object.__setattr__(self, "_hash", h)
        return h

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.num_edges()})"

    @property
    def vertex_set(self) -> VertexSet:
        return full_set(self.order)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def closed_neighborhood(self, v: int) -> VertexSet:
        return self.adj[v] | (1 << v)

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, row in enumerate(self.adj):
            for v in bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def is_clique(self, s: VertexSet) -> bool:
        for v in bits(s):
            if (s & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def is_stable(self, s: VertexSet) -> bool:
        for v in bits(s):
            if s & self.adj[v]:
                return False
        return True

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which old vertex ``v`` becomes ``perm[v]``."""
        n = self.order
        rows = [0] * n
        for v, row in enumerate(self.adj):
            image = 0
            for u in bits(row):
                image |= 1 << perm[u]
            rows[perm[v]] = image
        return Graph(n, rows)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    _check_order(n)
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise LoopEdge(f"loop edge ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def empty_graph(n: int) -> Graph:
    _check_order(n)
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    _check_order(n)
    mask = full_set(n)
    return Graph(n, [mask & ~(1 << v) for v in range(n)])


def complement(g: Graph) -> Graph:
    mask = g.vertex_set
    return Graph(g.order, [mask & ~row & ~(1 << v) for v, row in enumerate(g.adj)])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    n = a.order + b.order
    if n > MAX_ORDER:
        raise OrderTooLarge(f"union order {n} exceeds cap {MAX_ORDER}")
    shift = a.order
    return Graph(n, list(a.adj) + [row << shift for row in b.adj])


def lexicographic_product(a: Graph, b: Graph) -> Graph:
    """``a[b]``: vertex ``(u, x)`` is ``u * |b| + x``."""
    m = b.order
    n = a.order * m
    if n > MAX_ORDER:
        raise OrderTooLarge(f"product order {n} exceeds cap {MAX_ORDER}")
    block = full_set(m)
    rows = []
    for u in range(a.order):
        cross = 0
        for w in bits(a.adj[u]):
            cross |= block << (w * m)
        for x in range(m):
            rows.append(cross | (b.adj[x] << (u * m)))
    return Graph(n, rows)


def line_graph(g: Graph) -> Graph:
    """Line graph; vertex ``i`` is the ``i``-th edge of ``g.edges()``."""
    es = g.edges()
    if not es:
        raise NoEdges("line graph of an edgeless graph is empty")
    if len(es) > MAX_ORDER:
        raise OrderTooLarge(f"{len(es)} edges exceed cap {MAX_ORDER}")
    incident = [0] * g.order
    for i, (u, v) in enumerate(es):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    rows = [(incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(es)]
    return Graph(len(es), rows)


def induced_subgraph(g: Graph, s: VertexSet | Iterable[int]) -> Graph:
    """Subgraph induced on ``s``; the ``i``-th smallest member becomes vertex ``i``."""
    if not isinstance(s, int):
        s = to_set(s)
    if s & ~g.vertex_set:
        raise VertexOutOfRange("vertex set exceeds graph order")
    members = list(bits(s))
    if not members:
        raise EmptySet("cannot induce on an empty vertex set")
    index = {v: i for i, v in enumerate(members)}
    rows = []
    for v in members:
        rows.append(to_set(index[u] for u in bits(g.adj[v] & s)))
    return Graph(len(members), rows)


def local_graph(g: Graph, v: int) -> Graph:
    if not g.adj[v]:
        raise IsolatedVertex(f"vertex {v} is isolated")
    return induced_subgraph(g, g.adj[v])


def components(g: Graph) -> list[VertexSet]:
    """Connected components, ordered by their minimum vertex."""
    remaining = g.vertex_set
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


@dataclass(frozen=True)
class Profile:
    degrees: tuple[int, ...]
    is_regular: bool
    valency: int | None
    components: tuple[VertexSet, ...]
    is_connected: bool


def profile(g: Graph) -> Profile:
    degs = tuple(g.degrees())
    regular = len(set(degs)) == 1
    comps = tuple(components(g))
    return Profile(degs, regular, degs[0] if regular else None, comps, len(comps) == 1)


# ---------------------------------------------------------------- graph6

def _g6_order_prefix(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def graph6_encode(g: Graph) -> bytes:
    n = g.order
    out = bytearray(_g6_order_prefix(n))
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def graph6_decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise MalformedHeader("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise Graph6Error("byte outside the printable graph6 range 63..126")
    if data[0] != 126:
        n = data[0] - 63
        body = data[1:]
    else:
        if len(data) < 4 or data[1] == 126:
            raise MalformedHeader("bad extended order header")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        if n < 63:
            raise MalformedHeader(f"extended header used for order {n} < 63")
        body = data[4:]
    _check_order(n)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) < need:
        raise TruncatedBody(f"expected {need} body bytes, got {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"expected {need} body bytes, got {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6 and (body[-1] - 63) & ((1 << (6 - nbits % 6)) - 1):
        raise NonzeroPadding("graph6 padding bits must be zero")
    return Graph(n, rows)


# ------------------------------------------------------------ edge lists

def to_edge_list(g: Graph) -> str:
    es = g.edges()
    lines = [f"{g.order} {len(es)}"] + [f"{u} {v}" for u, v in es]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise MalformedHeader("edge list must start with 'n m'")
    n, m = int(lines[0][0]), int(lines[0][1])
    if len(lines) - 1 != m:
        raise TruncatedBody(f"header announces {m} edges, found {len(lines) - 1}")
    return from_edges(n, [(int(a), int(b)) for a, b in lines[1:]])


