"""Graph families: basic graphs, PX(n), Q_n, R_n, S_n, Cayley graphs, the
closure family and the extremal local graphs.

Vertex indexing is fixed per family so graph6 output is reproducible:

* ``PX(n)`` and ``Q_n``: vertex ``(i, x, y)`` of ``Z_n x Z_2 x Z_2`` is ``4i + 2x + y``.
* Cayley graphs on an abelian group: mixed-radix rank, last coordinate fastest,
  so ``(a, b)`` in ``Z_m x Z_4`` is ``4a + b``.
* ``L(K_{n,n})``: rook's graph, cell ``(i, j)`` is ``n*i + j``.
* ``K_{m,n}``: the ``m`` side first.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional, Sequence, Union

from .enumeration import clique_number, is_co_well_covered, near_clique_pair
from .errors import (
    BadParameter,
    IdentityInConnectionSet,
    NotInverseClosed,
    OrderTooLarge,
)
from .graph import (
    MAX_ORDER,
    Graph,
    complement,
    complete_graph,
    empty_graph,
    from_edges,
    lexicographic_product,
)
from .smallgraphs import iter_graph_classes
from .symmetry import canonical_form, canonical_labeling


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParameter(msg)


def _fits(n: int) -> None:
    if n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} exceeds cap {MAX_ORDER}")


# ------------------------------------------------------------ basic graphs

def complete_bipartite(m: int, n: int) -> Graph:
    _need(m >= 1 and n >= 1, "K_{m,n} needs m, n >= 1")
    _fits(m + n)
    return from_edges(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "C_n needs n >= 3")
    _fits(n)
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _need(n >= 1, "P_n needs n >= 1")
    _fits(n)
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def rook_graph(n: int) -> Graph:
    """``L(K_{n,n})`` built directly: cells adjacent iff they share exactly one coordinate."""
    _need(n >= 1, "L(K_{n,n}) needs n >= 1")
    _fits(n * n)
    edges = []
    for a, b in product(range(n * n), repeat=2):
        if a < b and ((a // n == b // n) != (a % n == b % n)):
            edges.append((a, b))
    return from_edges(n * n, edges)


def construct_basic(kind: str, *params: int) -> Graph:
    if kind == "K":
        _need(len(params) == 1 and params[0] >= 1, "K needs one parameter n >= 1")
        _fits(params[0])
        return complete_graph(params[0])
    if kind == "Kmn":
        _need(len(params) == 2, "Kmn needs two parameters m,n")
        return complete_bipartite(*params)
    if kind == "C":
        _need(len(params) == 1, "C needs one parameter n")
        return cycle(params[0])
    if kind == "LKnn":
        _need(len(params) == 1, "LKnn needs one parameter n")
        return rook_graph(params[0])
    raise BadParameter(f"unknown basic family {kind!r}")


# ------------------------------------------------------------ PX, Q

def _block_vertex(n: int, i: int, x: int, y: int) -> int:
    return 4 * (i % n) + 2 * x + y


def px_graph(n: int) -> Graph:
    _need(n >= 3, "PX(n) needs n >= 3")
    _fits(4 * n)
    edges = set()
    for i, x, y, z in product(range(n), range(2), range(2), range(2)):
        a, b = _block_vertex(n, i, x, y), _block_vertex(n, i + 1, y, z)
        edges.add((min(a, b), max(a, b)))
    return from_edges(4 * n, sorted(edges))


def q_graph(n: int) -> Graph:
    """PX(n) with every block ``{(i, *, *)}`` made complete."""
    base = px_graph(n)
    rows = list(base.adj)
    for v in range(4 * n):
        block = 0b1111 << (4 * (v // 4))
        rows[v] |= block & ~(1 << v)
    return Graph(4 * n, rows)


# ------------------------------------------------------------ groups

@dataclass(frozen=True)
class AbelianGroup:
    """Direct product of cyclic groups ``Z_m1 x ... x Z_mk``."""

    moduli: tuple[int, ...]

    def __post_init__(self):
        _need(len(self.moduli) >= 1 and all(m >= 2 for m in self.moduli),
              "every modulus must be >= 2")
        _fits(self.order)

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    def elements(self) -> list[tuple[int, ...]]:
        return list(product(*(range(m) for m in self.moduli)))

    def rank(self, e: Sequence[int]) -> int:
        r = 0
        for x, m in zip(e, self.moduli):
            r = r * m + x % m
        return r

    def normalize(self, e: Sequence[int]) -> tuple[int, ...]:
        if len(e) != len(self.moduli):
            raise BadParameter(f"element {tuple(e)} has wrong arity for {self}")
        return tuple(x % m for x, m in zip(e, self.moduli))

    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.moduli)

    def inverse(self, e: Sequence[int]) -> tuple[int, ...]:
        return tuple(-x % m for x, m in zip(e, self.moduli))

    def add(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def __str__(self) -> str:
        return "x".join(f"Z{m}" for m in self.moduli)


@dataclass(frozen=True)
class GroupTable:
    """Finite group given by its multiplication table on ``0..order-1``."""

    table: tuple[tuple[int, ...], ...]
    identity: int = 0

    def __post_init__(self):
        n = len(self.table)
        _need(n >= 1, "empty group table")
        _fits(n)
        full = list(range(n))
        for row in self.table:
            _need(len(row) == n and sorted(row) == full, "table rows must be permutations")
        for c in range(n):
            _need(sorted(self.table[r][c] for r in range(n)) == full,
                  "table columns must be permutations")
        t = self.table
        _need(all(t[self.identity][x] == x == t[x][self.identity] for x in full),
              "identity element is not neutral")
        for a, b, c in product(full, repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise BadParameter(f"table is not associative at ({a}, {b}, {c})")

    @property
    def order(self) -> int:
        return len(self.table)

    def inverse(self, a: int) -> int:
        return next(b for b in range(self.order) if self.table[a][b] == self.identity)


Group = Union[AbelianGroup, GroupTable]


def connection_set(group: Group, elements: Iterable) -> list:
    """Validate and deduplicate a connection set; returns it sorted by rank."""
    if isinstance(group, AbelianGroup):
        s = {group.normalize(e) for e in elements}
        ident = group.identity()
        key = group.rank
    else:
        s = set()
        for e in elements:
            if not 0 <= e < group.order:
                raise BadParameter(f"element {e} outside the group")
            s.add(e)
        ident = group.identity
        key = None
    if ident in s:
        raise IdentityInConnectionSet("the identity may not be in a connection set")
    for e in s:
        if group.inverse(e) not in s:
            raise NotInverseClosed(f"inverse of {e} missing from the connection set")
    return sorted(s, key=key)


def cayley_graph(group: Group, elements: Iterable) -> Graph:
    """``g ~ h`` iff ``g^-1 h`` lies in the connection set."""
    conn = connection_set(group, elements)
    n = group.order
    rows = [0] * n
    if isinstance(group, AbelianGroup):
        for g in group.elements():
            gi = group.rank(g)
            for s in conn:
                rows[gi] |= 1 << group.rank(group.add(g, s))
    else:
        for g in range(n):
            for s in conn:
                rows[g] |= 1 << group.table[g][s]
    return Graph(n, rows)


def r_connection_set(n: int) -> list[tuple[int, int]]:
    out = [(0, 1), (0, 3), (n, 0), (n, 2)]
    for i in range(n):
        out += [(2 * i, 2), (2 * i + 1, 0)]
    return out


def s_connection_set(n: int) -> list[tuple[int, int]]:
    out = [(0, 1), (0, 3)]
    for i in range(n):
        out += [(2 * i + 1, 0), (2 * i + 1, 1), (2 * i + 1, 3)]
    return out


def r_graph(n: int) -> Graph:
    _need(n >= 2, "R_n needs n >= 2")
    _fits(8 * n)
    return cayley_graph(AbelianGroup((2 * n, 4)), r_connection_set(n))


def s_graph(n: int) -> Graph:
    _need(n >= 2, "S_n needs n >= 2")
    _fits(8 * n)
    return cayley_graph(AbelianGroup((2 * n, 4)), s_connection_set(n))


# ------------------------------------------------------------ family specs

FAMILY_KINDS = ("K", "Kmn", "C", "LKnn", "PX", "Q", "R", "S", "Cayley", "E", "P")


@dataclass(frozen=True)
class FamilySpec:
    """A parameterized constructor such as ``Q:7`` or ``Cayley:Z4xZ4:0,1;0,3``."""

    kind: str
    params: tuple[int, ...] = ()
    group: Optional[AbelianGroup] = None
    generators: tuple[tuple[int, ...], ...] = ()

    def build(self) -> Graph:
        k, p = self.kind, self.params
        if k in ("K", "Kmn", "C", "LKnn"):
            return construct_basic(k, *p)
        if k == "E":
            _need(len(p) == 1 and p[0] >= 1, "E needs n >= 1")
            _fits(p[0])
            return empty_graph(p[0])
        if k == "P":
            _need(len(p) == 1, "P needs one parameter n")
            return path(p[0])
        ctor = {"PX": px_graph, "Q": q_graph, "R": r_graph, "S": s_graph}.get(k)
        if ctor is not None:
            _need(len(p) == 1, f"{k} needs one parameter n")
            return ctor(p[0])
        if k == "Cayley":
            return cayley_graph(self.group, self.generators)
        raise BadParameter(f"unknown family kind {k!r}")

    def __str__(self) -> str:
        if self.kind == "Cayley":
            gens = ";".join(",".join(map(str, e)) for e in self.generators)
            return f"Cayley:{self.group}:{gens}"
        return f"{self.kind}:{','.join(map(str, self.params))}"


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip() != "")
    except ValueError:
        raise BadParameter(f"expected comma-separated integers, got {text!r}") from None


def parse_family_spec(text: str) -> FamilySpec:
    text = text.strip()
    kind, sep, rest = text.partition(":")
    if not sep or kind not in FAMILY_KINDS:
        raise BadParameter(f"unrecognized family spec {text!r}")
    if kind != "Cayley":
        return FamilySpec(kind, _ints(rest))
    group_text, sep, gens_text = rest.partition(":")
    if not sep or not re.fullmatch(r"Z\d+(xZ\d+)*", group_text):
        raise BadParameter(f"Cayley spec needs 'Cayley:Zm1xZm2:...', got {text!r}")
    group = AbelianGroup(tuple(int(m) for m in group_text[1:].split("xZ")))
    gens = tuple(_ints(e) for e in gens_text.split(";") if e.strip())
    return FamilySpec("Cayley", (), group, gens)


def build_expression(text: str) -> Graph:
    """Family specs combined by ``*`` (lexicographic product, left to right)
    and a leading ``~`` per factor for complement, e.g. ``C:4*K:2`` or ``~S:2``."""
    result = None
    for part in text.split("*"):
        part = part.strip()
        flip = part.startswith("~")
        g = parse_family_spec(part.lstrip("~")).build()
        if flip:
            g = complement(g)
        result = g if result is None else lexicographic_product(result, g)
    return result


# ------------------------------------------------------------ closure family

def family_seeds(order: int) -> list[Graph]:
    """Members of the base family of exactly the given order."""
    seeds = [complete_graph(order)]
    r = math.isqrt(order)
    if r * r == order and r >= 3:
        seeds.append(rook_graph(r))
    if order % 4 == 0 and order // 4 >= 4:
        seeds.append(q_graph(order // 4))
    if order % 8 == 0 and order // 8 >= 3:
        seeds.append(r_graph(order // 8))
        seeds.append(s_graph(order // 8))
    return seeds


def closure_members(order: int, depth_cap: Optional[int] = None) -> list[Graph]:
    """Isomorphism classes of the given order in the closure of the base
    family under complements and lexicographic products.

    ``depth_cap`` bounds the number of base factors in a product.  Results
    are canonically labeled and sorted by canonical form.
    """
    if order < 1:
        raise BadParameter("order must be >= 1")
    if order > 64:
        raise OrderTooLarge("closure members are generated up to order 64")
    memo: dict[int, dict[bytes, tuple[Graph, int]]] = {}

    def level(d: int) -> dict[bytes, tuple[Graph, int]]:
        if d in memo:
            return memo[d]
        out: dict[bytes, tuple[Graph, int]] = {}

        def add(g: Graph, depth: int) -> None:
            if depth_cap is not None and depth > depth_cap:
                return
            key = canonical_form(g)
            if key not in out or out[key][1] > depth:
                out[key] = (canonical_labeling(g), depth)

        for seed in family_seeds(d):
            add(seed, 1)
            add(complement(seed), 1)
        for a in range(2, d):
            if d % a or d // a < 2:
                continue
            for ga, da in level(a).values():
                for gb, db in level(d // a).values():
                    add(lexicographic_product(ga, gb), da + db)
        memo[d] = out
        return out

    classes = level(order)
    return [classes[k][0] for k in sorted(classes)]


# ------------------------------------------------------------ extremal locals

def has_extremal_local_shape(g: Graph, t: int) -> bool:
    """Co-well-covered, clique number ``t``, and no two ``t``-cliques share ``t-1`` vertices."""
    if clique_number(g) != t:
        return False
    if not is_co_well_covered(g).holds:
        return False
    return near_clique_pair(g) is None


def derive_extremal_locals(k: int, t: int) -> list[Graph]:
    """All graphs of order ``k`` with the extremal local shape for ``t``, one per class."""
    if k > 7:
        raise OrderTooLarge("extremal locals are enumerated for k <= 7")
    _need(k >= 1 and t >= 1, "k and t must be positive")
    found = {}
    for g in iter_graph_classes(k):
        if has_extremal_local_shape(g, t):
            found[canonical_form(g)] = canonical_labeling(g)
    return [found[key] for key in sorted(found)]


def has_universal_vertex(g: Graph) -> bool:
    return any(g.degree(v) == g.order - 1 for v in range(g.order))


def named_local_graphs() -> dict[str, Graph]:
    """The four local graphs T_2, T_3, T_3' and U_2, recovered by exhaustive search."""
    (t2,) = derive_extremal_locals(5, 3)
    sevens = derive_extremal_locals(7, 3)
    t3 = [g for g in sevens if not has_universal_vertex(g)]
    t3p = [g for g in sevens if has_universal_vertex(g)]
    (u2,) = derive_extremal_locals(7, 4)
    if len(t3) != 1 or len(t3p) != 1:
        raise AssertionError("expected one (7,3) class with and one without a universal vertex")
    return {"T2": t2, "T3": t3[0], "T3'": t3p[0], "U2": u2}
