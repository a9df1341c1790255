"""Verification suites and open-question scans.

Each suite runs a batch of checks and returns a :class:`SuiteResult`; a
failing check is recorded as a counterexample (graph6 plus a witness
string) rather than raised.  Randomized suites take a seed and are
deterministic given it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Optional

from .enumeration import (
    alpha_omega,
    chromatic_number,
    clique_number,
    is_cis,
    is_co_well_covered,
    is_well_covered,
    maximal_stable_sets,
    near_clique_pair,
    p4_property,
    red_edges,
    rho,
)
from .families import (
    AbelianGroup,
    cayley_graph,
    complete_bipartite,
    cycle,
    derive_extremal_locals,
    has_universal_vertex,
    q_graph,
    r_graph,
    rook_graph,
    s_graph,
)
from .graph import (
    Graph,
    bits,
    complement,
    complete_graph,
    components,
    disjoint_union,
    empty_graph,
    from_edges,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    is_connected,
    lexicographic_product,
    line_graph,
    local_graph,
    profile,
)
from .predicates import is_complete_bipartite, is_regular
from .reduction import (
    factor_lex_complete,
    factor_lex_empty,
    irreducible_quotient,
    is_irreducible,
)
from .smallgraphs import iter_graph_classes
from .symmetry import (
    are_isomorphic,
    automorphism_group,
    find_regular_subgroup,
    is_regular_subgroup,
    is_vertex_transitive,
    vt_cis_check,
)


def fmt_set(s: int) -> str:
    return "{" + ",".join(map(str, bits(s))) + "}"


@dataclass
class Counterexample:
    label: str
    graph6: str = ""
    witness: str = ""


@dataclass
class SuiteResult:
    name: str
    cases_run: int = 0
    cases_passed: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def check(self, ok: bool, label: str, graph: Optional[Graph] = None,
              witness: str = "") -> bool:
        self.cases_run += 1
        if ok:
            self.cases_passed += 1
        else:
            g6 = graph6_encode(graph).decode() if graph is not None else ""
            self.counterexamples.append(Counterexample(label, g6, witness))
        return ok

    def merge(self, other: "SuiteResult") -> "SuiteResult":
        self.cases_run += other.cases_run
        self.cases_passed += other.cases_passed
        self.counterexamples += other.counterexamples
        self.notes += other.notes
        return self

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"suite={self.name} status={status} run={self.cases_run} "
                f"passed={self.cases_passed} counterexamples={len(self.counterexamples)}")

    def render(self) -> str:
        lines = [self.summary()]
        for c in self.counterexamples:
            lines.append(f"counterexample label={c.label} graph6={c.graph6} witness={c.witness}")
        lines += [f"note {n}" for n in self.notes]
        return "\n".join(lines) + "\n"


# ------------------------------------------------------------ corpora

@lru_cache(maxsize=None)
def small_classes(n: int) -> tuple[Graph, ...]:
    return tuple(iter_graph_classes(n))


def small_classes_upto(n: int) -> Iterable[Graph]:
    for k in range(1, n + 1):
        yield from small_classes(k)


def valency7_list() -> list[tuple[str, Graph]]:
    """The connected vertex-transitive CIS graphs of valency at most 7."""
    out = [(f"K_{n}", complete_graph(n)) for n in range(1, 9)]
    out += [(f"K_{{{n},{n}}}", complete_bipartite(n, n)) for n in range(2, 8)]
    out += [("L(K_{3,3})", rook_graph(3)), ("L(K_{4,4})", rook_graph(4))]
    out += [
        ("C_4[K_2]", lexicographic_product(cycle(4), complete_graph(2))),
        ("K_3[E_2]", lexicographic_product(complete_graph(3), empty_graph(2))),
        ("K_3[E_3]", lexicographic_product(complete_graph(3), empty_graph(3))),
        ("K_4[E_2]", lexicographic_product(complete_graph(4), empty_graph(2))),
        ("K_{3,3}[K_2]", lexicographic_product(complete_bipartite(3, 3), complete_graph(2))),
    ]
    out += [(f"Q_{n}", q_graph(n)) for n in range(4, 11)]
    return out


def random_circulant(rng: random.Random, max_order: int = 24) -> tuple[str, Graph]:
    m = rng.randint(3, max_order)
    half = list(range(1, m // 2 + 1))
    chosen = [d for d in half if rng.random() < 0.5] or [rng.choice(half)]
    conn = sorted({d % m for d in chosen} | {-d % m for d in chosen})
    return f"Circ({m};{','.join(map(str, conn))})", cayley_graph(AbelianGroup((m,)), [(d,) for d in conn])


def vt_corpus(seed: int = 0, circulants: int = 50) -> list[tuple[str, Graph]]:
    base = valency7_list()
    corpus = list(base)
    corpus += [(f"co-{name}", complement(g)) for name, g in base]
    factors = [("K_2", complete_graph(2)), ("K_3", complete_graph(3)), ("C_4", cycle(4)),
               ("C_5", cycle(5)), ("K_{3,3}", complete_bipartite(3, 3))]
    for na, a in factors:
        for nb, b in factors:
            corpus.append((f"{na}[{nb}]", lexicographic_product(a, b)))
    rng = random.Random(seed)
    corpus += [random_circulant(rng) for _ in range(circulants)]
    return corpus


def random_graph(rng: random.Random, n: int, p: Optional[float] = None) -> Graph:
    if p is None:
        p = rng.random()
    return from_edges(n, [(i, j) for j in range(1, n) for i in range(j) if rng.random() < p])


def random_relabel(rng: random.Random, g: Graph) -> Graph:
    perm = list(range(g.order))
    rng.shuffle(perm)
    return g.relabel(perm)


@lru_cache(maxsize=None)
def _cis_pool(max_order: int) -> tuple[Graph, ...]:
    return tuple(g for g in small_classes_upto(max_order) if is_cis(g).is_cis)


def mixed_graph(rng: random.Random, max_order: int) -> Graph:
    """Half CIS classes (randomly relabeled), half uniform random graphs."""
    if rng.random() < 0.5:
        pool = _cis_pool(min(max_order, 6))
        return random_relabel(rng, rng.choice(pool))
    return random_graph(rng, rng.randint(1, max_order))


def blow_up(rng: random.Random, x: Graph, max_order: int) -> Graph:
    """Replace each vertex of ``x`` by a stable set of random size."""
    sizes = [1] * x.order
    while sum(sizes) < max_order and rng.random() < 0.7:
        sizes[rng.randrange(x.order)] += 1
    offsets = [sum(sizes[:i]) for i in range(x.order)]
    edges = []
    for u, v in x.edges():
        for a in range(sizes[u]):
            for b in range(sizes[v]):
                edges.append((offsets[u] + a, offsets[v] + b))
    return from_edges(sum(sizes), edges)


def _cis(g: Graph) -> bool:
    return is_cis(g).is_cis


def _witness(g: Graph) -> str:
    cert = is_cis(g)
    if cert.is_cis:
        return "cis"
    return f"clique={fmt_set(cert.clique)} stable={fmt_set(cert.stable_set)}"


# ------------------------------------------------------------ suites

def suite_families(seed: int = 0, long: bool = False) -> SuiteResult:
    res = SuiteResult("families")
    for n in range(1, 9):
        g = rook_graph(n)
        a, w = alpha_omega(g)
        p = profile(g)
        res.check(_cis(g) and g.order == n * n and p.is_regular and p.valency == 2 * (n - 1)
                  and a == w == n, f"L(K_{{{n},{n}}})", g, f"alpha={a} omega={w} deg={p.valency}")
        if n >= 2:
            res.check(are_isomorphic(line_graph(complete_bipartite(n, n)), g),
                      f"line_graph(K_{{{n},{n}}}) = rook({n})", g)
    for n in range(4, 17):
        g = q_graph(n)
        a, w = alpha_omega(g)
        p = profile(g)
        res.check(_cis(g) and p.is_regular and p.valency == 7 and a == n and w == 4
                  and g.order == 4 * n and p.is_connected and is_irreducible(g)
                  and is_vertex_transitive(g), f"Q_{n}", g, f"alpha={a} omega={w}")
    q3 = q_graph(3)
    res.check(not _cis(q3), "Q_3 not CIS", q3, _witness(q3))
    for n in range(2, 7):
        g = r_graph(n)
        a, w = alpha_omega(g)
        p = profile(g)
        res.check(_cis(g) and p.is_regular and p.valency == 2 * n + 3 and a == 2 * n and w == 4
                  and g.order == 8 * n and p.is_connected, f"R_{n}", g, f"alpha={a} omega={w}")
    for n in range(2, 6):
        g = s_graph(n)
        a, w = alpha_omega(g)
        p = profile(g)
        res.check(_cis(g) and p.is_regular and p.valency == 3 * n + 2 and a == 2 * n and w == 4
                  and g.order == 8 * n and p.is_connected, f"S_{n}", g, f"alpha={a} omega={w}")
    r2, q4, s2c = r_graph(2), q_graph(4), complement(s_graph(2))
    res.check(are_isomorphic(r2, q4) and are_isomorphic(q4, s2c), "R_2 = Q_4 = co-S_2", q4)
    return res


def suite_vt_cis_equivalence(seed: int = 0, long: bool = False) -> SuiteResult:
    res = SuiteResult("vt-cis-equivalence")
    for name, g in vt_corpus(seed):
        if not res.check(is_vertex_transitive(g), f"{name} vertex-transitive", g):
            continue
        fast = vt_cis_check(g).is_cis
        slow = is_cis(g)
        res.check(fast == slow.is_cis, f"{name} size criterion agrees with CIS", g,
                  f"size_criterion={fast} cis={slow.is_cis}")
        if slow.is_cis:
            res.check(is_regular(g) and is_well_covered(g).holds and is_co_well_covered(g).holds,
                      f"{name} CIS implies regular, well-covered, co-well-covered", g)
    return res


def law_complement(rng: random.Random, cases: int, max_order: int = 8) -> SuiteResult:
    res = SuiteResult("complement-law")
    for i in range(cases):
        g = mixed_graph(rng, max_order)
        res.check(_cis(g) == _cis(complement(g)), f"complement #{i}", g)
    return res


def law_disjoint_union(rng: random.Random, cases: int, max_order: int = 6) -> SuiteResult:
    res = SuiteResult("union-law")
    for i in range(cases):
        a, b = mixed_graph(rng, max_order), mixed_graph(rng, max_order)
        u = disjoint_union(a, b)
        res.check(_cis(u) == (_cis(a) and _cis(b)), f"union #{i}", u)
        res.check(_cis(u) == all(_cis(induced_subgraph(u, c)) for c in components(u)),
                  f"union components #{i}", u)
    return res


def law_lex_product(rng: random.Random, cases: int, max_order: int = 5) -> SuiteResult:
    res = SuiteResult("lex-law")
    for i in range(cases):
        a, b = mixed_graph(rng, max_order), mixed_graph(rng, max_order)
        prod = lexicographic_product(a, b)
        res.check(_cis(prod) == (_cis(a) and _cis(b)), f"lex #{i}", prod,
                  f"A={graph6_encode(a).decode()} B={graph6_encode(b).decode()}")
    return res


def law_quotient(rng: random.Random, cases: int, max_order: int = 8) -> SuiteResult:
    res = SuiteResult("quotient-law")
    for i in range(cases):
        if rng.random() < 0.5:
            g = mixed_graph(rng, max_order)
        else:
            g = blow_up(rng, mixed_graph(rng, 4), max_order)
        q = irreducible_quotient(g)
        res.check(_cis(g) == _cis(q.quotient), f"quotient #{i}", g)
        res.check(irreducible_quotient(q.quotient).quotient == q.quotient
                  and is_irreducible(q.quotient), f"quotient idempotent #{i}", g)
        fact = factor_lex_empty(g)
        if fact is not None:
            x, n = fact
            res.check(are_isomorphic(lexicographic_product(x, empty_graph(n)), g),
                      f"X[E_n] rebuilds #{i}", g)
    return res


def suite_closure_laws(seed: int = 0, long: bool = False, cases: int = 500) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("closure-laws")
    for law in (law_complement, law_disjoint_union, law_lex_product, law_quotient):
        part = law(rng, cases)
        res.notes.append(part.summary())
        res.merge(part)
    return res


def suite_lex_product(seed: int = 0, long: bool = False) -> SuiteResult:
    res = SuiteResult("lex-product")
    return res.merge(law_lex_product(random.Random(seed), 500))


def suite_quotient(seed: int = 0, long: bool = False) -> SuiteResult:
    res = SuiteResult("quotient")
    res.merge(law_quotient(random.Random(seed), 500))
    for name, g in _vt_membership_corpus():
        q = irreducible_quotient(g).quotient
        rhs = is_vertex_transitive(q) and factor_lex_empty(g) is not None
        res.check(is_vertex_transitive(g) == rhs, f"{name} VT iff quotient VT and X[E_n]", g)
    return res


def _vt_membership_corpus() -> list[tuple[str, Graph]]:
    out = [(f"class6#{i}", g) for i, g in enumerate(small_classes_upto(6))]
    out += [(name, g) for name, g in valency7_list()]
    out += [("K_{3,3}[E_2]", lexicographic_product(complete_bipartite(3, 3), empty_graph(2))),
            ("C_5[E_3]", lexicographic_product(cycle(5), empty_graph(3))),
            ("K_{2,3}", complete_bipartite(2, 3))]
    return out


def suite_coollemma(seed: int = 0, long: bool = False) -> SuiteResult:
    """Irreducible CIS graphs have no two maximum cliques sharing omega-1 vertices."""
    res = SuiteResult("coollemma")
    top = 8 if long else 7
    for g in _classes_for(top, long):
        if not is_irreducible(g) or not _cis(g):
            continue
        pair = near_clique_pair(g)
        res.check(pair is None, "irreducible CIS has no near clique pair", g,
                  "" if pair is None else f"{fmt_set(pair[0])} {fmt_set(pair[1])}")
    for name, g in valency7_list():
        if is_irreducible(g):
            res.check(near_clique_pair(g) is None, f"{name} no near clique pair", g)
    return res


def _classes_for(top: int, long: bool) -> Iterable[Graph]:
    for k in range(1, top + 1):
        if k <= 7:
            yield from small_classes(k)
        else:
            yield from iter_graph_classes(k, allow_long=long)


def suite_triangle_free(seed: int = 0, long: bool = False) -> SuiteResult:
    """Connected CIS graphs with omega = 2 are complete bipartite; irreducible ones are K_2."""
    res = SuiteResult("triangle-free")
    top = 8 if long else 7
    seen = 0
    for g in _classes_for(top, long):
        if not is_connected(g) or clique_number(g) > 2 or not _cis(g):
            continue
        seen += 1
        if g.order == 1:
            res.check(True, "K_1 is the only connected graph with omega=1", g)
            continue
        res.check(is_complete_bipartite(g), "connected triangle-free CIS is K_{m,n}", g)
        if is_irreducible(g):
            res.check(g.order == 2, "connected irreducible triangle-free CIS is K_2", g)
    res.notes.append(f"connected CIS graphs with omega<=2 and n<={top}: {seen}")
    for m in range(1, 9):
        for n in range(m, 9):
            g = complete_bipartite(m, n)
            res.check(_cis(g), f"K_{{{m},{n}}} is CIS", g)
    return res


def suite_omega3_small(seed: int = 0, long: bool = False) -> SuiteResult:
    """Small-order consequences around the clique-number-3 classification."""
    res = SuiteResult("omega3-small")
    top = 8 if long else 7
    allowed = [complete_graph(1), complete_graph(2), complete_graph(3)]
    for g in _classes_for(top, long):
        cis = _cis(g)
        if cis:
            ok, path4 = p4_property(g)
            res.check(ok, "CIS implies P4 property", g, f"path={path4}")
        if (cis and is_connected(g) and is_irreducible(g) and clique_number(g) <= 3
                and is_well_covered(g).holds):
            res.check(any(g == h for h in allowed), "irreducible well-covered CIS omega<=3", g)
        if g.order <= 7:
            _check_intersection_lemma(res, g)
            _check_lemma_new(res, g)
    lk33 = rook_graph(3)
    res.check(_cis(lk33) and is_irreducible(lk33) and is_well_covered(lk33).holds
              and clique_number(lk33) == 3 and is_connected(lk33),
              "L(K_{3,3}) meets the hypotheses (order 9, outside the scan)", lk33)
    for name, g in valency7_list():
        _check_lemma_new(res, g, name)
    return res


def _check_intersection_lemma(res: SuiteResult, g: Graph) -> None:
    if any(not row for row in g.adj) or not is_well_covered(g).holds:
        return
    r = rho(g)
    stables = maximal_stable_sets(g).members
    ok = True
    detail = ""
    for s in stables:
        for v in range(g.order):
            if s >> v & 1 or (s & g.adj[v]).bit_count() != r:
                continue
            x = (1 << v) | (s & ~g.adj[v])
            hit = s & g.adj[v]
            for s2 in stables:
                if s2 & x != x:
                    continue
                w = s2 & ~(s | (1 << v))
                good = ((s2 & ~s).bit_count() == r and w.bit_count() == r - 1
                        and not w & g.closed_neighborhood(v)
                        and all(g.adj[u] & hit == hit for u in bits(w)))
                if not good:
                    ok = False
                    detail = f"S={fmt_set(s)} v={v} S'={fmt_set(s2)}"
                    break
            if not ok:
                break
        if not ok:
            break
    res.check(ok, "intersection lemma", g, detail)


def _check_lemma_new(res: SuiteResult, g: Graph, name: str = "") -> None:
    if not is_connected(g) or not is_regular(g) or g.num_edges() == g.order * (g.order - 1) // 2:
        return
    if not (is_well_covered(g).holds and is_co_well_covered(g).holds):
        return
    k = g.degree(0)
    w = clique_number(g)
    res.check(3 * w <= 2 * (k + 1), f"{name} omega <= 2(k+1)/3".strip(), g, f"omega={w} k={k}")


def suite_locals(seed: int = 0, long: bool = False) -> SuiteResult:
    res = SuiteResult("locals")
    expected = {(5, 3): 1, (6, 3): 1, (7, 3): 2, (7, 4): 1}
    found = {}
    for (k, t), count in expected.items():
        found[(k, t)] = derive_extremal_locals(k, t)
        res.check(len(found[(k, t)]) == count, f"({k},{t}) has {count} classes", None,
                  f"found {len(found[(k, t)])}")
    six = found[(6, 3)]
    two_k3 = disjoint_union(complete_graph(3), complete_graph(3))
    res.check(len(six) == 1 and are_isomorphic(six[0], two_k3), "(6,3) class is 2K_3")
    sevens = found[(7, 3)]
    universal = [g for g in sevens if has_universal_vertex(g)]
    res.check(len(universal) == 1, "exactly one (7,3) class has a universal vertex")
    t3 = [g for g in sevens if not has_universal_vertex(g)]
    u2 = found[(7, 4)]
    res.check(len(u2) == 1 and sum(u2[0].degree(v) == 6 for v in range(7)) == 1,
              "U_2 has a unique universal vertex", u2[0] if u2 else None)
    t2 = found[(5, 3)]
    res.check(len(t2) == 1 and sum(t2[0].degree(v) == 4 for v in range(5)) == 1,
              "T_2 has a unique universal vertex", t2[0] if t2 else None)
    if len(t3) == 1:
        for n in range(4, 11):
            g = q_graph(n)
            ok = all(are_isomorphic(local_graph(g, v), t3[0]) for v in range(g.order))
            res.check(ok, f"every local graph of Q_{n} is T_3", g)
    _check_two_clique_locals(res)
    return res


def _local_is_two_cliques(g: Graph) -> bool:
    for v in range(g.order):
        if not g.adj[v]:
            return False
        loc = local_graph(g, v)
        comps = components(loc)
        if len(comps) != 2 or not all(loc.is_clique(c) for c in comps):
            return False
    return True


def _check_two_clique_locals(res: SuiteResult) -> None:
    pool = list(small_classes_upto(7)) + [g for _, g in vt_corpus(0, circulants=0)]
    pool += [rook_graph(n) for n in range(2, 9)]
    rooks = {n * n: rook_graph(n) for n in range(1, 12)}
    for g in pool:
        if not is_connected(g) or not _local_is_two_cliques(g) or not _cis(g):
            continue
        target = rooks.get(g.order)
        res.check(target is not None and are_isomorphic(g, target),
                  "CIS with locals 2 cliques is L(K_{n,n})", g)


def suite_valency7_positive(seed: int = 0, long: bool = False) -> SuiteResult:
    res = SuiteResult("valency7-positive")
    for name, g in valency7_list():
        p = profile(g)
        ok = (p.is_connected and p.is_regular and p.valency <= 7
              and is_vertex_transitive(g) and _cis(g))
        res.check(ok, name, g, f"valency={p.valency}")
    c4k2 = lexicographic_product(cycle(4), complete_graph(2))
    fact = factor_lex_complete(c4k2)
    res.check(fact is not None and fact[1] == 2 and are_isomorphic(fact[0], cycle(4)),
              "C_4[K_2] factors as Z[K_2] with Z = C_4", c4k2)
    k33k2 = lexicographic_product(complete_bipartite(3, 3), complete_graph(2))
    fact = factor_lex_complete(k33k2)
    res.check(fact is not None and fact[1] == 2 and are_isomorphic(fact[0], complete_bipartite(3, 3)),
              "K_{3,3}[K_2] factors as Z[K_2] with Z = K_{3,3}", k33k2)
    for n in range(4, 11):
        g = q_graph(n)
        red = red_edges(g)
        deg = [0] * g.order
        red_adj = [0] * g.order
        for u, v in red:
            deg[u] += 1
            deg[v] += 1
            red_adj[u] |= 1 << v
            red_adj[v] |= 1 << u
        res.check(all(d == 2 for d in deg), f"Q_{n} every vertex on two red edges", g)
        red_graph = Graph(g.order, red_adj)
        blocks = sorted(components(red_graph))
        res.check(blocks == [0b1111 << (4 * i) for i in range(n)],
                  f"Q_{n} red components are the blocks", g)
    return res


def suite_q_noncayley(seed: int = 0, long: bool = False) -> SuiteResult:
    res = SuiteResult("q-noncayley")
    for n in (5, 7):
        g = q_graph(n)
        grp = automorphism_group(g)
        grp.materialize()
        res.notes.append(f"|Aut(Q_{n})| = {grp.order}")
        found = find_regular_subgroup(grp)
        res.check(found is None, f"Aut(Q_{n}) has no regular subgroup", g)
    for name, g in (("C_5", cycle(5)), ("K_4", complete_graph(4)), ("Q_4", q_graph(4))):
        grp = automorphism_group(g)
        found = find_regular_subgroup(grp)
        res.check(found is not None and is_regular_subgroup(g.order, found),
                  f"Aut({name}) has a regular subgroup", g)
    return res


# ------------------------------------------------------------ open questions

def explore_q1(max_order: int = 7, long: bool = False) -> SuiteResult:
    """CIS graphs with alpha * omega < n (none would mean no violation in range)."""
    res = SuiteResult("q1")
    scanned = 0
    for g in _classes_for(max_order, long):
        if not _cis(g):
            continue
        scanned += 1
        a, w = alpha_omega(g)
        res.check(a * w >= g.order, "alpha*omega >= n", g, f"alpha={a} omega={w}")
    res.notes.append(f"q1: scanned {scanned} CIS classes with n<={max_order}; "
                     f"findings={len(res.counterexamples)} (a scan, not a proof)")
    return res


def explore_q2(q_range: Iterable[int] = range(4, 9)) -> SuiteResult:
    """Chromatic number against clique number for vertex-transitive CIS family members."""
    res = SuiteResult("q2")
    for n in q_range:
        g = q_graph(n)
        chi = chromatic_number(g)
        w = clique_number(g)
        res.notes.append(f"q2: Q_{n} chi={chi} omega={w}")
        res.check(chi == w, f"Q_{n} chi = omega", g, f"chi={chi} omega={w}")
    return res


def explore_q3(max_order: int = 7, long: bool = False) -> SuiteResult:
    """Regular CIS graphs that are, with their complements, connected, well-covered and
    irreducible, but are not vertex-transitive."""
    res = SuiteResult("q3")
    candidates = 0
    for g in _classes_for(max_order, long):
        h = complement(g)
        if not (is_regular(g) and is_connected(g) and is_connected(h)
                and is_irreducible(g) and is_irreducible(h)):
            continue
        if not (is_well_covered(g).holds and is_well_covered(h).holds and _cis(g)):
            continue
        candidates += 1
        res.check(is_vertex_transitive(g), "candidate is vertex-transitive", g)
    res.notes.append(f"q3: {candidates} candidates with n<={max_order}; "
                     f"non-VT findings={len(res.counterexamples)} (a scan, not a proof)")
    return res


def suite_open_questions(seed: int = 0, long: bool = False) -> SuiteResult:
    res = SuiteResult("open-questions")
    top = 8 if long else 7
    for part in (explore_q1(top, long), explore_q2(), explore_q3(top, long)):
        res.merge(part)
    return res


def suite_codec(seed: int = 0, long: bool = False, randoms: int = 1000) -> SuiteResult:
    res = SuiteResult("codec")
    corpus = [g for _, g in vt_corpus(seed)] + list(small_classes_upto(5))
    rng = random.Random(seed)
    for _ in range(randoms):
        corpus.append(random_graph(rng, rng.randint(1, 100)))
    for g in corpus:
        res.check(graph6_decode(graph6_encode(g)) == g, "graph6 round trip", g)
    res.check(graph6_encode(complete_graph(4)) == b"C~", "K_4 encodes as C~")
    res.check(graph6_decode(b"C~") == complete_graph(4), "C~ decodes to K_4")
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "families": suite_families,
    "vt-cis-equivalence": suite_vt_cis_equivalence,
    "lex-product": suite_lex_product,
    "quotient": suite_quotient,
    "coollemma": suite_coollemma,
    "triangle-free": suite_triangle_free,
    "locals": suite_locals,
    "omega3-small": suite_omega3_small,
    "valency7-positive": suite_valency7_positive,
    "q-noncayley": suite_q_noncayley,
    "open-questions": suite_open_questions,
    "closure-laws": suite_closure_laws,
    "codec": suite_codec,
}


def run_suite(name: str, seed: int = 0, long: bool = False) -> SuiteResult:
    return SUITES[name](seed=seed, long=long)
