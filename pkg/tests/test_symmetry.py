import pytest
from hypothesis import given, strategies as st

from cisgraphs.errors import NotVertexTransitive, SearchBudgetExceeded
from cisgraphs.families import complete_bipartite, cycle, path, q_graph, rook_graph
from cisgraphs.graph import complement, complete_graph, from_edges, graph6_decode, line_graph
from cisgraphs.symmetry import (
    are_isomorphic,
    automorphism_group,
    canonical_form,
    canonical_labeling,
    compose,
    find_regular_subgroup,
    format_permutation,
    generate_group,
    inverse,
    is_automorphism,
    is_regular_subgroup,
    is_vertex_transitive,
    orbits_of,
    parse_permutation,
    transitivity,
    vt_cis_check,
)

from oracles import naive_automorphism_count, naive_isomorphic
from strategies import graphs


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return from_edges(10, outer + inner + spokes)


@given(graphs(max_order=7))
def test_group_order_matches_oracle(g):
    grp = automorphism_group(g)
    assert grp.order == naive_automorphism_count(g)
    assert all(is_automorphism(g, p) for p in grp.generators)


@given(graphs(max_order=9), st.randoms(use_true_random=False))
def test_canonical_form_is_label_invariant(g, r):
    perm = list(range(g.order))
    r.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_form(g) == canonical_form(h)
    assert canonical_labeling(g) == canonical_labeling(h)
    assert are_isomorphic(g, canonical_labeling(g))


@given(graphs(min_order=4, max_order=6), graphs(min_order=4, max_order=6))
def test_isomorphism_matches_oracle(a, b):
    assert are_isomorphic(a, b) == naive_isomorphic(a, b)
    assert (canonical_form(a) == canonical_form(b)) == naive_isomorphic(a, b)


@pytest.mark.parametrize("g,order", [
    (cycle(5), 10),
    (complete_graph(6), 720),
    (petersen(), 120),
    (complete_bipartite(3, 3), 72),
    (q_graph(4), 128),
    (q_graph(5), 320),
    (q_graph(6), 768),
    (q_graph(8), 4096),
    (rook_graph(8), 2 * 40320 ** 2),
])
def test_known_group_orders(g, order):
    assert automorphism_group(g).order == order


def test_group_materialization_and_orbits():
    grp = automorphism_group(path(4))
    assert grp.order == 2
    assert sorted(map(sorted, grp.orbits)) == [[0, 3], [1, 2]]
    elems = grp.materialize()
    assert len(elems) == 2 and tuple(range(4)) in elems


def test_permutation_helpers():
    p, q = (1, 2, 0), (0, 2, 1)
    assert compose(p, inverse(p)) == (0, 1, 2)
    assert compose(p, q) == tuple(p[q[i]] for i in range(3))
    assert parse_permutation(format_permutation(p)) == p
    assert len(generate_group(3, [p, q])) == 6
    assert orbits_of(4, [(1, 0, 2, 3)]) == [frozenset({0, 1}), frozenset({2}), frozenset({3})]


def test_transitivity():
    assert is_vertex_transitive(petersen())
    assert is_vertex_transitive(q_graph(6))
    assert not is_vertex_transitive(path(3))
    t = transitivity(complete_bipartite(2, 3))
    assert not t.is_vertex_transitive and len(t.orbits) == 2


def test_vt_cis_check():
    assert vt_cis_check(q_graph(5)).is_cis
    cert = vt_cis_check(cycle(6))
    assert not cert.is_cis and cert.clique is not None
    with pytest.raises(NotVertexTransitive):
        vt_cis_check(path(3))


def test_budget():
    with pytest.raises(SearchBudgetExceeded):
        automorphism_group(petersen(), budget=1)


def test_regular_subgroups():
    # the Petersen graph is vertex-transitive but not a Cayley graph
    assert find_regular_subgroup(automorphism_group(petersen())) is None
    for g in (cycle(5), complete_graph(4), q_graph(4), complete_bipartite(3, 3)):
        gens = find_regular_subgroup(automorphism_group(g))
        assert gens is not None and is_regular_subgroup(g.order, gens)
    assert find_regular_subgroup(automorphism_group(path(3))) is None
    assert not is_regular_subgroup(4, [(1, 0, 2, 3)])


def test_line_graph_group():
    # Aut(L(K_{4,4})) = S_4 wr S_2
    assert automorphism_group(line_graph(complete_bipartite(4, 4))).order == 2 * 24 * 24


def test_isomorphism_shortcuts():
    assert not are_isomorphic(cycle(6), complement(cycle(6)))
    assert not are_isomorphic(cycle(5), cycle(6))
    assert are_isomorphic(graph6_decode("Bg"), path(3))
