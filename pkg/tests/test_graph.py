import pytest
from hypothesis import given, strategies as st

from cisgraphs.errors import (
    AsymmetricAdjacency,
    Graph6Error,
    LoopEdge,
    MalformedHeader,
    NoEdges,
    NonzeroPadding,
    OrderTooLarge,
    TruncatedBody,
    VertexOutOfRange,
)
from cisgraphs.families import complete_bipartite, cycle, path, rook_graph
from cisgraphs.graph import (
    Graph,
    complement,
    complete_graph,
    components,
    disjoint_union,
    empty_graph,
    from_edge_list,
    from_edges,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    is_connected,
    lexicographic_product,
    line_graph,
    local_graph,
    profile,
    to_edge_list,
)
from cisgraphs.symmetry import are_isomorphic

from oracles import edge_set, naive_graph6
from strategies import graphs


def test_rejects_bad_edges():
    with pytest.raises(LoopEdge):
        from_edges(3, [(1, 1)])
    with pytest.raises(VertexOutOfRange):
        from_edges(3, [(0, 3)])
    with pytest.raises(OrderTooLarge):
        empty_graph(129)
    with pytest.raises(AsymmetricAdjacency):
        Graph.from_rows([0b10, 0])


def test_graph_is_immutable_and_hashable():
    g = cycle(5)
    with pytest.raises(AttributeError):
        g.order = 3
    assert hash(g) == hash(cycle(5))
    assert g == cycle(5) and g != path(5)


def test_edges_are_sorted_pairs():
    g = from_edges(4, [(3, 1), (0, 2), (2, 1)])
    assert g.edges() == [(0, 2), (1, 2), (1, 3)]


def test_complement_and_union():
    g = path(4)
    assert complement(complement(g)) == g
    assert edge_set(complement(g)) == {(0, 2), (0, 3), (1, 3)}
    u = disjoint_union(complete_graph(2), complete_graph(3))
    assert components(u) == [0b00011, 0b11100]
    assert not is_connected(u)


def test_lexicographic_product_shape():
    g = lexicographic_product(cycle(4), complete_graph(2))
    assert g.order == 8 and set(g.degrees()) == {5}
    # vertices in the same block are adjacent iff adjacent in the inner factor
    assert g.has_edge(0, 1) and not g.has_edge(0, 4) and g.has_edge(0, 2)


def test_line_graph():
    assert are_isomorphic(line_graph(complete_bipartite(3, 3)), rook_graph(3))
    assert are_isomorphic(line_graph(cycle(5)), cycle(5))
    with pytest.raises(NoEdges):
        line_graph(empty_graph(3))


def test_induced_and_local():
    g = cycle(6)
    h = induced_subgraph(g, [0, 1, 2])
    assert h == path(3)
    assert local_graph(complete_graph(4), 0) == complete_graph(3)
    assert local_graph(cycle(5), 0) == empty_graph(2)


def test_profile():
    p = profile(complete_bipartite(2, 3))
    assert p.degrees == (3, 3, 2, 2, 2) and not p.is_regular and p.valency is None
    assert profile(cycle(7)).valency == 2


# hand-derived graph6 strings
@pytest.mark.parametrize("text,n,edges", [
    ("@", 1, []),
    ("A_", 2, [(0, 1)]),
    ("Bg", 3, [(0, 1), (1, 2)]),
    ("C~", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
])
def test_graph6_known_strings(text, n, edges):
    g = from_edges(n, edges)
    assert graph6_encode(g).decode() == text
    assert graph6_decode(text) == g


@given(graphs(max_order=20))
def test_graph6_matches_reference_encoder(g):
    assert graph6_encode(g).decode() == naive_graph6(g.order, g.edges())


@given(graphs(max_order=12))
def test_graph6_round_trip(g):
    assert graph6_decode(graph6_encode(g)) == g


@pytest.mark.parametrize("n", [62, 63, 64, 100, 128])
def test_graph6_order_boundary(n):
    g = from_edges(n, [(i, (i * 7 + 3) % n) for i in range(n) if (i * 7 + 3) % n != i])
    code = graph6_encode(g)
    assert (code[0] == 126) == (n >= 63)
    assert graph6_decode(code) == g


def test_graph6_header_accepted():
    assert graph6_decode(">>graph6<<C~") == complete_graph(4)


@pytest.mark.parametrize("bad,exc", [
    ("", MalformedHeader),
    ("C", TruncatedBody),
    ("C~~", Graph6Error),
    ("Bh", NonzeroPadding),
    ("C!", Graph6Error),
])
def test_graph6_rejects_malformed(bad, exc):
    with pytest.raises(exc):
        graph6_decode(bad)


@given(graphs(max_order=10))
def test_edge_list_round_trip(g):
    assert from_edge_list(to_edge_list(g)) == g


@given(graphs(max_order=8), st.randoms(use_true_random=False))
def test_relabel_preserves_edge_count(g, r):
    perm = list(range(g.order))
    r.shuffle(perm)
    h = g.relabel(perm)
    assert h.num_edges() == g.num_edges()
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())
