import pytest
from hypothesis import given

from cisgraphs.enumeration import (
    CLIQUES,
    STABLE_SETS,
    CisCertificate,
    alpha_omega,
    chromatic_number,
    clique_number,
    is_cis,
    is_co_well_covered,
    is_maximal_clique,
    is_maximal_stable_set,
    is_well_covered,
    maximal_cliques,
    maximal_stable_sets,
    near_clique_pair,
    p4_property,
    red_edges,
    rho,
    verify_cis_certificate,
    verify_cover_witness,
)
from cisgraphs.errors import (
    AllVerticesIsolated,
    EnumerationLimitExceeded,
    IsolatedVertex,
    OrderTooLargeForExactColoring,
)
from cisgraphs.families import complete_bipartite, cycle, path, q_graph, rook_graph
from cisgraphs.graph import bits, complement, complete_graph, empty_graph, from_edges

from oracles import naive_chromatic_number, naive_is_cis, naive_maximal_cliques, naive_maximal_stable_sets
from strategies import graphs


def as_sets(fam):
    return {frozenset(bits(s)) for s in fam.members}


@given(graphs(max_order=9))
def test_maximal_cliques_match_oracle(g):
    assert as_sets(maximal_cliques(g)) == naive_maximal_cliques(g)
    assert as_sets(maximal_stable_sets(g)) == naive_maximal_stable_sets(g)


@given(graphs(max_order=9))
def test_families_are_sorted_and_maximal(g):
    fam = maximal_cliques(g)
    assert list(fam.members) == sorted(fam.members)
    assert all(is_maximal_clique(g, c) for c in fam.members)
    assert all(is_maximal_stable_set(g, s) for s in maximal_stable_sets(g).members)


@given(graphs(max_order=8))
def test_cis_matches_oracle_and_certificate_verifies(g):
    cert = is_cis(g)
    assert cert.is_cis == naive_is_cis(g)
    assert verify_cis_certificate(g, cert)


@given(graphs(max_order=8))
def test_cover_witnesses_verify(g):
    assert verify_cover_witness(g, is_well_covered(g), STABLE_SETS)
    assert verify_cover_witness(g, is_co_well_covered(g), CLIQUES)
    sizes = {len(s) for s in naive_maximal_stable_sets(g)}
    assert is_well_covered(g).holds == (len(sizes) == 1)


@given(graphs(max_order=7))
def test_chromatic_number_matches_oracle(g):
    assert chromatic_number(g) == naive_chromatic_number(g)


def test_p4_is_not_cis_with_witness():
    cert = is_cis(path(4))
    assert not cert.is_cis
    assert {cert.clique, cert.stable_set} == {0b0110, 0b1001}


def test_c6_witness():
    # {0,3} is a maximal stable set missing the maximal clique {1,2}
    assert is_maximal_stable_set(cycle(6), 0b1001)
    assert verify_cis_certificate(cycle(6), CisCertificate(False, 0b110, 0b1001))
    assert not is_cis(cycle(6)).is_cis


def test_bad_certificates_rejected():
    g = cycle(6)
    assert not verify_cis_certificate(g, CisCertificate(False, 0b11, 0b1001))
    assert not verify_cis_certificate(g, CisCertificate(False, 0b110, 0b101))


def test_known_values():
    assert alpha_omega(rook_graph(4)) == (4, 4)
    assert alpha_omega(q_graph(6)) == (6, 4)
    assert is_cis(complete_bipartite(2, 3)).is_cis
    assert not is_well_covered(complete_bipartite(2, 3)).holds
    assert chromatic_number(cycle(5)) == 3
    assert chromatic_number(q_graph(5)) == 4


def test_limit_exceeded():
    assert maximal_stable_sets(cycle(9), limit=2).truncated
    with pytest.raises(EnumerationLimitExceeded):
        is_cis(cycle(9), limit=2)
    with pytest.raises(ValueError):
        maximal_cliques(cycle(4), limit=0)


def test_coloring_order_cap():
    with pytest.raises(OrderTooLargeForExactColoring):
        chromatic_number(empty_graph(65))


def test_rho():
    # in C_5 every maximal stable set avoiding v meets N(v) once
    assert rho(cycle(5)) == 1
    assert rho(complete_bipartite(3, 3), 0) == 3
    with pytest.raises(IsolatedVertex):
        rho(from_edges(3, [(0, 1)]), 2)
    with pytest.raises(AllVerticesIsolated):
        rho(empty_graph(3))


def test_p4_property():
    ok, witness = p4_property(path(4))
    assert not ok and witness in ((0, 1, 2, 3), (3, 2, 1, 0))
    assert p4_property(q_graph(5)) == (True, None)


@given(graphs(max_order=8))
def test_cis_implies_p4_property(g):
    if is_cis(g).is_cis:
        assert p4_property(g)[0]


def test_red_edges_and_near_cliques():
    # two triangles sharing the edge 1-2
    g = from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    assert red_edges(g) == [(1, 2)]
    assert near_clique_pair(g) == (0b0111, 0b1110)
    assert near_clique_pair(complete_graph(4)) is None


@given(graphs(max_order=8))
def test_complement_swaps_families(g):
    assert as_sets(maximal_cliques(complement(g))) == as_sets(maximal_stable_sets(g))
    assert clique_number(complement(g)) == alpha_omega(g)[0]
