"""Exact tools for CIS graphs: every maximal clique meets every maximal stable set."""

from .enumeration import (
    alpha_omega,
    chromatic_number,
    clique_number,
    is_cis,
    is_co_well_covered,
    is_well_covered,
    maximal_cliques,
    maximal_stable_sets,
    stability_number,
)
from .families import (
    build_expression,
    closure_members,
    cycle,
    complete_bipartite,
    q_graph,
    r_graph,
    rook_graph,
    s_graph,
)
from .graph import (
    Graph,
    complement,
    complete_graph,
    empty_graph,
    from_edges,
    graph6_decode,
    graph6_encode,
    lexicographic_product,
)
from .reduction import irreducible_quotient, is_irreducible
from .symmetry import (
    are_isomorphic,
    automorphism_group,
    canonical_form,
    is_vertex_transitive,
    vt_cis_check,
)

__version__ = "0.1.0"
