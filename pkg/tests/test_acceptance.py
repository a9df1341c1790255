"""Acceptance gate: one test per criterion, each timed against its budget.

Run ``pytest tests/test_acceptance.py`` (the PASS/FAIL lines appear in the
terminal summary) or ``python3 tests/test_acceptance.py``.
"""

import time


from cisgraphs.enumeration import alpha_omega, chromatic_number, clique_number, is_cis
from cisgraphs.families import (
    cycle,
    derive_extremal_locals,
    has_universal_vertex,
    q_graph,
    r_graph,
    rook_graph,
    s_graph,
)
from cisgraphs.graph import (
    complement,
    complete_graph,
    disjoint_union,
    graph6_decode,
    graph6_encode,
    local_graph,
    profile,
)
from cisgraphs.reduction import is_irreducible
from cisgraphs.smallgraphs import count_classes
from cisgraphs.suites import (
    explore_q1,
    explore_q2,
    explore_q3,
    suite_closure_laws,
    suite_codec,
    suite_coollemma,
    suite_omega3_small,
    suite_triangle_free,
    suite_vt_cis_equivalence,
    valency7_list,
)
from cisgraphs.symmetry import (
    are_isomorphic,
    automorphism_group,
    canonical_form,
    find_regular_subgroup,
    is_regular_subgroup,
    is_vertex_transitive,
)

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []


def gate(number, title, budget):
    def wrap(fn):
        def test():
            start = time.perf_counter()
            failure = None
            try:
                fn()
            except AssertionError as e:
                failure = e
            elapsed = time.perf_counter() - start
            ok = failure is None and elapsed < budget
            line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'} {title} ({elapsed:.1f}s, budget {budget}s)"
            ACCEPTANCE_LINES.append(line)
            print(line)
            if failure is not None:
                raise failure
            assert elapsed < budget, f"{title} took {elapsed:.1f}s"
        test.__name__ = fn.__name__
        return test
    return wrap


@gate(1, "families", 300)
def test_families():
    for n in range(1, 9):
        g = rook_graph(n)
        p = profile(g)
        assert is_cis(g).is_cis and g.order == n * n
        assert p.is_regular and p.valency == 2 * (n - 1)
        assert alpha_omega(g) == (n, n)
    for n in range(4, 17):
        g = q_graph(n)
        p = profile(g)
        assert is_cis(g).is_cis and p.is_regular and p.valency == 7
        assert alpha_omega(g) == (n, 4)
        assert is_irreducible(g) and is_vertex_transitive(g)
    assert not is_cis(q_graph(3)).is_cis
    for n in range(2, 7):
        g = r_graph(n)
        p = profile(g)
        assert is_cis(g).is_cis and p.is_regular and p.valency == 2 * n + 3
        assert alpha_omega(g) == (2 * n, 4)
    for n in range(2, 6):
        g = s_graph(n)
        p = profile(g)
        assert is_cis(g).is_cis and p.is_regular and p.valency == 3 * n + 2


@gate(2, "isomorphism anchor", 10)
def test_isomorphism_anchor():
    a = canonical_form(r_graph(2))
    assert a == canonical_form(q_graph(4)) == canonical_form(complement(s_graph(2)))


@gate(3, "extremal locals", 300)
def test_locals():
    found = {kt: derive_extremal_locals(*kt) for kt in ((5, 3), (6, 3), (7, 3), (7, 4))}
    assert [len(v) for v in found.values()] == [1, 1, 2, 1]
    assert are_isomorphic(found[(6, 3)][0], disjoint_union(complete_graph(3), complete_graph(3)))
    with_universal = [g for g in found[(7, 3)] if has_universal_vertex(g)]
    assert len(with_universal) == 1
    (t3,) = [g for g in found[(7, 3)] if not has_universal_vertex(g)]
    q5 = q_graph(5)
    assert all(are_isomorphic(local_graph(q5, v), t3) for v in range(q5.order))


@gate(4, "valency-7 positive direction", 120)
def test_valency7_positive():
    names = [name for name, _ in valency7_list()]
    assert len(names) == 8 + 6 + 2 + 5 + 7
    for name, g in valency7_list():
        p = profile(g)
        assert p.is_connected, name
        assert p.is_regular and p.valency <= 7, name
        assert is_vertex_transitive(g), name
        assert is_cis(g).is_cis, name


@gate(5, "vertex-transitive CIS equivalence", 300)
def test_vt_cis_equivalence():
    res = suite_vt_cis_equivalence(seed=0)
    assert res.cases_run >= 4 * 28 + 25 + 50
    assert res.passed, res.render()


@gate(6, "closure laws", 300)
def test_closure_laws():
    res = suite_closure_laws(seed=0, cases=500)
    assert res.passed, res.render()
    assert res.cases_run >= 4 * 500


@gate(7, "exhaustive small-order theorems", 900)
def test_small_order_theorems():
    assert count_classes(7) == 1044
    for suite in (suite_triangle_free, suite_omega3_small, suite_coollemma):
        res = suite(seed=0)
        assert res.passed, res.render()
    q1 = explore_q1(7)
    assert q1.passed, q1.render()


@gate(8, "non-Cayley check", 120)
def test_non_cayley():
    grp = automorphism_group(q_graph(5))
    assert len(grp.materialize()) == 320
    assert find_regular_subgroup(grp) is None
    for g in (cycle(5), complete_graph(4)):
        gens = find_regular_subgroup(automorphism_group(g))
        assert gens is not None and is_regular_subgroup(g.order, gens)


@gate(9, "open-question scans", 600)
def test_open_questions():
    q1, q3 = explore_q1(7), explore_q3(7)
    assert q1.passed and q3.passed
    q2 = explore_q2(range(4, 9))
    assert q2.passed
    for n in range(4, 9):
        assert chromatic_number(q_graph(n)) == clique_number(q_graph(n)) == 4


@gate(10, "graph6 codec", 10)
def test_codec():
    res = suite_codec(seed=0, randoms=1000)
    assert res.passed, res.render()
    assert graph6_encode(complete_graph(4)) == b"C~"
    assert graph6_decode("C~") == complete_graph(4)


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    raise SystemExit(1 if failed else 0)
