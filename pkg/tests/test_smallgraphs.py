from itertools import combinations

import pytest

from cisgraphs.errors import OrderTooLarge
from cisgraphs.graph import from_edges
from cisgraphs.smallgraphs import (
    code_to_graph,
    count_classes,
    graph_to_code,
    iter_class_codes,
    iter_graph_classes,
    pair_index,
)
from cisgraphs.symmetry import canonical_form


def brute_force_classes(n):
    pairs = list(combinations(range(n), 2))
    keys = set()
    for mask in range(1 << len(pairs)):
        keys.add(canonical_form(from_edges(n, [e for k, e in enumerate(pairs) if mask >> k & 1])))
    return keys


def test_class_counts():
    # graphs on n unlabeled vertices
    assert [count_classes(n) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_classes_match_canonical_dedup(n):
    ours = {canonical_form(g) for g in iter_graph_classes(n)}
    assert ours == brute_force_classes(n)


def test_orbit_sizes_sum_to_all_labeled_graphs():
    for n in range(1, 7):
        assert sum(size for _, size in iter_class_codes(n)) == 2 ** (n * (n - 1) // 2)


def test_code_round_trip():
    g = from_edges(5, [(0, 1), (1, 4), (2, 3)])
    assert code_to_graph(5, graph_to_code(g)) == g
    assert pair_index(0, 1) == 0 and pair_index(1, 2) == 2


def test_order_cap():
    with pytest.raises(OrderTooLarge):
        list(iter_class_codes(8))
