from hypothesis import strategies as st

from cisgraphs.graph import from_edges


@st.composite
def graphs(draw, min_order=1, max_order=8):
    n = draw(st.integers(min_order, max_order))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def permutations_of(draw, n):
    return draw(st.permutations(list(range(n))))
