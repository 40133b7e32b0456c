from itertools import combinations

from hypothesis import strategies as st

from clustered_hadwiger.domain.models.graph import Graph


@st.composite
def graphs(draw, min_vertices: int = 0, max_vertices: int = 7) -> Graph:
    """Simple graphs on 0..n-1, each possible edge drawn independently."""
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges([e for e, kept in zip(pairs, keep) if kept], range(n))


@st.composite
def graphs_with_subset(draw, min_vertices: int = 1, max_vertices: int = 7):
    g = draw(graphs(min_vertices, max_vertices))
    if not g.order:
        return g, frozenset()
    z = draw(st.frozensets(st.sampled_from(g.sorted_vertices)))
    return g, z


@st.composite
def graphs_with_edge(draw, min_vertices: int = 2, max_vertices: int = 7):
    g = draw(graphs(min_vertices, max_vertices).filter(lambda h: h.size > 0))
    edge = draw(st.sampled_from(sorted(g.edges)))
    return g, edge
