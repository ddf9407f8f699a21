from __future__ import annotations

import hypothesis.strategies as st
from hypothesis import settings

from chipfire.divisors import Divisor
from chipfire.graphs import Multigraph

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@st.composite
def multigraphs(draw, max_vertices: int = 6, max_multiplicity: int = 3, max_extra: int = 3):
    """Connected multigraph: random spanning tree plus extra parallel edges."""
    n = draw(st.integers(1, max_vertices))
    edges: dict[tuple[int, int], int] = {}
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges[(u, v)] = draw(st.integers(1, max_multiplicity))
    if n >= 2:
        extras = draw(
            st.lists(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
                max_size=max_extra,
            )
        )
        for a, b in extras:
            if a != b:
                key = (min(a, b), max(a, b))
                edges[key] = edges.get(key, 0) + 1
    return Multigraph.from_edges(n, [(u, v, m) for (u, v), m in edges.items()])


@st.composite
def graph_with_divisor(draw, lo: int = -3, hi: int = 4, **graph_kwargs):
    graph = draw(multigraphs(**graph_kwargs))
    values = draw(
        st.lists(
            st.integers(lo, hi),
            min_size=graph.vertex_count,
            max_size=graph.vertex_count,
        )
    )
    return graph, Divisor(graph, values)


@st.composite
def graph_with_effective_divisor(draw, hi: int = 3, **graph_kwargs):
    graph = draw(multigraphs(**graph_kwargs))
    values = draw(
        st.lists(
            st.integers(0, hi),
            min_size=graph.vertex_count,
            max_size=graph.vertex_count,
        )
    )
    return graph, Divisor(graph, values)


@st.composite
def proper_subsets(draw, n: int):
    """Non-empty proper subset of range(n); requires n >= 2."""
    members = draw(
        st.lists(st.integers(0, n - 1), min_size=1, unique=True, max_size=n - 1)
    )
    return frozenset(members)
