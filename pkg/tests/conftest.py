from __future__ import annotations

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from unicore.gen import fixture
from unicore.graph import Graph, parse_graph

# brute-force comparisons make per-example timing meaningless
settings.register_profile("unicore", deadline=None)
settings.load_profile("unicore")


def graph_of(text: str) -> Graph:
    return parse_graph(text.replace(",", "\n"))


def cycle(n: int) -> Graph:
    return Graph([str(i) for i in range(1, n + 1)], [(str(i), str(i % n + 1)) for i in range(1, n + 1)])


@pytest.fixture
def fig1():
    return fixture("fig1_G")


@pytest.fixture
def fig2():
    return fixture("fig2_G")


@pytest.fixture
def fig2_tx():
    return fixture("fig2_Tx")


@pytest.fixture
def paw():
    return graph_of("a b,b c,c a,a d")


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 12) -> Graph:
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    return Graph([f"v{i}" for i in range(n)], [(f"v{p}", f"v{i}") for i, p in enumerate(parents, start=1)])


@st.composite
def forests(draw, max_n: int = 12) -> Graph:
    t = draw(trees(max_n=max_n))
    keep = [e for e in t.sorted_edges() if draw(st.booleans()) or draw(st.booleans())]
    return Graph(t.vertices, keep)


@st.composite
def unicyclic_graphs(draw, max_n: int = 12) -> Graph:
    t = draw(trees(min_n=3, max_n=max_n))
    verts = list(t.vertices)
    missing = [(u, v) for i, u in enumerate(verts) for v in verts[i + 1:] if not t.has_edge(u, v)]
    extra = draw(st.sampled_from(missing))
    return Graph(t.vertices, list(t.edges) + [extra])


@st.composite
def unicyclic_forests(draw, max_n: int = 12) -> Graph:
    half = max(3, max_n // 2)
    a = draw(unicyclic_graphs(max_n=half))
    b = draw(st.one_of(trees(max_n=half), unicyclic_graphs(max_n=half)))
    rename = {v: f"w{v}" for v in b.vertices}
    return Graph(
        list(a.vertices) + [rename[v] for v in b.vertices],
        list(a.edges) + [(rename[u], rename[v]) for u, v in b.edges],
    )


def supported_graphs(max_n: int = 12):
    return st.one_of(trees(max_n=max_n), forests(max_n=max_n), unicyclic_graphs(max_n=max_n), unicyclic_forests(max_n=max_n))
