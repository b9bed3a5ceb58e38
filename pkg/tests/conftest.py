import networkx as nx
import pytest
from hypothesis import strategies as st

from somborkit.graph import Graph, from_mask


@st.composite
def graphs(draw, min_order=1, max_order=9):
    n = draw(st.integers(min_order, max_order))
    pairs = n * (n - 1) // 2
    return from_mask(n, draw(st.integers(0, (1 << pairs) - 1)))


@st.composite
def connected_graphs(draw, min_order=2, max_order=9):
    # random spanning tree plus random extra edges, so nothing is rejected
    n = draw(st.integers(min_order, max_order))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    extra = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    edges |= set(extra)
    perm = draw(st.permutations(range(n)))
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


@pytest.fixture
def nxify():
    return to_nx


_ACCEPTANCE: list[str] = []


@pytest.fixture
def acceptance_lines():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)
