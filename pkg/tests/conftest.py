import networkx as nx
import pytest
from hypothesis import settings, strategies as st

from staruniv.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def to_nx(G):
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges)
    return g


def from_nx(g):
    g = nx.convert_node_labels_to_integers(g)
    return Graph(g.number_of_nodes(), g.edges())


@st.composite
def graphs(draw, min_n=0, max_n=10, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    if not pairs:
        return Graph(n)
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def connected_graphs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    edges = {(p, i) for i, p in enumerate(parents, start=1)}
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in edges]
    if pairs:
        extra = draw(st.lists(st.sampled_from(pairs), max_size=min(len(pairs), 2 * n)))
        edges |= set(extra)
    return Graph(n, edges)


@pytest.fixture
def petersen():
    from staruniv.generators import petersen as pet
    return pet()


# one line per acceptance criterion, printed after the run
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
