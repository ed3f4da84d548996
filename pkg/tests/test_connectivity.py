import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from staruniv.connectivity import (block_tree, has_path_of_length, independent_paths,
                                   is_two_connected, long_cycle, longest_path,
                                   longest_path_bounds)
from staruniv.errors import PreconditionError
from staruniv.gadgets import build_H1
from staruniv.generators import grid, random_two_connected
from staruniv.graph import Graph, complete_graph, cycle_graph, path_graph
from staruniv.validate import problems_path_family

import oracles
from conftest import connected_graphs, graphs, to_nx


def test_block_tree_examples():
    bowtie = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    bt = block_tree(bowtie)
    assert len(bt.blocks) == 2 and list(bt.cutvertices) == [2]
    bt = block_tree(path_graph(3))
    assert len(bt.blocks) == 3 and len(bt.cutvertices) == 2
    bt = block_tree(cycle_graph(5))
    assert len(bt.blocks) == 1 and not bt.cutvertices


@given(graphs(max_n=10))
def test_blocks_match_networkx(G):
    bt = block_tree(G)
    g = to_nx(G)
    ours = {frozenset(B) for B in bt.blocks if len(B) > 1}
    theirs = {frozenset(c) for c in nx.biconnected_components(g)}
    assert ours == theirs
    assert set(bt.cutvertices) == set(nx.articulation_points(g))
    # every edge lies in exactly one block
    for a, b in G.edges:
        assert sum(1 for B in bt.blocks if a in B and b in B) == 1
    # block-cutvertex incidence is a forest
    t = nx.Graph()
    t.add_edges_from((("c", a), ("b", i)) for a, i in bt.tree_edges)
    assert t.number_of_nodes() == 0 or nx.is_forest(t)


def test_independent_paths_examples():
    fam = independent_paths(complete_graph(4), 0, 1, 10)
    assert len(fam) == 3 and problems_path_family(complete_graph(4), 0, 1, fam.paths) == []
    assert len(independent_paths(path_graph(5), 0, 5, 10)) == 1
    assert len(independent_paths(build_H1(2, 5), 0, 1, 10)) == 5
    assert len(independent_paths(complete_graph(6), 0, 1, 2)) == 2


@given(graphs(min_n=2, max_n=8), st.data())
def test_menger_duality(G, data):
    u, v = data.draw(st.lists(st.integers(0, G.n - 1), min_size=2, max_size=2, unique=True))
    if G.has_edge(u, v):
        return
    fam = independent_paths(G, u, v)
    assert problems_path_family(G, u, v, fam.paths) == []
    assert len(fam) == oracles.min_separator(G, u, v)


@given(graphs(min_n=2, max_n=10), st.data())
def test_path_counts_match_networkx(G, data):
    u, v = data.draw(st.lists(st.integers(0, G.n - 1), min_size=2, max_size=2, unique=True))
    g = to_nx(G)
    want = len(list(nx.node_disjoint_paths(g, u, v))) if nx.has_path(g, u, v) else 0
    assert len(independent_paths(G, u, v)) == want


@given(connected_graphs(max_n=9))
def test_longest_path_exact(G):
    length, path, exact = longest_path(G)
    assert exact and length == oracles.longest_path_length(G) == len(path) - 1


@settings(max_examples=30)
@given(connected_graphs(max_n=12))
def test_longest_path_bounds_bracket_truth(G):
    b = longest_path_bounds(G)
    truth = oracles.longest_path_length(G)
    assert b.lower <= truth <= b.upper
    assert len(b.path) - 1 == b.lower


def test_has_path_of_length_on_long_paths():
    found, path, conclusive = has_path_of_length(path_graph(3000), 3000)
    assert found and conclusive and len(path) == 3001
    found, _, conclusive = has_path_of_length(path_graph(3000), 3001)
    assert not found and conclusive


def test_long_cycle_examples():
    with pytest.raises(PreconditionError, match="no path of length 4"):
        long_cycle(complete_graph(4), 2)
    cyc = long_cycle(complete_graph(4), 2, strict=False)
    assert len(cyc) >= 2
    assert len(long_cycle(cycle_graph(10), 3)) == 10
    g = grid(4, 4)
    c = long_cycle(g, 3)
    assert len(c) >= 3 and oracles.longest_cycle_length(g) >= len(c)
    with pytest.raises(PreconditionError, match="not 2-connected"):
        long_cycle(path_graph(9), 3)


def test_long_cycle_property_random():
    rng = random.Random(3)
    done = 0
    while done < 30:
        G = random_two_connected(rng.randint(5, 12), rng)
        if not is_two_connected(G):
            continue
        L = oracles.longest_path_length(G)
        n = int(L ** 0.5)
        if n < 2:
            continue
        c = long_cycle(G, n)
        assert len(c) >= n
        assert all(G.has_edge(a, b) for a, b in zip(c, c[1:] + c[:1]))
        done += 1
