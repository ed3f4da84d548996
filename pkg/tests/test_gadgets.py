import itertools

import pytest

from staruniv.certificates import StarPattern
from staruniv.errors import GraphError, PreconditionError, ResourceError
from staruniv.gadgets import (alternating_sequences, build_G_alpha, build_H1, build_H2, check_boundary,
                              check_claim1, check_claim2, interior_gadgets, is_alternating, level_set,
                              negative_params, relation_R)
from staruniv.graph import cycle_graph
from staruniv.validate import problems_relation

T2222 = StarPattern((2, 2, 2, 2))


def test_negative_params():
    P = negative_params(StarPattern((1, 2, 2, 3)))
    assert (P.m_first_long, P.n_branch, P.p) == (2, 3, 2)
    assert negative_params(T2222).n_branch == 4
    with pytest.raises(PreconditionError, match="p_"):
        negative_params(StarPattern((1, 2, 2)))
    with pytest.raises(PreconditionError):
        negative_params(StarPattern((2, 2)))


def test_h1_h2_sizes():
    assert (build_H1(2, 3).n, build_H1(2, 3).m) == (5, 6)
    assert (build_H1(3, 2).n, build_H1(3, 2).m) == (6, 6)
    with pytest.raises(GraphError):
        build_H1(1, 3)
    assert (build_H2(2).n, build_H2(2).m) == (4, 5)
    assert (build_H2(1).n, build_H2(1).m) == (3, 2)
    for p in range(1, 6):
        assert not build_H2(p).has_edge(0, 1)


def test_alternating_sequences():
    assert alternating_sequences(1) == ["1"]
    assert alternating_sequences(3) == ["112", "121"]
    for L in range(1, 9):
        for w in alternating_sequences(L):
            assert w[0] == "1" and "22" not in w and "111" not in w
    # brute force: blocks of one or two 1s separated by single 2s, starting with 1
    for L in range(1, 11):
        brute = sorted(w for w in ("".join(t) for t in itertools.product("12", repeat=L))
                       if w[0] == "1" and "22" not in w and "111" not in w)
        assert alternating_sequences(L) == brute
    assert not is_alternating("1112") and not is_alternating("2")


def test_reference_instance():
    G = build_G_alpha(T2222, "112", 2, 5)
    assert G.graph.n == 55 and len(G.tree_edges) == 9
    assert [len(level_set(G, i)) for i in range(3)] == [1, 3, 6]
    assert level_set(G, 0) == {0}
    assert all(g["type"] == "H1" for g in G.gadgets)
    assert check_claim1(G)["ok"]
    assert not check_claim1(G, StarPattern((1, 1, 1)))["ok"]
    with pytest.raises(GraphError):
        level_set(G, 3)
    G3 = build_G_alpha(T2222, "112", 3, 5)
    assert {g["type"] for g in G3.gadgets if g["level"] == 2} == {"H2"}
    assert set().union(*(level_set(G3, i) for i in range(4))) == set(G3.tree_vertices)


def test_depth_zero_and_errors():
    G = build_G_alpha(T2222, "1", 0, 5)
    assert G.graph.n == 1 and check_claim1(G)["ok"]
    rep = check_claim2(G)
    assert rep["checked"] == 0 and "no interior edges" in rep["notice"]
    with pytest.raises(PreconditionError):
        build_G_alpha(T2222, "112", 2, 3)
    build_G_alpha(T2222, "112", 2, 3, enforce_N=False)
    with pytest.raises(PreconditionError, match="length"):
        build_G_alpha(T2222, "12", 3, 5)
    with pytest.raises(GraphError):
        build_G_alpha(T2222, "132", 1, 5)
    with pytest.raises(PreconditionError):
        build_G_alpha(StarPattern((1, 1, 2)), "1", 1, 5)


def test_claim2_on_reference_instance():
    G = build_G_alpha(T2222, "112", 2, 5)
    inner = interior_gadgets(G)
    assert inner and all(G.gadgets[i]["level"] == 0 for i in inner)
    rep = check_claim2(G)
    assert rep["ok"] and rep["checked"] == 5 * 2 * len(inner)
    assert rep["skipped"] and "skipped" in rep["notice"]
    assert all(w is not None for w in check_boundary(G).values())
    sampled = check_claim2(G, sample=4, seed=1)
    assert sampled["checked"] == 4 and sampled["ok"]


@pytest.mark.parametrize("T,alpha,depth,N", [
    ((2, 2, 2), "121", 2, 3), ((2, 2, 3), "112", 3, 3), ((2, 2, 2, 2), "1211", 2, 4),
])
def test_claims_small_grid(T, alpha, depth, N):
    G = build_G_alpha(StarPattern(T), alpha, depth, N)
    assert check_claim1(G)["ok"]
    rep = check_claim2(G)
    assert rep["ok"] and rep["checked"] > 0


def test_pole_degree():
    for T, N in [((2, 2, 2), 3), ((2, 2, 2, 2), 5)]:
        G = build_G_alpha(StarPattern(T), "112", 3, N)
        for v in G.tree_vertices:
            if G.full_complement(v):
                assert G.graph.degree(v) >= N


def test_relation_on_gadgets():
    h1 = build_H1(2, 5)
    w = relation_R(h1, 0, 1, 2, 5)
    assert w["form"] == "H1" and problems_relation(h1, 0, 1, w) == []
    w = relation_R(build_H2(2), 0, 1, 2, 5)
    assert w["form"] == "H2" and problems_relation(build_H2(2), 0, 1, w) == []
    assert relation_R(cycle_graph(6), 0, 3, 2, 2) is None
    with pytest.raises(GraphError):
        relation_R(h1, 0, 0, 2, 5)
    G = build_G_alpha(T2222, "112", 2, 5)
    for a, b in G.tree_edges:
        assert relation_R(G.graph, a, b, 2, 5) is not None
    parent = {b: a for a, b in G.tree_edges}
    for v in level_set(G, 2):
        assert relation_R(G.graph, v, parent[parent[v]], 2, 5) is None
    siblings = sorted(level_set(G, 1))
    assert relation_R(G.graph, siblings[0], siblings[1], 2, 5) is None
    G3 = build_G_alpha(StarPattern((2, 2, 2)), "12", 2, 3)
    for (a, b), g in zip(G3.tree_edges, G3.gadgets):
        w = relation_R(G3.graph, a, b, 2, 3)
        assert w is not None and w["form"] == g["type"]


def test_relation_guard():
    with pytest.raises(ResourceError):
        relation_R(build_H1(2, 70), 0, 1, 2, 5)


def test_problems_relation_rejects_bad_witness():
    h1 = build_H1(2, 3)
    bad = {"form": "H1", "p": 2, "t": 3, "paths": [[0, 2, 1], [0, 2, 1], [0, 4, 1]]}
    assert problems_relation(h1, 0, 1, bad)
