import random

import pytest
from hypothesis import given, settings, strategies as st

from staruniv.certificates import StarPattern
from staruniv.containment import contains_star
from staruniv.errors import GraphError, PreconditionError, ResourceError
from staruniv.generators import random_max_degree
from staruniv.graph import ColoredGraph, Graph, cycle_graph, path_graph
from staruniv.skfree import (FIGURE1, IncidenceEnumeration, build_prefix, embed_skfree,
                             required_prefix)
from staruniv.validate import problems_topological


def omega(G, colors=None):
    return ColoredGraph(G, colors or [0] * G.n, "omega")


def _nbrs(P, name):
    core = P.realize()
    x = core.index[name]
    return {core.names[y] for y in core.graph.adj[x]}


def test_figure1_table_adjacency():
    P = build_prefix(4, 3, 5, IncidenceEnumeration.figure1(4))
    want = {1: {0, 1}, 2: {0, 2}, 3: {0, 1}, 4: {1}, 5: {0, 1, 2}}
    assert P.realized_attachments() == [1, 2, 3, 4, 5]
    for j, rays in want.items():
        assert _nbrs(P, ("v", j)) == {("r", i, j) for i in rays}
    # the first three entries are all the caption lists and fit k = 3
    P3 = build_prefix(3, 3, 5, [e for e in FIGURE1[:3]])
    assert _nbrs(P3, ("v", 1)) == {("r", 0, 1), ("r", 1, 1)}
    assert _nbrs(P3, ("v", 2)) == {("r", 0, 2), ("r", 2, 2)}
    assert _nbrs(P3, ("v", 3)) == {("r", 0, 3), ("r", 1, 3)}


def test_figure1_entry_five_needs_k4():
    with pytest.raises(GraphError):
        IncidenceEnumeration.figure1(3)


def test_empty_prefix_is_disjoint_paths():
    G = build_prefix(4, 3, 5).graph.graph
    assert G.n == 18 and G.m == 15 and len(G.components()) == 3


def test_extension_adds_one_vertex():
    tab = IncidenceEnumeration(4, FIGURE1[:2])
    before = build_prefix(4, 3, 6, tab).graph.graph
    tab.append({0, 1, 2}, 0)
    after = build_prefix(4, 3, 6, tab).graph.graph
    assert after.n == before.n + 1 and after.m == before.m + 3


def test_table_rules():
    tab = IncidenceEnumeration(4)
    with pytest.raises(GraphError):
        tab.append({0, 1, 2, 3}, 0)
    j = tab.request({0, 1}, 2)
    assert j == 1 and tab[1] == (frozenset({0, 1}), 2)
    assert tab.request({0, 1}, 2) == 1
    assert tab.request({0, 1}, 2, used={1}) == 2
    assert tab.request({5}, 0, grow=False) is None
    with pytest.raises(IndexError):
        tab[0]
    IncidenceEnumeration(4, locally_finite=True).append(range(9), 0)


def test_embed_c4():
    G = omega(cycle_graph(4))
    res = embed_skfree(G, 4)
    emb = res.embedding
    host = res.host.graph
    assert len(set(emb.vertex_map)) == 4 and len(emb.edge_paths) == 4
    assert problems_topological(G, host, emb, colored=True) == []
    assert all(host.graph.degree(x) == 2 for x in emb.vertex_map)


def test_embed_p2_mixed_colours():
    G = omega(path_graph(2), [3, 0, 7])
    res = embed_skfree(G, 4)
    host = res.host.graph
    assert [host.graph.degree(x) for x in res.embedding.vertex_map] == [1, 2, 1]
    assert problems_topological(G, host, res.embedding, colored=True) == []


def test_required_prefix_examples():
    assert required_prefix(omega(cycle_graph(4)), 4) == (4, 4)
    assert required_prefix(omega(path_graph(2)), 4)[0] == 2
    G = Graph(11, [(0, i) for i in range(1, 4)] + [(i, i + 1) for i in range(3, 10)])
    assert required_prefix(omega(G), 5)[0] == 10


def test_embed_errors():
    with pytest.raises(PreconditionError, match="not connected"):
        embed_skfree(omega(Graph(4, [(0, 1), (2, 3)])), 4)
    with pytest.raises(PreconditionError):
        embed_skfree(omega(path_graph(1)), 4)
    with pytest.raises(PreconditionError) as exc:
        embed_skfree(omega(Graph(5, [(0, i) for i in range(1, 5)])), 4)
    assert exc.value.certificate["star"]["centre"] == 0
    small = build_prefix(4, 2, 2)
    with pytest.raises(ResourceError) as exc:
        embed_skfree(omega(cycle_graph(4)), 4, prefix=small, auto_extend=False)
    assert exc.value.certificate == {"R": 4, "L": 4}


def test_touched_only_is_induced_subprefix():
    G = omega(cycle_graph(6))
    full = embed_skfree(G, 4)
    part = embed_skfree(G, 4, touched_only=True)
    assert part.host.graph.n < full.host.graph.n
    assert problems_topological(G, part.host.graph, part.embedding, colored=True) == []
    for a, b in part.host.graph.graph.edges:
        na, nb = part.host.names[a], part.host.names[b]
        assert full.host.graph.graph.has_edge(full.host.index[na], full.host.index[nb])


@st.composite
def skfree_graphs(draw):
    k = draw(st.sampled_from([4, 5, 6]))
    n = draw(st.integers(3, 30))
    seed = draw(st.integers(0, 10 ** 6))
    rng = random.Random(seed)
    G = random_max_degree(n, k, rng)
    colors = [rng.randrange(3) for _ in range(n)]
    return k, ColoredGraph(G, colors, "omega")


@settings(max_examples=50)
@given(skfree_graphs())
def test_embedding_is_valid_and_degree_preserving(data):
    k, G = data
    res = embed_skfree(G, k)
    host = res.host.graph
    emb = res.embedding
    assert problems_topological(G, host, emb, colored=True) == []
    for v, x in enumerate(emb.vertex_map):
        assert host.graph.degree(x) == G.graph.degree(v)
    # distinct edges ride distinct rays
    rays = [{res.host.names[x][1] for x in p[1:-1]} for p in emb.edge_paths.values()]
    assert all(len(r) == 1 for r in rays)
    assert len({next(iter(r)) for r in rays}) == len(rays)
    assert len(set(res.index_of.values())) == G.n
    assert host.graph.max_degree() <= k - 1


def test_k3_prefix_is_not_s3_free():
    """Ray vertices next to an attachment reach degree 3, so the k = 3 prefix
    contains S_3; recorded rather than asserted away."""
    res = embed_skfree(omega(cycle_graph(5)), 3)
    G = res.host.graph.graph
    assert G.max_degree() == 3
    assert contains_star(G, StarPattern.star(3)) is not None


def test_locally_finite_mode():
    star = Graph(8, [(0, i) for i in range(1, 8)])
    res = embed_skfree(omega(star), 3, locally_finite=True)
    assert problems_topological(omega(star), res.host.graph, res.embedding, colored=True) == []
    assert res.host.graph.graph.degree(res.embedding.vertex_map[0]) == 7
