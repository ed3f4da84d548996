"""Brute-force reference implementations used only by the tests."""

import itertools

import networkx as nx
from networkx.algorithms import isomorphism as iso

from staruniv.graph import Graph, subdivide_edge

from conftest import to_nx


def monomorphic(pattern, host):
    if pattern.n > host.n:
        return False
    return iso.GraphMatcher(to_nx(host), to_nx(pattern)).subgraph_is_monomorphic()


def subdivisions(P, extra):
    """Every subdivision of ``P`` using at most ``extra`` new vertices."""
    edges = P.edge_list()
    for total in range(extra + 1):
        for split in itertools.product(range(total + 1), repeat=len(edges)):
            if sum(split) != total:
                continue
            G = P
            for e, t in zip(edges, split):
                # subdividing renumbers nothing, so original edge keys stay valid
                G = subdivide_edge(G, e, t)
            yield G


def topological(P, H):
    if P.n > H.n or P.m > H.m:
        return False
    return any(monomorphic(S, H) for S in subdivisions(P, H.n - P.n))


def minor(P, H):
    """Exhaustive branch-set assignment (host vertices map to a pattern vertex or nothing)."""
    if P.n == 0:
        return True
    if P.n > H.n:
        return False
    g = to_nx(H)
    for assign in itertools.product(range(-1, P.n), repeat=H.n):
        sets = [[x for x in range(H.n) if assign[x] == i] for i in range(P.n)]
        if any(not s for s in sets):
            continue
        if any(not nx.is_connected(g.subgraph(s)) for s in sets):
            continue
        if all(any(assign[b] == v for a in sets[u] for b in H.adj[a]) for u, v in P.edges):
            return True
    return False


def min_separator(G, u, v):
    """Smallest vertex set avoiding u, v whose removal separates them (u, v non-adjacent)."""
    others = [x for x in range(G.n) if x not in (u, v)]
    g = to_nx(G)
    for size in range(len(others) + 1):
        for S in itertools.combinations(others, size):
            h = g.copy()
            h.remove_nodes_from(S)
            if not nx.has_path(h, u, v):
                return size
    return len(others)


def longest_path_length(G, vertices=None):
    allowed = set(range(G.n)) if vertices is None else set(vertices)
    best = 0

    def go(x, on, length):
        nonlocal best
        best = max(best, length)
        for y in G.adj[x]:
            if y in allowed and y not in on:
                on.add(y)
                go(y, on, length + 1)
                on.discard(y)

    for s in allowed:
        go(s, {s}, 0)
    return best


def longest_cycle_length(G):
    best = 0
    for s in range(G.n):
        def go(x, on, length):
            nonlocal best
            for y in G.adj[x]:
                if y == s and length >= 2:
                    best = max(best, length + 1)
                elif y > s and y not in on:
                    on.add(y)
                    go(y, on, length + 1)
                    on.discard(y)
        go(s, {s}, 0)
    return best
