"""Certificate validators.

These deliberately use nothing but adjacency lookups on the host so that a
bug in a search engine cannot hide behind the same bug in its checker. Each
``problems_*`` function returns a list of human-readable violations; an empty
list means the certificate is valid.
"""

from __future__ import annotations

import itertools
from collections import deque

from .graph import ColoredGraph


def _split(G):
    if isinstance(G, ColoredGraph):
        return G.graph, G.colors
    return G, None


def _walk_problems(host, path, label):
    out = []
    if len(path) == 0:
        return [f"{label}: empty path"]
    if len(set(path)) != len(path):
        out.append(f"{label}: repeated vertex in {list(path)}")
    for v in path:
        if not (0 <= v < host.n):
            out.append(f"{label}: vertex {v} not in host")
            return out
    for a, b in zip(path, path[1:]):
        if not host.has_edge(a, b):
            out.append(f"{label}: {a}-{b} is not a host edge")
    return out


def _map_problems(pattern, host, vmap):
    out = []
    if len(vmap) != pattern.n:
        out.append(f"vertex map has {len(vmap)} entries for {pattern.n} pattern vertices")
    for v in vmap:
        if not (0 <= v < host.n):
            out.append(f"image {v} not in host")
    if len(set(vmap)) != len(vmap):
        out.append("vertex map is not injective")
    return out


def problems_embedding(pattern, host, emb, colored=False):
    P, pc = _split(pattern)
    H, hc = _split(host)
    vmap = tuple(emb.vertex_map)
    out = _map_problems(P, H, vmap)
    if out:
        return out
    for u, v in P.edges:
        if not H.has_edge(vmap[u], vmap[v]):
            out.append(f"pattern edge {u}-{v} maps to non-edge {vmap[u]}-{vmap[v]}")
    if colored:
        if pc is None or hc is None:
            return out + ["colored check on uncoloured graph"]
        for i, v in enumerate(vmap):
            if pc[i] != hc[v]:
                out.append(f"colour mismatch at pattern vertex {i}")
    return out


def problems_topological(pattern, host, temb, colored=False):
    P, pc = _split(pattern)
    H, hc = _split(host)
    vmap = tuple(temb.vertex_map)
    out = _map_problems(P, H, vmap)
    if out:
        return out
    images = set(vmap)
    want = {tuple(sorted(e)) for e in P.edges}
    have = {tuple(sorted(e)) for e in temb.edge_paths}
    if want != have:
        out.append("edge paths do not match the pattern's edge set")
        return out
    owner = {}
    for (a, b), path in sorted(temb.edge_paths.items()):
        u, v = (a, b) if a < b else (b, a)
        path = tuple(path)
        label = f"edge {u}-{v}"
        out += _walk_problems(H, path, label)
        if len(path) < 2 or {path[0], path[-1]} != {vmap[u], vmap[v]}:
            out.append(f"{label}: path does not join the images {vmap[u]}, {vmap[v]}")
        for x in path[1:-1]:
            if x in images:
                out.append(f"{label}: inner vertex {x} is a branch vertex")
            if x in owner:
                out.append(f"{label}: inner vertex {x} also used by edge {owner[x]}")
            owner[x] = (u, v)
    if colored:
        if pc is None or hc is None:
            return out + ["colored check on uncoloured graph"]
        for i, v in enumerate(vmap):
            if pc[i] != hc[v]:
                out.append(f"colour mismatch at pattern vertex {i}")
    return out


def _connected_within(vertices, nbrs):
    vertices = set(vertices)
    if not vertices:
        return False
    start = min(vertices)
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in nbrs(x):
            if y in vertices and y not in seen:
                seen.add(y)
                queue.append(y)
    return seen == vertices


def problems_minor(pattern, host, model, pruned=False):
    """Check a branch-set model. With ``pruned`` the carrier subgraph must also
    have no degree-1 vertices, tree branch sets and exactly one edge between
    adjacent branch sets (none between non-adjacent ones)."""
    P, _ = _split(pattern)
    H, _ = _split(host)
    out = []
    sets = [tuple(s) for s in model.branch_sets]
    if len(sets) != P.n:
        return [f"{len(sets)} branch sets for {P.n} pattern vertices"]
    owner = {}
    for i, s in enumerate(sets):
        if not s:
            out.append(f"branch set {i} is empty")
        for x in s:
            if not (0 <= x < H.n):
                out.append(f"branch set {i}: vertex {x} not in host")
            elif x in owner:
                out.append(f"vertex {x} in branch sets {owner[x]} and {i}")
            owner[x] = i
    if out:
        return out

    if model.carrier_edges is None:
        adj = {x: [y for y in H.adj[x]] for x in owner}
    else:
        adj = {x: [] for x in owner}
        for a, b in model.carrier_edges:
            if not H.has_edge(a, b):
                out.append(f"carrier edge {a}-{b} is not a host edge")
            if a not in owner or b not in owner:
                out.append(f"carrier edge {a}-{b} leaves the model")
                continue
            adj[a].append(b)
            adj[b].append(a)
        if out:
            return out
    for i, s in enumerate(sets):
        if not _connected_within(s, lambda x: adj.get(x, ())):
            out.append(f"branch set {i} is not connected")
    cross = {}
    for x in owner:
        for y in adj[x]:
            if y in owner and owner[x] < owner[y]:
                cross[(owner[x], owner[y])] = cross.get((owner[x], owner[y]), 0) + 1
    for u, v in P.edges:
        key = (min(u, v), max(u, v))
        if key not in cross:
            out.append(f"no edge between branch sets {key[0]} and {key[1]}")
    if pruned:
        if model.carrier_edges is None:
            return out + ["pruned check needs carrier edges"]
        for key, count in cross.items():
            if not P.has_edge(*key):
                out.append(f"carrier joins non-adjacent branch sets {key}")
            elif count != 1:
                out.append(f"{count} carrier edges between branch sets {key}")
        for x in owner:
            if len(adj[x]) == 1:
                out.append(f"carrier vertex {x} has degree 1")
        for i, s in enumerate(sets):
            inner = sum(1 for x in s for y in adj[x] if y in s) // 2
            if inner != len(s) - 1:
                out.append(f"branch set {i} is not a tree in the carrier")
    return out


def problems_star(host, pattern, witness):
    H, _ = _split(host)
    out = []
    legs = [tuple(leg) for leg in witness.legs]
    if len(legs) != pattern.k:
        return [f"{len(legs)} legs for {pattern.k}"]
    used = {witness.centre}
    if not (0 <= witness.centre < H.n):
        return [f"centre {witness.centre} not in host"]
    for i, (leg, p) in enumerate(zip(legs, pattern.legs)):
        if len(leg) != p + 1:
            out.append(f"leg {i} has length {len(leg) - 1}, expected {p}")
        if not leg or leg[0] != witness.centre:
            out.append(f"leg {i} does not start at the centre")
            continue
        out += _walk_problems(H, leg, f"leg {i}")
        for x in leg[1:]:
            if x in used:
                out.append(f"leg {i} reuses vertex {x}")
            used.add(x)
    return out


def problems_path_family(host, u, v, paths):
    H, _ = _split(host)
    out = []
    inner_seen = set()
    direct = 0
    for i, p in enumerate(paths):
        p = tuple(p)
        out += _walk_problems(H, p, f"path {i}")
        if len(p) < 2 or p[0] != u or p[-1] != v:
            out.append(f"path {i} does not run from {u} to {v}")
        if len(p) == 2:
            direct += 1
        for x in p[1:-1]:
            if x in inner_seen:
                out.append(f"path {i} shares inner vertex {x}")
            inner_seen.add(x)
    if direct > 1:
        out.append("direct edge counted more than once")
    return out


def problems_relation(host, v, w, witness) -> list[str]:
    """Check an ``H1``/``H2`` pole witness as produced by ``relation_R``."""
    G, _ = _split(host)
    out = []
    if witness["form"] == "H1":
        seen = set()
        for P in witness["paths"]:
            if P[0] != v or P[-1] != w or len(P) != witness["p"] + 1:
                out.append(f"path {P} has wrong ends or length")
            if len(set(P)) != len(P):
                out.append(f"path {P} repeats a vertex")
            for a, b in zip(P, P[1:]):
                if not G.has_edge(a, b):
                    out.append(f"{a}-{b} is not an edge")
            if seen & set(P[1:-1]):
                out.append(f"path {P} shares inner vertices")
            seen |= set(P[1:-1])
        if len(witness["paths"]) < witness["t"]:
            out.append("too few paths")
    else:
        ys = witness["ys"]
        if len(set(ys) | {v, w}) != len(ys) + 2:
            out.append("vertices repeat")
        for a, b in itertools.combinations(ys, 2):
            if not G.has_edge(a, b):
                out.append(f"{a}-{b} is not an edge")
        for y in ys:
            for x in (v, w):
                if not G.has_edge(x, y):
                    out.append(f"{x}-{y} is not an edge")
    return out


def is_valid(problems) -> bool:
    return not problems
