"""Edge blow-up, the independent-path closure ``Γ*`` at a finite threshold,
degree-2 suppression and the pruned-model pipeline that turns a minor into a
topological minor of minimum degree 3.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .certificates import MinorModel, TopologicalEmbedding
from .connectivity import block_tree, independent_paths
from .containment import contains_minor
from .errors import GraphError, PreconditionError, StructuralError
from .graph import Graph, plain


@dataclass(frozen=True)
class BlownUpGraph:
    """``base`` with every edge replaced by ``copies`` internally disjoint
    paths of length 2. ``subdivider_index[(e, i)]`` is the ``i``-th middle
    vertex of base edge ``e`` (edges keyed ``(u, v)``, ``u < v``)."""

    base: Graph
    copies: int
    graph: Graph
    subdivider_index: dict = field(hash=False, repr=False)


def blowup(G, N: int) -> BlownUpGraph:
    G = plain(G)
    if N < 1:
        raise GraphError("copies must be at least 1")
    idx = {}
    edges = []
    nxt = G.n
    for u, v in G.edge_list():
        for i in range(N):
            idx[(u, v), i] = nxt
            edges += [(u, nxt), (nxt, v)]
            nxt += 1
    return BlownUpGraph(G, N, Graph(nxt, edges), idx)


def derive_gamma_star(G, t: int) -> Graph:
    """Join ``v`` and ``w`` iff ``G`` has at least ``t`` independent ``v``-``w`` paths."""
    G = plain(G)
    if t < 1:
        raise GraphError("threshold must be at least 1")
    edges = []
    if t == 1:
        for comp in G.components():
            edges += [(a, b) for i, a in enumerate(comp) for b in comp[i + 1:]]
        return Graph(G.n, edges)
    # two or more independent paths force both ends into one block, and every
    # such path family stays inside that block
    bt = block_tree(G)
    for B in bt.blocks:
        if len(B) < 3:
            continue
        if t == 2:
            edges += [(a, b) for i, a in enumerate(B) for b in B[i + 1:]]
            continue
        H, old = G.induced_subgraph(B)
        cand = [i for i in range(H.n) if len(H.adj[i]) >= t]
        for x, a in enumerate(cand):
            for b in cand[x + 1:]:
                if len(independent_paths(H, a, b, t)) >= t:
                    edges.append((old[a], old[b]))
    return Graph(G.n, edges)


# ---------------------------------------------------------------------------
# suppression
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Suppression:
    """Result of suppressing degree-2 vertices: ``graph`` lives on ``kept``
    (new id ``i`` is old vertex ``kept[i]``); ``threads[(i, j)]`` is the old
    path behind edge ``ij``."""

    graph: Graph
    kept: tuple[int, ...]
    threads: dict = field(hash=False, repr=False)


def suppress_with_map(G) -> Suppression:
    G = plain(G)
    deg = [len(a) for a in G.adj]
    for comp in G.components():
        if len(comp) > 1 and all(deg[v] == 2 for v in comp):
            raise StructuralError("component is a bare cycle", comp)
    kept = [v for v in range(G.n) if deg[v] != 2]
    new = {v: i for i, v in enumerate(kept)}
    threads = {}
    seen = set()
    for a in kept:
        for first in G.adj[a]:
            if (a, first) in seen:
                continue
            chain = [a, first]
            while deg[chain[-1]] == 2:
                x = chain[-1]
                nxt = G.adj[x][0] if G.adj[x][0] != chain[-2] else G.adj[x][1]
                chain.append(nxt)
            seen.add((chain[-1], chain[-2]))
            seen.add((a, first))
            b = chain[-1]
            if a == b:
                raise StructuralError("suppression would create a loop", chain[:-1])
            key = (min(new[a], new[b]), max(new[a], new[b]))
            if key in threads:
                raise StructuralError("suppression would create parallel edges",
                                      sorted(set(chain) | set(threads[key])))
            threads[key] = tuple(chain) if new[a] < new[b] else tuple(chain[::-1])
    return Suppression(Graph(len(kept), list(threads)), tuple(kept), threads)


def suppress_degree_two(G) -> Graph:
    """Replace every degree-2 vertex by an edge between its neighbours.

    Kept vertices are renumbered in ascending order. Bare cycles, loops and
    parallel edges raise :class:`StructuralError` naming the vertices."""
    return suppress_with_map(G).graph


# ---------------------------------------------------------------------------
# pruned minor models
# ---------------------------------------------------------------------------

def _spanning_tree(H, S):
    S = sorted(S)
    Ss = set(S)
    seen = {S[0]}
    stack = [S[0]]
    edges = []
    while stack:
        x = stack.pop()
        for y in H.adj[x]:
            if y in Ss and y not in seen:
                seen.add(y)
                edges.append((min(x, y), max(x, y)))
                stack.append(y)
    return edges


def prune_model(H, X, model: MinorModel) -> MinorModel:
    """Thin a model to a carrier with tree branch sets, one edge per pattern
    edge and no leaves other than singleton sets of pattern leaves."""
    H = plain(H)
    X = plain(X)
    sets = [set(s) for s in model.branch_sets]
    owner = {x: i for i, s in enumerate(sets) for x in s}
    tree = set()
    for s in sets:
        tree.update(_spanning_tree(H, s))
    cross = {}
    for y, z in X.edge_list():
        best = None
        for a in sorted(sets[y]):
            for b in H.adj[a]:
                if owner.get(b) == z:
                    best = (a, b)
                    break
            if best:
                break
        cross[(y, z)] = best
    cross_ends = {x for e in cross.values() for x in e}
    changed = True
    while changed:
        changed = False
        for i, s in enumerate(sets):
            if len(s) == 1:
                continue
            for x in sorted(s):
                if x in cross_ends:
                    continue
                incident = [e for e in tree if x in e]
                if len(incident) <= 1:
                    tree.difference_update(incident)
                    s.discard(x)
                    changed = True
                    break
    carrier = sorted(tree | {(min(a, b), max(a, b)) for a, b in cross.values()})
    return MinorModel(tuple(tuple(sorted(s)) for s in sets), tuple(carrier))


def minimal_model(H, X) -> MinorModel | None:
    """A model of ``X`` in ``H`` whose carrier has no degree-1 vertices (when
    ``X`` has none), tree branch sets and exactly one edge between adjacent
    branch sets. Greedy deterministic pruning of a search result."""
    model = contains_minor(X, H)
    if model is None:
        return None
    return prune_model(H, X, model)


@dataclass(frozen=True)
class TopMinorWitness:
    Y: Graph
    embedding: TopologicalEmbedding
    model: MinorModel


def minor_to_topminor_witness(H, X) -> TopMinorWitness | None:
    """From ``X ≼ H`` (``X`` of minimum degree 3) build ``Y`` with minimum
    degree 3, ``Y ⊴ H`` and ``X ≼ Y``, by suppressing the degree-2 vertices of
    a pruned model's carrier."""
    H = plain(H)
    X = plain(X)
    if X.n == 0 or X.min_degree() < 3:
        raise PreconditionError("the pattern needs minimum degree at least 3")
    model = minimal_model(H, X)
    if model is None:
        return None
    verts = sorted({x for s in model.branch_sets for x in s})
    carrier, old = H.edge_subgraph(verts, model.carrier_edges)
    sup = suppress_with_map(carrier)
    kept_old = [old[i] for i in sup.kept]
    paths = {}
    for (a, b), chain in sup.threads.items():
        paths[(a, b)] = tuple(old[x] for x in chain)
    emb = TopologicalEmbedding(tuple(kept_old), paths)
    pos = {v: i for i, v in enumerate(kept_old)}
    sets = tuple(tuple(sorted(pos[x] for x in s if x in pos)) for s in model.branch_sets)
    return TopMinorWitness(sup.graph, emb, MinorModel(sets))
