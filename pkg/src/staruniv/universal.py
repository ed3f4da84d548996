"""Universal graph for ``Forb(T)`` with ``T = T(p_1..p_k)``, ``k >= 3``,
``p_{k-2} = 1``: forbidden 2-graph families, a registry standing in for the
universal ``X^n``-free 2-graphs, assembly of ``Γ`` from a ray-graph core, and
the end-to-end topological embedding.
"""

from __future__ import annotations

import json
import logging
import os
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

import networkx as nx
from networkx.algorithms import isomorphism as iso

from .certificates import Embedding, StarPattern, TopologicalEmbedding
from .connectivity import has_path_of_length
from .containment import contains_star, contains_subgraph
from .decomposition import DecompositionParams, decompose
from .errors import GraphError, PreconditionError, StarUnivError
from .graph import ColoredGraph, Graph, complete_graph, plain, subdivide_all
from .io import graph_from_obj, graph_to_obj
from .skfree import RealizedCore, embed_skfree
from .validate import problems_topological

log = logging.getLogger(__name__)


def check_hypothesis(T: StarPattern):
    if T.k < 3 or T.legs[T.k - 3] != 1:
        raise GraphError(f"{T} is outside the positive case (need k >= 3 and p_(k-2) = 1)")


def with_tail(H: ColoredGraph, length: int):
    """``H̄``: ``H`` with a path of ``length`` new vertices attached at its colour-1 vertex."""
    u = H.colors.index(1)
    g = H.graph
    chain = [u] + list(range(g.n, g.n + length))
    return Graph(g.n + length, list(g.edges) + list(zip(chain, chain[1:])))


# ---------------------------------------------------------------------------
# forbidden families
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _x1_list(legs: tuple, pk: int):
    T = StarPattern(legs)
    out = []
    for g in nx.graph_atlas_g()[1:]:
        if g.number_of_nodes() > T.order:
            break
        if not nx.is_connected(g):
            continue
        G = Graph(g.number_of_nodes(), g.edges())
        seen = []
        for u in range(G.n):
            colors = [0] * G.n
            colors[u] = 1
            H = ColoredGraph(G, colors, 2)
            if any(_colored_iso(H, other) for other in seen):
                continue
            seen.append(H)
            if contains_star(with_tail(H, pk), T) is not None:
                out.append(H)
    return tuple(out)


def _to_nx(G):
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(plain(G).edges)
    if isinstance(G, ColoredGraph):
        nx.set_node_attributes(g, dict(enumerate(G.colors)), "c")
    return g


def _colored_iso(A: ColoredGraph, B: ColoredGraph):
    if A.n != B.n or A.graph.m != B.graph.m or sorted(A.colors) != sorted(B.colors):
        return None
    gm = iso.GraphMatcher(_to_nx(B), _to_nx(A), node_match=lambda a, b: a.get("c") == b.get("c"))
    if gm.is_isomorphic():
        return gm.mapping  # B-vertex -> A-vertex
    return None


@dataclass(frozen=True)
class ForbiddenSets:
    """``X_1`` is kept as an explicit list when ``|T| <= 7`` (the graph atlas
    range); ``X_2``, ``X_3`` and ``X_4^n`` are predicates."""

    T: StarPattern
    relaxed_m: int | None = None

    @property
    def params(self):
        return DecompositionParams(self.T, self.relaxed_m)

    @property
    def path_bound(self):
        return self.params.part_path_bound

    @property
    def x1(self):
        if self.T.order > 7:
            return None
        return _x1_list(self.T.legs, self.T.longest)

    def x4(self, n: int) -> ColoredGraph:
        return ColoredGraph(Graph(n + 2, [(0, i) for i in range(1, n + 2)]), [1] + [0] * (n + 1), 2)

    # each check returns None when free, else a certificate dict
    def x1_violation(self, H: ColoredGraph):
        w = contains_star(with_tail(H, self.T.longest), self.T)
        if w is None:
            return None
        return {"family": "X1", "reason": f"{self.T} <= H with a tail of length {self.T.longest}",
                "star": w.to_obj()}

    def x1_violation_explicit(self, H: ColoredGraph):
        for F in self.x1 or ():
            emb = contains_subgraph(F, H, colored=True)
            if emb is not None:
                return {"family": "X1", "pattern": graph_to_obj(F), "vertex_map": list(emb.vertex_map)}
        return None

    def x2_violation(self, H):
        found, path, conclusive = has_path_of_length(plain(H), self.path_bound)
        if found:
            return {"family": "X2", "path": list(path)}
        if not conclusive:
            return {"family": "X2", "inconclusive": True}
        return None

    def x3_violation(self, H: ColoredGraph):
        g = H.graph
        ones = [v for v in range(g.n) if H.colors[v] == 1]
        for s in ones:
            prev = {s: None}
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in g.adj[x]:
                    if y in prev:
                        continue
                    prev[y] = x
                    if H.colors[y] == 1:
                        path = [y]
                        while prev[path[-1]] is not None:
                            path.append(prev[path[-1]])
                        if len(path) - 1 < self.path_bound:
                            return {"family": "X3", "path": path[::-1]}
                        continue
                    queue.append(y)
        return None

    def x4_violation(self, H: ColoredGraph, n: int):
        for v in range(H.n):
            if H.colors[v] == 1 and len(H.graph.adj[v]) > n:
                return {"family": "X4", "n": n, "vertex": v, "degree": len(H.graph.adj[v])}
        return None

    def violation(self, H: ColoredGraph, n: int):
        for check in (lambda: self.x4_violation(H, n), lambda: self.x3_violation(H),
                      lambda: self.x1_violation(H), lambda: self.x2_violation(H)):
            got = check()
            if got is not None:
                return got
        return None


def build_forbidden_sets(T: StarPattern, relaxed_m: int | None = None) -> ForbiddenSets:
    check_hypothesis(T)
    return ForbiddenSets(T, relaxed_m)


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

class RegistryError(StarUnivError):
    pass


def _normalize(H: ColoredGraph):
    """Relabel so that the colour-1 vertex is 0; returns ``(H', old_to_new)``."""
    u = H.colors.index(1)
    order = [u] + [v for v in range(H.n) if v != u]
    new = {v: i for i, v in enumerate(order)}
    g = Graph(H.n, [(new[a], new[b]) for a, b in H.graph.edges])
    return ColoredGraph(g, [H.colors[v] for v in order], 2), new


def pad(H: ColoredGraph, n: int) -> ColoredGraph:
    """Add pendant colour-0 leaves at the colour-1 vertex until it has degree ``n``."""
    u = H.colors.index(1)
    d = len(H.graph.adj[u])
    if d > n:
        raise RegistryError(f"colour-1 vertex has degree {d} > {n}")
    extra = n - d
    g = Graph(H.n + extra, list(H.graph.edges) + [(u, H.n + i) for i in range(extra)])
    return ColoredGraph(g, list(H.colors) + [0] * extra, 2)


def _wl(H):
    return nx.weisfeiler_lehman_graph_hash(_to_nx(H), node_attr="c" if isinstance(H, ColoredGraph) else None)


class RegistryUniversal:
    """Growing, deduplicated list of admitted components per class ``n``.

    ``kind="gamma"`` holds connected 2-graphs with one colour-1 vertex of
    degree exactly ``n`` that are ``X^n``-free and whose tailed version is
    ``T``-free. ``kind="prime"`` holds plain connected graphs in
    ``Forb(T, P_{4 p_k m})`` (all in class 0)."""

    def __init__(self, T: StarPattern, relaxed_m: int | None = None, kind: str = "gamma", seed: bool = True):
        check_hypothesis(T)
        if kind not in ("gamma", "prime"):
            raise GraphError(f"unknown registry kind {kind!r}")
        self.T = T
        self.relaxed_m = relaxed_m
        self.kind = kind
        self.forbidden = ForbiddenSets(T, relaxed_m)
        self.classes: dict[int, list] = {}
        self._hashes: dict[int, list] = {}
        if seed and kind == "gamma":
            for n in range(T.k):
                try:
                    self.admit(self.forbidden.x4(n - 1) if n > 0 else
                               ColoredGraph(Graph(1), [1], 2), n)
                except RegistryError:
                    pass

    # -- lookups -------------------------------------------------------
    def get(self, n: int, c: int):
        comps = self.classes.get(n, [])
        return comps[c] if 0 <= c < len(comps) else None

    def __len__(self):
        return sum(len(v) for v in self.classes.values())

    def items(self):
        for n in sorted(self.classes):
            for i, H in enumerate(self.classes[n]):
                yield n, i, H

    # -- admission -----------------------------------------------------
    def check(self, H, n: int):
        if self.kind == "prime":
            g = plain(H)
            w = contains_star(g, self.T)
            if w is not None:
                return {"family": "T", "star": w.to_obj()}
            P = self.forbidden.params
            found, path, conclusive = has_path_of_length(g, P.long_path_threshold)
            if found:
                return {"family": "long path", "path": list(path)}
            if not conclusive:
                return {"family": "long path", "inconclusive": True}
            return None
        return self.forbidden.violation(H, n)

    def admit(self, H, n: int | None = None):
        """Admit ``H`` (padded to class ``n`` when given). Returns
        ``(n, index, mapping)`` where ``mapping[x]`` is the image of ``H``'s
        vertex ``x`` in the stored component."""
        if self.kind == "prime":
            g = plain(H)
            if g.n == 0 or not g.is_connected():
                raise RegistryError("components must be connected and non-empty")
            H = ColoredGraph(g, [0] * g.n, 2)
            n = 0
            norm, new = H, {v: v for v in range(g.n)}
        else:
            if not isinstance(H, ColoredGraph):
                raise RegistryError("gamma registry needs a 2-coloured graph")
            if H.colors.count(1) != 1:
                raise RegistryError("component needs exactly one colour-1 vertex")
            if not H.graph.is_connected():
                raise RegistryError("component must be connected")
            u = H.colors.index(1)
            if n is None:
                n = len(H.graph.adj[u])
            H = pad(H, n)
            norm, new = _normalize(H)
        bad = self.check(norm, n)
        if bad is not None:
            raise RegistryError(f"component violates the class for n={n}", bad)
        comps = self.classes.setdefault(n, [])
        hashes = self._hashes.setdefault(n, [])
        h = _wl(norm)
        for i, (other, oh) in enumerate(zip(comps, hashes)):
            if oh != h:
                continue
            m = _colored_iso(other, norm) if self.kind == "gamma" else _plain_iso(other, norm)
            if m is not None:
                # m maps norm-vertex -> other-vertex
                return n, i, {x: m[new[x]] for x in new}
        comps.append(norm)
        hashes.append(h)
        return n, len(comps) - 1, {x: new[x] for x in new}

    # -- realization and persistence -----------------------------------
    def realize(self):
        """Disjoint union of all components (class order, then index).
        Returns ``(graph, offsets)`` with ``offsets[(n, i)]`` the first id."""
        edges, offsets, nxt = [], {}, 0
        for n, i, H in self.items():
            offsets[(n, i)] = nxt
            edges += [(a + nxt, b + nxt) for a, b in H.graph.edges]
            nxt += H.n
        return Graph(nxt, edges), offsets

    def save(self, path: str):
        os.makedirs(path, exist_ok=True)
        index = {"legs": list(self.T.legs), "relaxed_m": self.relaxed_m, "kind": self.kind, "classes": {}}
        for n, i, H in self.items():
            name = f"n{n}_{i}.json"
            with open(os.path.join(path, name), "w") as fh:
                json.dump(graph_to_obj(H), fh)
            index["classes"].setdefault(str(n), []).append(name)
        with open(os.path.join(path, "index.json"), "w") as fh:
            json.dump(index, fh, indent=1, sort_keys=True)

    @classmethod
    def load(cls, path: str) -> "RegistryUniversal":
        with open(os.path.join(path, "index.json")) as fh:
            index = json.load(fh)
        reg = cls(StarPattern(tuple(index["legs"])), index["relaxed_m"], index["kind"], seed=False)
        for n, names in sorted(index["classes"].items(), key=lambda x: int(x[0])):
            for name in names:
                with open(os.path.join(path, name)) as fh:
                    text = fh.read()
                H = graph_from_obj(json.loads(text), text)
                if not isinstance(H, ColoredGraph):
                    H = ColoredGraph(H, [0] * H.n, 2)
                reg.classes.setdefault(int(n), []).append(H)
                reg._hashes.setdefault(int(n), []).append(_wl(H))
        return reg


def _plain_iso(A, B):
    gm = iso.GraphMatcher(_to_nx(plain(A)), _to_nx(plain(B)))
    if gm.is_isomorphic():
        return gm.mapping
    return None


def registry_admit(R: RegistryUniversal, G_v, n: int | None = None):
    return R.admit(G_v, n)


# ---------------------------------------------------------------------------
# assembly
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StarUniversalPrefix:
    """``Γ`` restricted to a realized core: core ids come first and are
    unchanged; ``attachments[x]`` lists the ids of the component glued at
    ``x`` (entry 0 is ``x`` itself); ``classes[x] = (n(x), c(x))``."""

    T: StarPattern
    core: RealizedCore
    graph: Graph
    attachments: dict = field(hash=False)
    classes: dict = field(hash=False)
    meta: dict = field(default_factory=dict, hash=False)

    def to_obj(self):
        obj = graph_to_obj(self.graph)
        obj["core_size"] = self.core.graph.n
        obj["classes"] = {str(x): list(v) for x, v in sorted(self.classes.items())}
        obj["meta"] = self.meta
        return obj


def assemble(T: StarPattern, core: RealizedCore, registry: RegistryUniversal,
             allow_k3: bool = False, verify: bool = True) -> StarUniversalPrefix:
    check_hypothesis(T)
    k = T.k
    if k == 3 and not allow_k3:
        raise GraphError("k = 3 cores can have ray vertices of degree 3; pass allow_k3 to proceed")
    g = core.graph.graph
    need, missing = {}, []
    for x in range(g.n):
        n = k - len(g.adj[x]) - 1
        c = core.graph.colors[x]
        if n < 0:
            raise StarUnivError(f"core vertex {x} has degree {len(g.adj[x])} >= k", {"vertex": x})
        need[x] = (n, c)
        if registry.get(n, c) is None:
            missing.append([n, c])
    if missing:
        raise StarUnivError("registry lacks components", {"missing": sorted(map(list, {tuple(m) for m in missing}))})
    edges = list(g.edges)
    nxt = g.n
    attachments = {}
    for x in range(g.n):
        H = registry.get(*need[x])
        ids = [x] + list(range(nxt, nxt + H.n - 1))
        nxt += H.n - 1
        edges += [(ids[a], ids[b]) for a, b in H.graph.edges]
        attachments[x] = tuple(ids)
    gamma = Graph(nxt, edges)
    meta = {"k3_caveat": k == 3, "theorem": registry.relaxed_m is None}
    out = StarUniversalPrefix(T, core, gamma, attachments, need, meta)
    if verify:
        w = contains_star(gamma, T)
        meta["t_free"] = w is None
        if w is not None:
            raise StarUnivError(f"assembled prefix contains {T}", {"star": w.to_obj()})
    return out


# ---------------------------------------------------------------------------
# embedding pipeline
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class UniversalEmbedding:
    prefix: StarUniversalPrefix
    embedding: TopologicalEmbedding
    decomposition: object
    consistency: dict = field(hash=False)


def embed_universal(G, T: StarPattern, registry: RegistryUniversal | None = None,
                    relaxed_m: int | None = None, touched_only: bool = True,
                    allow_k3: bool = False, validate: bool = True) -> UniversalEmbedding:
    """Topological embedding of a connected ``T``-free graph with a long path
    into an assembled prefix of ``Γ``."""
    G = plain(G)
    check_hypothesis(T)
    k = T.k
    if registry is None:
        registry = RegistryUniversal(T, relaxed_m)
    D = decompose(G, T, relaxed_m)
    core = list(D.core)
    Gs, old = G.induced_subgraph(core)
    pos = {v: i for i, v in enumerate(old)}
    nprime, cprime, maps = {}, {}, {}
    for v in core:
        part = D.parts[v]
        H, pold = G.induced_subgraph(part)
        colors = [1 if x == v else 0 for x in pold]
        n_v = k - len(Gs.adj[pos[v]]) - 1
        n, c, mapping = registry.admit(ColoredGraph(H, colors, 2), n_v)
        nprime[v], cprime[v] = n, c
        maps[v] = {pold[x]: mapping[x] for x in range(H.n)}
    coloured = ColoredGraph(Gs, [cprime[v] for v in old], "omega")
    sk = embed_skfree(coloured, k, touched_only=touched_only)
    prefix = assemble(T, sk.host, registry, allow_k3=allow_k3)
    vmap = [-1] * G.n
    paths = {}
    gstar = sk.embedding.vertex_map
    bad = []
    for i, v in enumerate(old):
        x = gstar[i]
        n_x, c_x = prefix.classes[x]
        if (n_x, c_x) != (nprime[v], cprime[v]):
            bad.append({"vertex": v, "part": [nprime[v], cprime[v]], "core": [n_x, c_x]})
        ids = prefix.attachments[x]
        for y, comp_vertex in maps[v].items():
            vmap[y] = ids[comp_vertex]
    for (a, b), p in sk.embedding.edge_paths.items():
        u, w = old[a], old[b]
        key = (min(u, w), max(u, w))
        paths[key] = tuple(p) if u < w else tuple(p[::-1])
    for a, b in G.edge_list():
        if (a, b) not in paths:
            paths[(a, b)] = (vmap[a], vmap[b])
    emb = TopologicalEmbedding(tuple(vmap), paths)
    consistency = {"ok": not bad, "mismatches": bad}
    if bad:
        raise StarUnivError("registry classes disagree with the core", consistency)
    if validate:
        problems = problems_topological(G, prefix.graph, emb)
        if problems:
            raise StarUnivError("embedding failed validation", {"problems": problems[:20]})
    return UniversalEmbedding(prefix, emb, D, consistency)


@dataclass(frozen=True)
class ShortEmbedding:
    host: Graph
    embedding: Embedding
    components: tuple


def embed_short(G, T: StarPattern, registry: RegistryUniversal | None = None,
                relaxed_m: int | None = None) -> ShortEmbedding:
    """Embed a ``T``-free graph without the long path into the ``Γ'`` registry
    (the disjoint union of its admitted components)."""
    G = plain(G)
    if registry is None:
        registry = RegistryUniversal(T, relaxed_m, kind="prime")
    if registry.kind != "prime":
        raise GraphError("embed_short needs a 'prime' registry")
    placed = []
    for comp in G.components():
        H, old = G.induced_subgraph(comp)
        n, i, mapping = registry.admit(H)
        placed.append((old, i, mapping))
    host, offsets = registry.realize()
    vmap = [-1] * G.n
    for old, i, mapping in placed:
        for x, v in enumerate(old):
            vmap[v] = offsets[(0, i)] + mapping[x]
    return ShortEmbedding(host, Embedding(tuple(vmap)), tuple(i for _, i, _ in placed))


def trivial_universal_prefix(k: int, n: int, kind: str = "cycle_girth") -> Graph:
    """``K_n`` with every edge subdivided ``k`` times."""
    if kind not in ("cycle_girth", "branch_distance"):
        raise GraphError(f"unknown kind {kind!r}")
    if n < 1 or k < 1:
        raise GraphError("need n >= 1 and k >= 1")
    return subdivide_all(complete_graph(n), k)
