"""Finite simple graphs with dense integer vertices, optional vertex colourings,
and the small editing toolkit (subdivision, gluing, stars, X-paths) the
constructions are written in.

Vertices are ``0..n-1``. Every iteration order is ascending by vertex id so
that all searches built on top are deterministic.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .errors import GraphError

OMEGA = "omega"


def _norm(u, v):
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable finite simple undirected graph."""

    __slots__ = ("n", "edges", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        n = int(n)
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        es = set()
        nbrs = [[] for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} outside 0..{n - 1}")
            key = _norm(u, v)
            if key in es:
                continue
            es.add(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.n = n
        self.edges = frozenset(es)
        self.adj = tuple(tuple(sorted(a)) for a in nbrs)
        self._hash = None

    # -- basic queries -------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def _check_vertex(self, v):
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"unknown vertex {v!r}")

    # -- structure -----------------------------------------------------
    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def distances_from(self, s: int, allowed=None) -> dict[int, int]:
        dist = {s: 0}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in self.adj[x]:
                if y not in dist and (allowed is None or y in allowed):
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return ``(H, old_ids)``; vertex ``i`` of ``H`` is ``old_ids[i]``."""
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        es = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        return Graph(len(old), es), old

    def edge_subgraph(self, vertices: Iterable[int], edges: Iterable[Sequence[int]]) -> tuple["Graph", list[int]]:
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        es = []
        for u, v in edges:
            if not self.has_edge(u, v):
                raise GraphError(f"{u}-{v} is not an edge")
            es.append((new[u], new[v]))
        return Graph(len(old), es), old

    # -- editing -------------------------------------------------------
    def add_vertices(self, count: int) -> "Graph":
        return Graph(self.n + count, self.edges)

    def add_edges(self, edges: Iterable[Sequence[int]]) -> "Graph":
        return Graph(self.n, list(self.edges) + [tuple(e) for e in edges])

    def remove_edges(self, edges: Iterable[Sequence[int]]) -> "Graph":
        drop = {_norm(*e) for e in edges}
        return Graph(self.n, [e for e in self.edges if e not in drop])

    def relabel(self, mapping: Sequence[int]) -> "Graph":
        """Apply a permutation given as ``mapping[old] = new``."""
        if sorted(mapping) != list(range(self.n)):
            raise GraphError("relabel needs a permutation of 0..n-1")
        return Graph(self.n, [(mapping[u], mapping[v]) for u, v in self.edges])

    def disjoint_union(self, other: "Graph") -> "Graph":
        off = self.n
        return Graph(self.n + other.n, list(self.edges) + [(u + off, v + off) for u, v in other.edges])

    # -- dunder --------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, Graph) and not isinstance(other, ColoredGraph) and \
            self.n == other.n and self.edges == other.edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.edges))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class ColoredGraph:
    """A graph with a vertex colouring into ``alpha`` (2 or ``OMEGA``)."""

    __slots__ = ("graph", "colors", "alpha")

    def __init__(self, graph: Graph, colors: Sequence[int], alpha=OMEGA):
        if alpha not in (2, OMEGA):
            raise GraphError(f"alpha must be 2 or {OMEGA!r}, got {alpha!r}")
        colors = tuple(int(c) for c in colors)
        if len(colors) != graph.n:
            raise GraphError(f"{len(colors)} colours for {graph.n} vertices")
        if any(c < 0 for c in colors):
            raise GraphError("colours must be non-negative")
        if alpha == 2 and any(c > 1 for c in colors):
            raise GraphError("a 2-colouring uses only colours 0 and 1")
        self.graph = graph
        self.colors = colors
        self.alpha = alpha

    @property
    def n(self):
        return self.graph.n

    @property
    def adj(self):
        return self.graph.adj

    @property
    def edges(self):
        return self.graph.edges

    def color(self, v: int) -> int:
        return self.colors[v]

    def __eq__(self, other):
        return isinstance(other, ColoredGraph) and self.alpha == other.alpha and \
            self.graph == other.graph and self.colors == other.colors

    def __hash__(self):
        return hash((self.graph, self.colors, self.alpha))

    def __repr__(self):
        return f"ColoredGraph(n={self.n}, m={self.graph.m}, alpha={self.alpha})"


def plain(G) -> Graph:
    return G.graph if isinstance(G, ColoredGraph) else G


# -- named graphs ----------------------------------------------------------

def path_graph(n: int) -> Graph:
    """``P_n``: the path of length ``n`` (``n + 1`` vertices)."""
    if n < 0:
        raise GraphError("path length must be non-negative")
    return Graph(n + 1, [(i, i + 1) for i in range(n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise GraphError("clique size must be non-negative")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(n: int, m: int) -> Graph:
    if n < 0 or m < 0:
        raise GraphError("part sizes must be non-negative")
    return Graph(n + m, [(i, n + j) for i in range(n) for j in range(m)])


def build_named(kind: str, n: int, m: int | None = None) -> Graph:
    if kind == "path":
        return path_graph(n)
    if kind == "cycle":
        return cycle_graph(n)
    if kind == "clique":
        return complete_graph(n)
    if kind == "complete_bipartite":
        if m is None:
            raise GraphError("complete_bipartite needs two part sizes")
        return complete_bipartite(n, m)
    raise GraphError(f"unknown graph kind {kind!r}")


# -- editing -------------------------------------------------------------

def subdivide_edge(G: Graph, e: Sequence[int], times: int) -> Graph:
    """Replace ``e = (u, v)`` by a ``u``–``v`` path with ``times`` new inner
    vertices numbered ``n, n+1, ...`` from ``u`` towards ``v``."""
    u, v = int(e[0]), int(e[1])
    if not G.has_edge(u, v):
        raise GraphError(f"{u}-{v} is not an edge")
    if times < 0:
        raise GraphError("times must be non-negative")
    if times == 0:
        return G
    chain = [u] + list(range(G.n, G.n + times)) + [v]
    es = [x for x in G.edges if x != _norm(u, v)]
    es += list(zip(chain, chain[1:]))
    return Graph(G.n + times, es)


def subdivide_all(G: Graph, times: int) -> Graph:
    """Subdivide every edge ``times`` times; new vertices follow edge order."""
    out = []
    nxt = G.n
    for u, v in G.edge_list():
        chain = [u] + list(range(nxt, nxt + times)) + [v]
        nxt += times
        out += zip(chain, chain[1:])
    return Graph(nxt, out)


def glue(G: Graph, H: Graph, identify: dict[int, int]) -> tuple[Graph, list[int]]:
    """Disjoint union of ``G`` and ``H`` with ``H``-vertex ``h`` merged into
    ``G``-vertex ``identify[h]``. Returns the glued graph and the map of
    ``H`` vertices into it; unidentified ``H`` vertices are appended in order."""
    if len(set(identify.values())) != len(identify):
        raise GraphError("identification must be injective")
    hmap = []
    nxt = G.n
    for h in range(H.n):
        if h in identify:
            hmap.append(identify[h])
        else:
            hmap.append(nxt)
            nxt += 1
    es = list(G.edges)
    for a, b in H.edges:
        x, y = hmap[a], hmap[b]
        if x == y:
            raise GraphError("gluing would create a loop")
        es.append((x, y))
    return Graph(nxt, es), hmap


def star_at(G: Graph, v: int) -> Graph:
    """``S_G(v)``: vertex 0 is ``v``; vertex ``i`` is the ``i``-th neighbour."""
    G._check_vertex(v)
    d = len(G.adj[v])
    return Graph(d + 1, [(0, i) for i in range(1, d + 1)])


# -- paths -------------------------------------------------------------

def check_path(G: Graph, path: Sequence[int]) -> None:
    if len(path) == 0:
        raise GraphError("a path has at least one vertex")
    if len(set(path)) != len(path):
        raise GraphError(f"path repeats a vertex: {list(path)}")
    for v in path:
        G._check_vertex(v)
    for a, b in zip(path, path[1:]):
        if not G.has_edge(a, b):
            raise GraphError(f"{a}-{b} is not an edge")


def is_path(G: Graph, path: Sequence[int]) -> bool:
    try:
        check_path(G, path)
    except GraphError:
        return False
    return True


def is_x_path(G: Graph, path: Sequence[int], X: Iterable[int]) -> bool:
    """True iff both ends of the nontrivial ``path`` lie in ``X`` and no inner vertex does."""
    check_path(G, path)
    if len(path) < 2:
        raise GraphError("an X-path must be nontrivial")
    X = set(X)
    return path[0] in X and path[-1] in X and not any(v in X for v in path[1:-1])
