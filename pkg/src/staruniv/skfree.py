"""Finite prefixes of the universal ``S_k``-free ω-graph built from rays.

The infinite graph has rays ``R_0, R_1, ...`` and, for ``j >= 1``, a vertex
``v_j`` joined to the ``j``-th vertex of every ray in ``f(j)``. Here ``f`` and
the colours of the ``v_j`` live in an :class:`IncidenceEnumeration` that grows
on demand. A prefix keeps ``R`` rays of length ``L`` (``L + 1`` vertices,
positions ``1..L+1``) and the ``v_j`` with ``j <= L + 1`` whose rays all exist.

Embeddings send a vertex ``v`` to a fresh ``v_j`` with ``f(j)`` equal to the
indices of the edges at ``v`` and route edge ``e_i`` along ray ``R_i``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .certificates import TopologicalEmbedding
from .errors import GraphError, PreconditionError, ResourceError
from .graph import OMEGA, ColoredGraph, Graph

FIGURE1 = ((frozenset({0, 1}), 0), (frozenset({0, 2}), 0), (frozenset({0, 1}), 0),
           (frozenset({1}), 0), (frozenset({0, 1, 2}), 0))


class IncidenceEnumeration:
    """The table ``j -> (f(j), colour(v_j))`` for ``j = 1, 2, ...``."""

    def __init__(self, k: int, entries=(), locally_finite: bool = False):
        self.k = k
        self.locally_finite = locally_finite
        self.entries: list[tuple[frozenset, int]] = []
        for A, c in entries:
            self.append(A, c)

    @classmethod
    def figure1(cls, k: int = 4):
        return cls(k, FIGURE1)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, j: int):
        if not 1 <= j <= len(self.entries):
            raise IndexError(j)
        return self.entries[j - 1]

    def copy(self):
        return IncidenceEnumeration(self.k, self.entries, self.locally_finite)

    def append(self, A, c: int) -> int:
        A = frozenset(int(i) for i in A)
        if any(i < 0 for i in A):
            raise GraphError("ray indices must be non-negative")
        if not self.locally_finite and len(A) >= self.k:
            raise GraphError(f"|f(j)| must be below k={self.k}, got {sorted(A)}")
        if c < 0:
            raise GraphError("colours must be non-negative")
        self.entries.append((A, int(c)))
        return len(self.entries)

    def request(self, A, c: int, used=(), grow: bool = True) -> int | None:
        """The smallest unused ``j`` with entry ``(A, c)``; appended if absent."""
        A = frozenset(A)
        for j, entry in enumerate(self.entries, start=1):
            if entry == (A, c) and j not in used:
                return j
        if not grow:
            return None
        return self.append(A, c)


@dataclass(frozen=True)
class RealizedCore:
    """A concrete finite piece of the ray graph. ``names[x]`` is ``("r", i, p)``
    for position ``p`` of ray ``i`` or ``("v", j)`` for ``v_j``."""

    graph: ColoredGraph
    names: tuple
    index: dict = field(hash=False, repr=False)


def _realize(k, R, L, entries, names):
    """Induced subgraph of the ray graph on the given vertex names."""
    names = sorted(set(names), key=lambda x: (x[0] != "r", x[1:]))
    index = {x: i for i, x in enumerate(names)}
    edges, colors = [], []
    for x in names:
        if x[0] == "r":
            _, i, p = x
            colors.append(0)
            y = ("r", i, p + 1)
            if y in index:
                edges.append((index[x], index[y]))
        else:
            j = x[1]
            A, c = entries[j - 1]
            colors.append(c)
            for i in sorted(A):
                y = ("r", i, j)
                if y in index:
                    edges.append((index[x], index[y]))
    G = ColoredGraph(Graph(len(names), edges), colors, OMEGA)
    return RealizedCore(G, tuple(names), index)


@dataclass(frozen=True)
class SkFreePrefix:
    k: int
    R: int
    L: int
    table: tuple
    locally_finite: bool = False

    def realized_attachments(self) -> list[int]:
        return [j for j, (A, _) in enumerate(self.table, start=1)
                if j <= self.L + 1 and all(i < self.R for i in A)]

    def realize(self) -> RealizedCore:
        names = [("r", i, p) for i in range(self.R) for p in range(1, self.L + 2)]
        names += [("v", j) for j in self.realized_attachments()]
        return _realize(self.k, self.R, self.L, self.table, names)

    @property
    def graph(self) -> ColoredGraph:
        return self.realize().graph

    def attachment_vertex(self, j: int) -> int:
        return self.realize().index[("v", j)]

    def to_obj(self):
        from .io import graph_to_obj
        core = self.realize()
        obj = graph_to_obj(core.graph)
        obj["k"] = self.k
        obj["rays"] = self.R
        obj["len"] = self.L
        obj["attachments"] = {str(j): sorted(self.table[j - 1][0]) for j in self.realized_attachments()}
        obj["attachment_vertices"] = {str(j): core.index[("v", j)] for j in self.realized_attachments()}
        obj["ray_vertices"] = [[core.index[("r", i, p)] for p in range(1, self.L + 2)] for i in range(self.R)]
        return obj


def build_prefix(k: int, R: int, L: int, seed_enumeration=None, locally_finite: bool = False) -> SkFreePrefix:
    if k < 3 and not locally_finite:
        raise GraphError("k must be at least 3")
    if R < 1 or L < 1:
        raise GraphError("need at least one ray of positive length")
    if seed_enumeration is None:
        table = ()
    elif isinstance(seed_enumeration, IncidenceEnumeration):
        table = tuple(seed_enumeration.entries)
    else:
        table = tuple(IncidenceEnumeration(k, seed_enumeration, locally_finite).entries)
    if not locally_finite and any(len(A) >= k for A, _ in table):
        raise GraphError(f"table entries must have fewer than k={k} rays")
    return SkFreePrefix(k, R, L, table, locally_finite)


# ---------------------------------------------------------------------------
# embedding
# ---------------------------------------------------------------------------

def _as_omega(G) -> ColoredGraph:
    if isinstance(G, ColoredGraph):
        return G
    return ColoredGraph(G, [0] * G.n, OMEGA)


def _bfs_order(G: Graph):
    seen = {0}
    order = [0]
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in G.adj[x]:
            if y not in seen:
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


def check_skfree_input(G, k: int, locally_finite: bool = False):
    from .certificates import StarWitness
    g = G.graph if isinstance(G, ColoredGraph) else G
    if g.n < 3:
        raise PreconditionError(f"need at least 3 vertices, got {g.n}")
    if not g.is_connected():
        comps = g.components()
        raise PreconditionError("not connected", {"components": comps})
    if not locally_finite:
        for v in range(g.n):
            if len(g.adj[v]) >= k:
                w = StarWitness(v, tuple((v, u) for u in g.adj[v][:k]))
                raise PreconditionError(f"contains S_{k} at vertex {v}", {"star": w.to_obj()})


def assign_indices(G, table: IncidenceEnumeration, grow: bool = True) -> dict[int, int]:
    """Pick ``j(v)`` for every vertex, in BFS order, reusing unused table entries."""
    g = G.graph
    edges = g.edge_list()
    inc = {v: set() for v in range(g.n)}
    for i, (a, b) in enumerate(edges):
        inc[a].add(i)
        inc[b].add(i)
    used = set()
    out = {}
    for v in _bfs_order(g):
        j = table.request(inc[v], G.colors[v], used, grow=grow)
        if j is None:
            raise ResourceError(f"no free table entry for incidence {sorted(inc[v])} colour {G.colors[v]}")
        used.add(j)
        out[v] = j
    return out


def required_prefix(G, k: int | None = None, table=None) -> tuple[int, int]:
    """``(R, L)`` needed to embed ``G``: one ray per edge, and rays long enough
    to reach the largest index the on-demand table hands out."""
    G = _as_omega(G)
    if k is None:
        k = max(G.graph.max_degree() + 1, 3)
    tab = table.copy() if table is not None else IncidenceEnumeration(k)
    j = assign_indices(G, tab)
    return G.graph.m, max(j.values(), default=0)


@dataclass(frozen=True)
class SkFreeEmbedding:
    """Result of :func:`embed_skfree`. ``host`` is the realized core (whole
    prefix, or only the touched vertices) and ``embedding`` refers to its ids."""

    prefix: SkFreePrefix
    host: RealizedCore
    embedding: TopologicalEmbedding
    index_of: dict = field(hash=False)
    touched_only: bool = False


def embed_skfree(G, k: int, prefix: SkFreePrefix | None = None, auto_extend: bool = True,
                 touched_only: bool = False, locally_finite: bool = False) -> SkFreeEmbedding:
    """Degree-preserving topological ω-embedding of a connected ``S_k``-free
    ω-graph into a prefix of the ray graph."""
    G = _as_omega(G)
    if prefix is not None:
        k = prefix.k
        locally_finite = prefix.locally_finite
    check_skfree_input(G, k, locally_finite)
    g = G.graph
    edges = g.edge_list()
    table = IncidenceEnumeration(k, prefix.table if prefix else (), locally_finite)
    jmap = assign_indices(G, table)
    need_R, need_L = len(edges), max(jmap.values())
    if prefix is None:
        prefix = SkFreePrefix(k, need_R, need_L, tuple(table.entries), locally_finite)
    elif need_R > prefix.R or need_L > prefix.L or len(table) > len(prefix.table):
        if not auto_extend:
            raise ResourceError(f"prefix too small: need R >= {need_R} and L >= {need_L}",
                                {"R": need_R, "L": need_L})
        prefix = SkFreePrefix(k, max(prefix.R, need_R), max(prefix.L, need_L), tuple(table.entries),
                              locally_finite)
    segments = {}
    for i, (a, b) in enumerate(edges):
        ja, jb = jmap[a], jmap[b]
        step = 1 if jb >= ja else -1
        segments[i] = [("v", ja)] + [("r", i, p) for p in range(ja, jb + step, step)] + [("v", jb)]
    if touched_only:
        names = {x for seg in segments.values() for x in seg}
        core = _realize(k, prefix.R, prefix.L, prefix.table, names)
    else:
        core = prefix.realize()
    idx = core.index
    vmap = tuple(idx[("v", jmap[v])] for v in range(g.n))
    paths = {e: tuple(idx[x] for x in segments[i]) for i, e in enumerate(edges)}
    return SkFreeEmbedding(prefix, core, TopologicalEmbedding(vmap, paths), jmap, touched_only)
