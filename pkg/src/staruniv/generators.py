"""Graph generators: small named graphs, random graphs, and corpora of
``T``-free graphs that carry a long path.

Every corpus graph is built so that its freeness follows from local degree
arguments, and :func:`corpus` re-checks it with :func:`contains_star`.
"""

from __future__ import annotations

import itertools
import random

import networkx as nx

from .certificates import StarPattern
from .containment import contains_star
from .errors import GraphError
from .graph import Graph, complete_graph, cycle_graph


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def grid(r: int, c: int) -> Graph:
    edges = []
    for i in range(r):
        for j in range(c):
            v = i * c + j
            if j + 1 < c:
                edges.append((v, v + 1))
            if i + 1 < r:
                edges.append((v, v + c))
    return Graph(r * c, edges)


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p])


def random_connected(n: int, extra: int, rng: random.Random) -> Graph:
    """Random spanning tree plus ``extra`` random chords."""
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if (a, b) not in edges]
    rng.shuffle(pairs)
    edges |= set(pairs[:extra])
    return Graph(n, edges)


def random_two_connected(n: int, rng: random.Random, ears: int = 3) -> Graph:
    """A cycle plus random ears (open paths between existing vertices)."""
    if n < 3:
        raise GraphError("need n >= 3")
    base = rng.randint(3, max(3, n - ears))
    edges = list(cycle_graph(base).edges)
    nxt = base
    while nxt < n:
        a, b = rng.sample(range(nxt), 2)
        length = rng.randint(1, n - nxt)
        chain = [a] + list(range(nxt, nxt + length)) + [b]
        edges += zip(chain, chain[1:])
        nxt += length
    return Graph(nxt, edges)


def random_max_degree(n: int, d: int, rng: random.Random, tries: int = 4) -> Graph:
    """Random connected graph with maximum degree below ``d``."""
    deg = [0] * n
    edges = set()
    for v in range(1, n):
        opts = [u for u in range(v) if deg[u] < d - 1]
        u = rng.choice(opts) if opts else v - 1
        edges.add((u, v))
        deg[u] += 1
        deg[v] += 1
    for _ in range(tries * n):
        a, b = rng.sample(range(n), 2)
        a, b = min(a, b), max(a, b)
        if (a, b) not in edges and deg[a] < d - 1 and deg[b] < d - 1:
            edges.add((a, b))
            deg[a] += 1
            deg[b] += 1
    return Graph(n, edges)


def _canonical(n, adj):
    """Canonical code: colour refinement, then the smallest edge bitmask over
    orderings that respect the refined classes."""
    col = [(len(adj[v]), sum(1 for x in adj[v] for y in adj[v] if x < y and y in adj[x])) for v in range(n)]
    for _ in range(2):
        col = [(col[v], tuple(sorted(col[u] for u in adj[v]))) for v in range(n)]
    classes = {}
    for v in range(n):
        classes.setdefault(col[v], []).append(v)
    groups = [classes[c] for c in sorted(classes)]
    edges = [(a, b) for a in range(n) for b in adj[a] if a < b]
    best = None
    pos = [0] * n
    for perms in itertools.product(*(itertools.permutations(g) for g in groups)):
        i = 0
        for p in perms:
            for v in p:
                pos[v] = i
                i += 1
        code = 0
        for a, b in edges:
            x, y = sorted((pos[a], pos[b]))
            code |= 1 << (x * n + y)
        if best is None or code < best:
            best = code
    return tuple(sorted(col)), best


def all_graphs(n: int) -> list[Graph]:
    """Every graph on ``n`` vertices up to isomorphism.

    Up to 7 vertices this is the networkx atlas; 8 vertices come from adding
    a vertex to each 7-vertex graph in every way and deduplicating by
    canonical code (12346 graphs)."""
    if n < 0 or n > 8:
        raise GraphError("all_graphs covers 0 <= n <= 8")
    if n <= 7:
        return [Graph(n, g.edges()) for g in nx.graph_atlas_g() if g.number_of_nodes() == n]
    seen = set()
    out = []
    for G in all_graphs(7):
        for mask in range(1 << 7):
            adj = [set(a) for a in G.adj] + [set()]
            for i in range(7):
                if mask >> i & 1:
                    adj[i].add(7)
                    adj[7].add(i)
            code = _canonical(8, adj)
            if code in seen:
                continue
            seen.add(code)
            out.append(Graph(8, [(a, b) for a in range(8) for b in adj[a] if a < b]))
    return out


# ---------------------------------------------------------------------------
# long-path corpora
# ---------------------------------------------------------------------------

class _Builder:
    def __init__(self):
        self.n = 0
        self.edges = []

    def new(self, count=1):
        ids = list(range(self.n, self.n + count))
        self.n += count
        return ids

    def path(self, length, start=None):
        """A path of ``length`` edges; returns its vertices."""
        vs = ([start] if start is not None else self.new()) + self.new(length)
        self.edges += zip(vs, vs[1:])
        return vs

    def leaves(self, v, count):
        for x in self.new(count):
            self.edges.append((v, x))

    def clique_at(self, v, size):
        """``K_size`` containing ``v``."""
        vs = [v] + self.new(size - 1)
        self.edges += [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]]
        return vs

    def graph(self):
        return Graph(self.n, self.edges)


def _end_122(b, s, kind, rng):
    """Decorate one end of spine ``s`` (``s[0]`` is the end) keeping it T(1,2,2)-free."""
    if kind == "star":
        b.leaves(s[1], rng.randint(2, 10))
    elif kind == "triangle":
        x = b.new()[0]
        b.edges += [(s[0], x), (s[1], x)]
    elif kind == "broom":
        b.leaves(s[0], rng.randint(2, 8))


def corpus_122(count: int, seed: int = 0, scale: float = 1.0) -> list[dict]:
    """Connected T(1,2,2)-free graphs with a path of length at least ``2048 * scale``.

    Vertices of degree 3 or more only occur next to an end of a long spine,
    where one of the two long legs is missing."""
    rng = random.Random(seed)
    need = int(2048 * scale)
    out = []
    kinds = ["plain", "star", "triangle", "broom"]
    for i in range(count):
        b = _Builder()
        if i % 5 == 4:
            L = need + rng.randint(1, need // 4)
            b.n = L
            b.edges = list(cycle_graph(L).edges)
            name = f"cycle{L}"
        else:
            L = need + rng.randint(2, need // 4)
            s = b.path(L)
            left, right = kinds[i % 4], kinds[(i // 4 + 1) % 4]
            _end_122(b, s, left, rng)
            _end_122(b, s[::-1], right, rng)
            name = f"path{L}-{left}-{right}"
        out.append({"name": name, "graph": b.graph(), "family": "T(1,2,2)"})
    return out


def _spine_block(b, u, kind, rng):
    """Append a block entered at ``u``; returns the exit vertex. Degrees stay at most 3."""
    if kind == "triangle":
        x, y = b.new(2)
        b.edges += [(u, x), (u, y), (x, y)]
        return y
    if kind == "cycle":
        q = rng.randint(4, 9)
        vs = [u] + b.new(q - 1)
        b.edges += zip(vs, vs[1:] + vs[:1])
        return vs[q // 2]
    if kind == "diamond":
        x, y, z = b.new(3)
        b.edges += [(u, x), (u, y), (x, y), (x, z), (y, z)]
        return z
    raise GraphError(kind)


def corpus_1122(count: int, seed: int = 0, scale: float = 1.0) -> list[dict]:
    """Connected T(1,1,2,2)-free graphs with a path of length at least ``3200 * scale``.

    Caterpillars (at most one leaf per spine vertex), spines threaded through
    triangles, short cycles and diamonds, three-legged spiders, long cycles,
    and ends carrying a big star or a pendant ``K_4``. Away from the ends all
    degrees are at most 3."""
    rng = random.Random(seed)
    need = int(3200 * scale)
    out = []
    for i in range(count):
        b = _Builder()
        style = ["caterpillar", "blocks", "spider", "cycle", "mixed"][i % 5]
        if style == "cycle":
            L = need + rng.randint(1, need // 5)
            vs = b.new(L)
            b.edges += zip(vs, vs[1:] + vs[:1])
            for v in vs:
                if rng.random() < 0.05:
                    b.leaves(v, 1)
            out.append({"name": f"cycle{L}", "graph": b.graph(), "family": "T(1,1,2,2)"})
            continue
        if style == "spider":
            c = b.new()[0]
            legs = [rng.randint(need // 2 + 1, need // 2 + need // 8) for _ in range(3)]
            for L in legs:
                s = b.path(L, start=c)
                for v in s[2:-1]:
                    if rng.random() < 0.1:
                        b.leaves(v, 1)
            out.append({"name": f"spider{'-'.join(map(str, legs))}", "graph": b.graph(), "family": "T(1,1,2,2)"})
            continue
        spine = [b.new()[0]]
        target = need + rng.randint(2, need // 5)
        density = rng.choice([0.0, 0.1, 0.3, 0.6])
        blocks = 0
        while len(spine) <= target:
            u = spine[-1]
            r = rng.random()
            # keep blocks away from both ends, where the end decorations go
            if style in ("blocks", "mixed") and r < 0.03 and 4 < len(spine) < target - 4:
                exit_v = _spine_block(b, u, rng.choice(["triangle", "cycle", "diamond"]), rng)
                blocks += 1
                v = b.new()[0]
                b.edges.append((exit_v, v))
                spine += [exit_v, v]
                continue
            v = b.new()[0]
            b.edges.append((u, v))
            spine.append(v)
            if style in ("caterpillar", "mixed") and len(spine) > 3 and rng.random() < density:
                b.leaves(u, 1)
        ends = [rng.choice(["plain", "star", "k4"]) for _ in range(2)]
        for kind, s in zip(ends, (spine, spine[::-1])):
            if kind == "star":
                b.leaves(s[1], rng.randint(3, 10))
            elif kind == "k4":
                b.clique_at(s[0], 4)
        out.append({"name": f"{style}{len(spine)}-b{blocks}-{ends[0]}-{ends[1]}",
                    "graph": b.graph(), "family": "T(1,1,2,2)"})
    return out


def corpus(count_122: int = 20, count_1122: int = 30, seed: int = 0, scale: float = 1.0,
           check: bool = True) -> list[dict]:
    """Both families; each item has ``name``, ``graph``, ``family`` and ``T``."""
    items = []
    for it in corpus_122(count_122, seed, scale):
        it["T"] = StarPattern((1, 2, 2))
        items.append(it)
    for it in corpus_1122(count_1122, seed + 1, scale):
        it["T"] = StarPattern((1, 1, 2, 2))
        items.append(it)
    if check:
        for it in items:
            if not it["graph"].is_connected():
                raise GraphError(f"{it['name']} is not connected")
            w = contains_star(it["graph"], it["T"])
            if w is not None:
                raise GraphError(f"{it['name']} contains {it['T']} at {w.centre}")
    return items


def planted_minor_host(X: Graph, rng: random.Random, blow: int = 2, subdiv: int = 2, noise: int = 3) -> Graph:
    """Host with an ``X`` minor: vertices become small trees, edges become
    subdivided paths, and some random pendant paths are added."""
    b = _Builder()
    branch = []
    for _ in range(X.n):
        size = rng.randint(1, blow)
        vs = b.new(size)
        for i in range(1, size):
            b.edges.append((vs[rng.randrange(i)], vs[i]))
        branch.append(vs)
    for u, v in X.edge_list():
        a, c = rng.choice(branch[u]), rng.choice(branch[v])
        inner = b.new(rng.randint(0, subdiv))
        chain = [a] + inner + [c]
        b.edges += zip(chain, chain[1:])
    for _ in range(noise):
        a = rng.randrange(b.n)
        b.path(rng.randint(1, 2), start=a)
    return b.graph()


def k4() -> Graph:
    return complete_graph(4)
