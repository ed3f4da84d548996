"""Blocks, independent paths and long paths/cycles.

The block-cut tree uses an iterative lowpoint search, since cores reach
several thousand vertices. Independent paths come from a unit-capacity flow
on the vertex-split digraph. Longest paths are NP-hard, so alongside an exact
pruned DFS for small vertex sets there is a block-tree bounding scheme that
returns a lower bound with a witness path and an upper bound.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass

from .errors import GraphError, PreconditionError, ResourceError, guard
from .graph import Graph, plain


# ---------------------------------------------------------------------------
# block-cut tree
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BlockTree:
    """Blocks (sorted vertex tuples, ordered by smallest vertex), cutvertices
    and the incidences ``(cutvertex, block index)``."""

    cutvertices: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    tree_edges: tuple[tuple[int, int], ...]

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, B in enumerate(self.blocks) if v in B]

    def membership(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, B in enumerate(self.blocks):
            for v in B:
                out.setdefault(v, []).append(i)
        return out

    def to_obj(self):
        return {
            "cutvertices": list(self.cutvertices),
            "blocks": [list(B) for B in self.blocks],
            "tree_edges": [list(e) for e in self.tree_edges],
        }


def block_tree(G) -> BlockTree:
    G = plain(G)
    adj = G.adj
    n = G.n
    disc = [-1] * n
    low = [0] * n
    blocks = []
    cut = set()
    t = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if not adj[root]:
            disc[root] = t
            t += 1
            blocks.append((root,))
            continue
        disc[root] = low[root] = t
        t += 1
        root_children = 0
        estack = []
        # frames: (vertex, parent, next neighbour index)
        stack = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            v, parent, i = frame
            if i < len(adj[v]):
                frame[2] += 1
                w = adj[v][i]
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    estack.append((v, w))
                    stack.append([w, v, 0])
                    if v == root:
                        root_children += 1
                elif w != parent and disc[w] < disc[v]:
                    estack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                continue
            stack.pop()
            if parent == -1:
                continue
            if low[v] < low[parent]:
                low[parent] = low[v]
            if low[v] >= disc[parent]:
                comp = set()
                while True:
                    a, b = estack.pop()
                    comp.add(a)
                    comp.add(b)
                    if (a, b) == (parent, v):
                        break
                blocks.append(tuple(sorted(comp)))
                if parent != root:
                    cut.add(parent)
        if root_children > 1:
            cut.add(root)
    blocks.sort()
    tree_edges = []
    for i, B in enumerate(blocks):
        for v in B:
            if v in cut:
                tree_edges.append((v, i))
    tree_edges.sort()
    return BlockTree(tuple(sorted(cut)), tuple(blocks), tuple(tree_edges))


def is_two_connected(G) -> bool:
    G = plain(G)
    if G.n < 3:
        return False
    bt = block_tree(G)
    return len(bt.blocks) == 1


# ---------------------------------------------------------------------------
# independent paths
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PathFamily:
    u: int
    v: int
    paths: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.paths)

    def to_obj(self):
        return {"u": self.u, "v": self.v, "paths": [list(p) for p in self.paths]}


def independent_paths(G, u: int, v: int, limit: int | None = None) -> PathFamily:
    """A maximum family of internally disjoint ``u``-``v`` paths, capped at ``limit``.

    An edge ``uv`` counts as one path; the rest come from augmenting paths in
    the vertex-split flow network of ``G - uv``."""
    G = plain(G)
    G._check_vertex(u)
    G._check_vertex(v)
    if u == v:
        raise GraphError("independent paths need distinct endpoints")
    if limit is None:
        limit = G.n
    if limit < 1:
        raise GraphError("limit must be positive")
    adj = G.adj
    paths = []
    if G.has_edge(u, v):
        paths.append((u, v))
    # node 2x is in(x), 2x+1 is out(x); ``flow`` holds the arcs carrying one unit
    flow = set()
    src, sink = 2 * u + 1, 2 * v

    def residual_nbrs(a):
        x, side = divmod(a, 2)
        if side == 0:
            if x not in (u, v) and (a, a + 1) not in flow:
                yield a + 1
            for y in adj[x]:
                if (2 * y + 1, a) in flow:
                    yield 2 * y + 1
        else:
            if x == v:
                return
            for y in adj[x]:
                if y == u or {x, y} == {u, v}:
                    continue
                if (a, 2 * y) not in flow:
                    yield 2 * y
            if x not in (u, v) and (a - 1, a) in flow:
                yield a - 1

    found = 0
    while len(paths) + found < limit:
        prev = {src: None}
        queue = deque([src])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in residual_nbrs(a):
                if b not in prev:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while prev[b] is not None:
            a = prev[b]
            if (b, a) in flow:
                flow.discard((b, a))
            else:
                flow.add((a, b))
            b = a
        found += 1
    succ = {}
    for a, b in flow:
        succ.setdefault(a, []).append(b)
    for start in sorted(succ.get(src, [])):
        path = [u]
        node = start
        while node != sink:
            x, side = divmod(node, 2)
            if side == 0:
                path.append(x)
                node = 2 * x + 1
            else:
                node = succ[node][0]
        path.append(v)
        paths.append(tuple(path))
    paths.sort(key=lambda p: (len(p), p))
    return PathFamily(u, v, tuple(paths))


def count_independent(G, u, v, limit=None) -> int:
    return len(independent_paths(G, u, v, limit))


# ---------------------------------------------------------------------------
# longest paths
# ---------------------------------------------------------------------------

def longest_path(G, vertices=None, target: int | None = None, starts=None, ends=None,
                 budget: int | None = None):
    """Exhaustive DFS for a longest path inside ``vertices``.

    Returns ``(length, path, exact)``. The search stops as soon as a path of
    length ``target`` appears. ``starts``/``ends`` restrict the endpoints.
    ``exact`` is False when the expansion budget ran out first."""
    G = plain(G)
    allowed = set(range(G.n)) if vertices is None else set(vertices)
    if not allowed:
        return -1, (), True
    if budget is None:
        budget = guard("longest_path_budget", 2_000_000)
    adj = G.adj
    best = [-1, ()]
    steps = [0]
    exhausted = [False]
    endset = None if ends is None else set(ends)

    def reach_bound(x, on):
        # vertices reachable from x avoiding the current path
        seen = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for z in adj[y]:
                if z in allowed and z not in on and z not in seen:
                    seen.add(z)
                    stack.append(z)
        return len(seen) - 1

    class Done(Exception):
        pass

    def rec(path, on):
        steps[0] += 1
        if steps[0] > budget:
            exhausted[0] = True
            raise Done
        L = len(path) - 1
        if (endset is None or path[-1] in endset) and L > best[0]:
            best[0] = L
            best[1] = tuple(path)
            if target is not None and L >= target:
                raise Done
        if L + reach_bound(path[-1], on) <= best[0]:
            return
        for z in adj[path[-1]]:
            if z in allowed and z not in on:
                path.append(z)
                on.add(z)
                rec(path, on)
                path.pop()
                on.discard(z)

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, len(allowed) + 100))
    try:
        for s in sorted(allowed if starts is None else set(starts) & allowed):
            rec([s], {s})
    except Done:
        pass
    finally:
        sys.setrecursionlimit(old)
    return best[0], best[1], not exhausted[0]


def _is_cycle_block(G, B):
    Bs = set(B)
    return len(B) >= 3 and all(sum(1 for y in G.adj[x] if y in Bs) == 2 for x in B)


def _cycle_order(G, B):
    Bs = set(B)
    start = B[0]
    order = [start]
    prev, cur = None, start
    while True:
        nxt = [y for y in G.adj[cur] if y in Bs and y != prev]
        if prev is None:
            nxt = nxt[:1]
        if nxt[0] == start:
            break
        prev, cur = cur, nxt[0]
        order.append(cur)
    return order


def _block_path(G, B, a=None, b=None, exact_limit=22):
    """A long path inside block ``B`` from ``a`` to ``b`` (either may be None).
    Returns ``(path, upper)``: a concrete path and an upper bound on the
    longest such path."""
    B = tuple(B)
    if len(B) == 1:
        return (B[0],), 0
    if len(B) == 2:
        x, y = B
        if a is not None and b is not None:
            return (a, b), 1
        if a is not None:
            return (a, y if a == x else x), 1
        if b is not None:
            return (y if b == x else x, b), 1
        return (x, y), 1
    if _is_cycle_block(G, B):
        cyc = _cycle_order(G, B)
        Lc = len(cyc)
        if a is None and b is None:
            return tuple(cyc), Lc - 1
        if a is None or b is None:
            s = a if a is not None else b
            i = cyc.index(s)
            p = tuple(cyc[i:] + cyc[:i])
            return (p if a is not None else p[::-1]), Lc - 1
        i, j = cyc.index(a), cyc.index(b)
        arc1 = [cyc[(i + t) % Lc] for t in range((j - i) % Lc + 1)]
        arc2 = [cyc[(i - t) % Lc] for t in range((i - j) % Lc + 1)]
        p = arc1 if len(arc1) >= len(arc2) else arc2
        return tuple(p), len(p) - 1
    upper = len(B) - 1
    budget = guard("block_path_budget", 200_000) if len(B) <= exact_limit else 20_000
    starts = None if a is None else [a]
    ends = None if b is None else [b]
    if a is None and b is not None:
        starts, ends = [b], None
    L, path, exact = longest_path(G, B, target=len(B) - 1, starts=starts, ends=ends, budget=budget)
    if a is None and b is not None:
        path = path[::-1]
    if exact:
        upper = L
    return path, upper


@dataclass(frozen=True)
class PathBounds:
    lower: int
    upper: int
    path: tuple[int, ...]

    @property
    def exact(self):
        return self.lower == self.upper


def longest_path_bounds(G, vertices=None) -> PathBounds:
    """Bounds on the longest path of ``G[vertices]`` via its block-cut tree.

    The upper bound is the heaviest block-tree path with blocks weighted by
    their own longest path (exact on small blocks and cycles, ``|B| - 1``
    otherwise); the lower bound realizes a concrete path along that block
    sequence."""
    G = plain(G)
    if vertices is not None:
        H, old = G.induced_subgraph(vertices)
    else:
        H, old = G, None
    if H.n == 0:
        return PathBounds(-1, -1, ())
    bt = block_tree(H)
    weights = []
    for B in bt.blocks:
        _, up = _block_path(H, B)
        weights.append(up)
    # block-cut tree as a graph: block i -> node i, cutvertex c -> node nb + idx
    nb = len(bt.blocks)
    cidx = {c: nb + i for i, c in enumerate(bt.cutvertices)}
    tadj = [[] for _ in range(nb + len(cidx))]
    for c, i in bt.tree_edges:
        tadj[i].append(cidx[c])
        tadj[cidx[c]].append(i)
    w = weights + [0] * len(cidx)
    best_total, best_seq = -1, None
    seen = [False] * len(tadj)
    for root in range(len(tadj)):
        if seen[root]:
            continue
        order, parent = [], {root: None}
        stack = [root]
        seen[root] = True
        while stack:
            x = stack.pop()
            order.append(x)
            for y in tadj[x]:
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    stack.append(y)
        down = {}
        down_child = {}
        for x in reversed(order):
            best_c, best_v = None, 0
            tops = []
            for y in tadj[x]:
                if parent.get(y) == x:
                    tops.append((down[y], y))
            tops.sort(reverse=True)
            if tops and tops[0][0] > 0:
                best_v, best_c = tops[0]
            down[x] = w[x] + best_v
            down_child[x] = best_c
            total = w[x] + sum(t for t, _ in tops[:2])
            if total > best_total:
                best_total = total
                best_seq = (x, [y for _, y in tops[:2]])
    x, kids = best_seq
    seq_a = []
    if kids:
        y = kids[0]
        while y is not None:
            seq_a.append(y)
            y = down_child[y]
    seq_b = []
    if len(kids) > 1:
        y = kids[1]
        while y is not None:
            seq_b.append(y)
            y = down_child[y]
    seq = seq_a[::-1] + [x] + seq_b
    path = _realize(H, bt, seq, nb)
    lower = len(path) - 1
    upper = best_total
    if old is not None:
        path = tuple(old[x] for x in path)
    return PathBounds(lower, max(upper, lower), tuple(path))


def _realize(H, bt, seq, nb):
    while seq and seq[0] >= nb:
        seq = seq[1:]
    while seq and seq[-1] >= nb:
        seq = seq[:-1]
    if not seq:
        return (bt.cutvertices[0],) if bt.cutvertices else (bt.blocks[0][0],)
    blocks = [bt.blocks[i] for i in seq if i < nb]
    cuts = [bt.cutvertices[i - nb] for i in seq if i >= nb]
    out = []
    for idx, B in enumerate(blocks):
        a = cuts[idx - 1] if idx > 0 else None
        b = cuts[idx] if idx < len(cuts) else None
        p, _ = _block_path(H, B, a, b)
        if not p:
            p = tuple(x for x in (a, b) if x is not None)
        if out and p and p[0] == out[-1]:
            p = p[1:]
        out.extend(p)
    return tuple(out)


def has_path_of_length(G, length: int, vertices=None):
    """Decide ``P_length <= G[vertices]``; returns ``(answer, witness, conclusive)``."""
    b = longest_path_bounds(G, vertices)
    if b.lower >= length:
        return True, b.path[:length + 1], True
    if b.upper < length:
        return False, None, True
    L, path, exact = longest_path(G, vertices, target=length)
    if L >= length:
        return True, path[:length + 1], True
    return False, None, exact


# ---------------------------------------------------------------------------
# long cycles
# ---------------------------------------------------------------------------

def long_cycle(G, n: int, strict: bool = True):
    """A cycle of length at least ``n`` in a 2-connected graph that has a path
    of length ``n**2``.

    With ``strict`` the precondition is verified first and a violation raises
    :class:`PreconditionError` naming which half failed; otherwise the search
    runs regardless and may return ``None``."""
    G = plain(G)
    if n < 1:
        raise GraphError("n must be positive")
    if strict:
        if not is_two_connected(G):
            raise PreconditionError("not 2-connected")
        ok, _, conclusive = has_path_of_length(G, n * n)
        if not ok:
            raise PreconditionError(f"no path of length {n * n}"
                                    + ("" if conclusive else " found within the search budget"))
    need = max(n, 3)
    adj = G.adj
    budget = guard("long_cycle_budget", 5_000_000)
    steps = 0
    for s in range(G.n):
        path = [s]
        on = {s}
        iters = [iter(adj[s])]
        while iters:
            steps += 1
            if steps > budget:
                raise ResourceError("long cycle search exceeded its budget")
            y = next(iters[-1], None)
            if y is None:
                iters.pop()
                on.discard(path.pop())
                continue
            if y == s and len(path) >= need:
                return tuple(path)
            if y in on or y < s:
                continue
            path.append(y)
            on.add(y)
            iters.append(iter(adj[y]))
    return None
