"""Decide and certify containment: subgraph (``<=``), topological minor
(``⊴``), minor (``≼``), their coloured variants, and a dedicated search for
subdivided stars.

All searches are exhaustive backtracking with deterministic, ascending
vertex-id tie-breaking. Absence is reported by returning ``None``; only
resource-guard violations raise.
"""

from __future__ import annotations

from .certificates import Embedding, MinorModel, StarPattern, StarWitness, TopologicalEmbedding
from .errors import GraphError, ResourceError, guard
from .graph import ColoredGraph, Graph, plain

__all__ = [
    "contains_star",
    "contains_subgraph",
    "contains_topological",
    "contains_minor",
    "topological_from_witness",
]


# ---------------------------------------------------------------------------
# subdivided stars
# ---------------------------------------------------------------------------

def _paths_exact(adj, start, length, blocked):
    """Simple paths of exactly ``length`` edges from ``start`` avoiding ``blocked``."""
    path = [start]
    on = set(path)

    def rec():
        if len(path) == length + 1:
            yield tuple(path)
            return
        for y in adj[path[-1]]:
            if y in blocked or y in on:
                continue
            path.append(y)
            on.add(y)
            yield from rec()
            path.pop()
            on.discard(y)

    yield from rec()


def _star_at(adj, c, long_legs, n_short, require):
    """Place the long legs (longest first), then pick short legs from the free
    neighbours. ``long_legs`` is a list of ``(slot, length)``."""
    chosen = {}
    used = {c}

    def finish():
        free = [u for u in adj[c] if u not in used]
        if len(free) < n_short:
            return None
        if require is not None and require not in used:
            if require in free and n_short > 0:
                free.remove(require)
                return [require] + free[:n_short - 1]
            return None
        return free[:n_short]

    def rec(i, prev):
        if i == len(long_legs):
            return finish()
        slot, p = long_legs[i]
        remaining = len(long_legs) - i + n_short
        if sum(1 for u in adj[c] if u not in used) < remaining:
            return None
        # equal-length legs are interchangeable: keep them in increasing order
        same = i > 0 and long_legs[i - 1][1] == p
        for path in _paths_exact(adj, c, p, used):
            if same and path <= prev:
                continue
            chosen[slot] = path
            used.update(path[1:])
            got = rec(i + 1, path)
            if got is not None:
                return got
            used.difference_update(path[1:])
            del chosen[slot]
        return None

    short = rec(0, None)
    if short is None:
        return None
    return chosen, short


def contains_star(G, T: StarPattern, centres=None, require=None) -> StarWitness | None:
    """Return a copy of ``T`` in ``G`` or ``None``.

    Candidate centres (degree at least ``k``) are tried in ascending order.
    ``require`` restricts the search to copies that use a given vertex.
    """
    G = plain(G)
    adj = G.adj
    k = T.k
    if k == 0:
        if require is not None:
            return StarWitness(require, ())
        return StarWitness(0, ()) if G.n else None
    long_legs = sorted(((i, p) for i, p in enumerate(T.legs) if p > 1), key=lambda x: (-x[1], x[0]))
    n_short = sum(1 for p in T.legs if p == 1)
    short_slots = [i for i, p in enumerate(T.legs) if p == 1]
    cands = range(G.n) if centres is None else sorted(centres)
    for c in cands:
        if len(adj[c]) < k:
            continue
        # a long leg needs a neighbour with somewhere else to go
        if sum(1 for u in adj[c] if len(adj[u]) >= 2) < len(long_legs):
            continue
        got = _star_at(adj, c, long_legs, n_short, require)
        if got is None:
            continue
        chosen, short = got
        legs = [None] * k
        for slot, path in chosen.items():
            legs[slot] = path
        for slot, u in zip(short_slots, short):
            legs[slot] = (c, u)
        return StarWitness(c, tuple(legs))
    return None


def star_witness_embedding(w: StarWitness) -> Embedding:
    """Convert a star witness into an embedding of ``T.graph()``."""
    return Embedding(w.vertex_map())


# ---------------------------------------------------------------------------
# subgraph (monomorphism)
# ---------------------------------------------------------------------------

def _split(G):
    if isinstance(G, ColoredGraph):
        return G.graph, G.colors
    return G, None


def _check_colored(pattern, host, colored):
    if colored:
        if not (isinstance(pattern, ColoredGraph) and isinstance(host, ColoredGraph)):
            raise GraphError("colored containment needs coloured pattern and host")
        if pattern.alpha != host.alpha:
            raise GraphError("pattern and host use different alpha")


def _search_order(P: Graph):
    order, placed = [], set()
    deg = [len(a) for a in P.adj]
    while len(order) < P.n:
        best, key = None, None
        for v in range(P.n):
            if v in placed:
                continue
            k = (sum(1 for u in P.adj[v] if u in placed), deg[v], -v)
            if key is None or k > key:
                best, key = v, k
        order.append(best)
        placed.add(best)
    return order


def contains_subgraph(pattern, host, colored: bool = False) -> Embedding | None:
    """Find an injective adjacency-preserving (and, if ``colored``, colour-preserving)
    map of ``pattern`` into ``host``."""
    _check_colored(pattern, host, colored)
    P, pc = _split(pattern)
    H, hc = _split(host)
    if not colored:
        pc = hc = None
    if P.n > H.n or P.m > H.m:
        return None
    pd = sorted((len(a) for a in P.adj), reverse=True)
    hd = sorted((len(a) for a in H.adj), reverse=True)
    if any(a > b for a, b in zip(pd, hd)):
        return None
    order = _search_order(P)
    placed_nbrs = []
    seen = set()
    for v in order:
        placed_nbrs.append([u for u in P.adj[v] if u in seen])
        seen.add(v)
    img = [-1] * P.n
    used = set()

    def ok(z, x):
        if x in used or len(H.adj[x]) < len(P.adj[z]):
            return False
        if pc is not None and pc[z] != hc[x]:
            return False
        return True

    def rec(i):
        if i == len(order):
            return True
        z = order[i]
        nb = placed_nbrs[i]
        if nb:
            anchor = min(nb, key=lambda u: len(H.adj[img[u]]))
            cands = H.adj[img[anchor]]
        else:
            cands = range(H.n)
        for x in cands:
            if not ok(z, x):
                continue
            if any(not H.has_edge(x, img[u]) for u in nb):
                continue
            img[z] = x
            used.add(x)
            if rec(i + 1):
                return True
            used.discard(x)
            img[z] = -1
        return False

    if rec(0):
        return Embedding(tuple(img))
    return None


# ---------------------------------------------------------------------------
# topological minors
# ---------------------------------------------------------------------------

def _threads(P: Graph):
    """Maximal paths whose inner vertices have degree 2 and whose ends do not.
    Returns ``(ends, inner_list)`` pairs; bare cycles are not threads."""
    deg = [len(a) for a in P.adj]
    seen_edges = set()
    out = []
    for a in range(P.n):
        if deg[a] == 2:
            continue
        for first in P.adj[a]:
            e = (min(a, first), max(a, first))
            if e in seen_edges:
                continue
            seen_edges.add(e)
            chain = [a, first]
            while deg[chain[-1]] == 2:
                x = chain[-1]
                nxt = P.adj[x][0] if P.adj[x][0] != chain[-2] else P.adj[x][1]
                seen_edges.add((min(x, nxt), max(x, nxt)))
                chain.append(nxt)
            out.append(chain)
    return out


def _reduce_pattern(P: Graph):
    """Suppress degree-2 pattern vertices where the result stays simple.
    Returns ``(R, keep, edge_info)``: ``R`` is the reduced graph on the kept
    vertices ``keep`` (new id = index), and ``edge_info[(a, b)]`` is the
    original thread from ``keep[a]`` to ``keep[b]``."""
    threads = sorted(_threads(P), key=len)
    pairs = set()
    kept, collapsed = [], []
    for chain in threads:
        a, b = chain[0], chain[-1]
        key = (min(a, b), max(a, b))
        if len(chain) > 2 and a != b and key not in pairs:
            collapsed.append(chain if a < b else chain[::-1])
        else:
            kept.append(chain)
        pairs.add(key)
    drop = set()
    for chain in collapsed:
        drop.update(chain[1:-1])
    keep = [v for v in range(P.n) if v not in drop]
    new = {v: i for i, v in enumerate(keep)}
    info = {}
    for chain in kept:
        for x, y in zip(chain, chain[1:]):
            k2 = (min(new[x], new[y]), max(new[x], new[y]))
            info[k2] = [x, y] if x < y else [y, x]
    for chain in collapsed:
        info[(new[chain[0]], new[chain[-1]])] = chain
    # edges not on any thread (both ends of degree != 2 are already threads of length 1,
    # edges inside bare cycles remain)
    for u, v in P.edges:
        if u in new and v in new:
            k2 = (min(new[u], new[v]), max(new[u], new[v]))
            info.setdefault(k2, [u, v])
    R = Graph(len(keep), list(info))
    return R, keep, info


def _expand_reduced(P, keep, info, img, paths):
    """Lift a topological embedding of the reduced pattern to ``P``."""
    vmap = [-1] * P.n
    for i, v in enumerate(keep):
        vmap[v] = img[i]
    edge_paths = {}
    for (a, b), chain in info.items():
        q = list(paths[(a, b)])
        if q[0] != img[a]:
            q.reverse()
        # chain runs keep[a] -> keep[b]; q runs img[a] -> img[b], len(q) >= len(chain)
        if chain[0] != keep[a]:
            chain = chain[::-1]
        L = len(chain) - 1
        pos = list(range(L)) + [len(q) - 1]
        for idx in range(1, L):
            vmap[chain[idx]] = q[idx]
        for idx in range(L):
            x, y = chain[idx], chain[idx + 1]
            seg = tuple(q[pos[idx]:pos[idx + 1] + 1])
            if x < y:
                edge_paths[(x, y)] = seg
            else:
                edge_paths[(y, x)] = seg[::-1]
    return TopologicalEmbedding(tuple(vmap), edge_paths)


def _prune_host(H: Graph, max_deg: int):
    """Host reduction valid when every branch vertex has degree at least 3:
    vertices of degree at most 1 are useless, and among degree-2 vertices with
    the same two neighbours at most ``max_deg`` can ever be used, since each
    one carries a path through both neighbours."""
    alive = set(range(H.n))
    deg = [len(a) for a in H.adj]
    changed = True
    while changed:
        changed = False
        for x in sorted(alive):
            if deg[x] <= 1:
                alive.discard(x)
                for y in H.adj[x]:
                    if y in alive:
                        deg[y] -= 1
                changed = True
        twins = {}
        for x in sorted(alive):
            if deg[x] == 2:
                pair = tuple(y for y in H.adj[x] if y in alive)
                twins.setdefault(pair, []).append(x)
        for (a, b), xs in twins.items():
            for x in xs[max_deg:]:
                alive.discard(x)
                deg[a] -= 1
                deg[b] -= 1
                changed = True
    if len(alive) == H.n:
        return H, list(range(H.n))
    return H.induced_subgraph(sorted(alive))


def contains_topological(pattern, host, colored: bool = False) -> TopologicalEmbedding | None:
    """Find a topological embedding of ``pattern`` in ``host``.

    Branch vertices are placed in a connected order; each new branch vertex
    is reached along a path from an already placed neighbour, and remaining
    edges to placed vertices are routed through unused vertices, shortest
    paths first. In coloured mode only branch vertices are colour-checked.
    """
    _check_colored(pattern, host, colored)
    P, pc = _split(pattern)
    H, hc = _split(host)
    if not colored:
        pc = hc = None
    if P.n > H.n:
        return None
    if pc is None:
        R, keep, info = _reduce_pattern(P)
        minlen = {e: len(chain) - 1 for e, chain in info.items()}
    else:
        R, keep, info = P, list(range(P.n)), {e: list(e) for e in P.edges}
        minlen = {e: 1 for e in P.edges}
    rc = None if pc is None else [pc[v] for v in keep]
    back = None
    if R.n and R.min_degree() >= 3:
        H, back = _prune_host(H, R.max_degree())
        if hc is not None:
            hc = [hc[x] for x in back]
    pd = sorted((len(a) for a in R.adj), reverse=True)
    hd = sorted((len(a) for a in H.adj), reverse=True)
    if any(a > b for a, b in zip(pd, hd)):
        return None
    order = _search_order(R)
    pos_in_order = {v: i for i, v in enumerate(order)}
    rdeg = [len(a) for a in R.adj]
    hadj = H.adj
    img = {}
    paths = {}
    used = set()

    def cand_ok(z, x):
        return x not in used and len(hadj[x]) >= rdeg[z] and (rc is None or rc[z] == hc[x])

    def slack_ok():
        for y, x in img.items():
            need = sum(1 for w in R.adj[y] if w not in img)
            if need and sum(1 for u in hadj[x] if u not in used) < need:
                return False
        return True

    def paths_between(src, dst, lo):
        """Simple src-dst paths through unused vertices, by increasing length."""
        if dst not in hadj[src] and not _reachable(src, dst):
            return
        limit = H.n - len(used) + 1
        for L in range(lo, limit + 1):
            path = [src]
            on = {src}

            def rec():
                last = path[-1]
                remaining = L - (len(path) - 1)
                if remaining == 1:
                    if dst in hadj[last]:
                        yield tuple(path) + (dst,)
                    return
                for y in hadj[last]:
                    if y in used or y in on or y == dst:
                        continue
                    path.append(y)
                    on.add(y)
                    yield from rec()
                    path.pop()
                    on.discard(y)

            yield from rec()

    def _reachable(src, dst):
        seen = {src}
        stack = [src]
        while stack:
            x = stack.pop()
            for y in hadj[x]:
                if y == dst:
                    return True
                if y not in used and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def paths_to_new(src, z, lo):
        """Paths from src ending at a valid image for new vertex z, by length."""
        leaf = rdeg[z] == 1
        limit = H.n - len(used)
        for L in range(lo, limit + 1):
            path = [src]
            on = {src}
            produced = False

            def rec():
                nonlocal produced
                last = path[-1]
                if len(path) - 1 == L:
                    if cand_ok(z, last):
                        produced = True
                        yield tuple(path)
                    return
                for y in hadj[last]:
                    if y in used or y in on:
                        continue
                    # a leaf endpoint dominates any longer continuation
                    if leaf and len(path) - 1 >= lo and cand_ok(z, last) and len(path) > 1:
                        return
                    path.append(y)
                    on.add(y)
                    yield from rec()
                    path.pop()
                    on.discard(y)

            yield from rec()
            # uncoloured leaves: every longer path passes a valid endpoint first
            if leaf and rc is None and produced:
                return

    def route_rest(z, todo, i):
        if not todo:
            if not slack_ok():
                return False
            return place(i + 1)
        y = todo[0]
        key = (min(y, z), max(y, z))
        for p in paths_between(img[y], img[z], minlen[key]):
            inner = p[1:-1]
            paths[key] = p
            used.update(inner)
            if route_rest(z, todo[1:], i):
                return True
            used.difference_update(inner)
            del paths[key]
        return False

    def place(i):
        if i == len(order):
            return True
        z = order[i]
        nb = [y for y in R.adj[z] if y in img]
        if not nb:
            for x in range(H.n):
                if not cand_ok(z, x):
                    continue
                img[z] = x
                used.add(x)
                if slack_ok() and place(i + 1):
                    return True
                used.discard(x)
                del img[z]
            return False
        nb.sort(key=lambda y: pos_in_order[y])
        y0 = nb[0]
        key0 = (min(y0, z), max(y0, z))
        for p in paths_to_new(img[y0], z, minlen[key0]):
            x = p[-1]
            img[z] = x
            paths[key0] = p
            used.update(p[1:])
            if route_rest(z, nb[1:], i):
                return True
            used.difference_update(p[1:])
            del paths[key0]
            del img[z]
        return False

    if not place(0):
        return None
    rimg = [img[i] for i in range(R.n)]
    rpaths = {}
    for (a, b), p in paths.items():
        rpaths[(a, b)] = p if p[0] == rimg[a] else p[::-1]
    if back is not None:
        rimg = [back[x] for x in rimg]
        rpaths = {e: tuple(back[x] for x in p) for e, p in rpaths.items()}
    return _expand_reduced(P, keep, info, rimg, rpaths)


def topological_from_witness(T: StarPattern, w: StarWitness) -> TopologicalEmbedding:
    """A star copy is in particular a topological embedding of ``T.graph()``."""
    vmap = w.vertex_map()
    paths = {}
    for leg_pattern, leg in zip(T.leg_vertices(), w.legs):
        chain = [0] + leg_pattern
        for idx in range(len(chain) - 1):
            paths[(min(chain[idx], chain[idx + 1]), max(chain[idx], chain[idx + 1]))] = (leg[idx], leg[idx + 1])
    return TopologicalEmbedding(tuple(vmap), paths)


# ---------------------------------------------------------------------------
# minors
# ---------------------------------------------------------------------------

def _reduce_host_for_minor(P: Graph, H: Graph):
    """Shrink the host without changing whether ``P`` is a minor of it.

    Isolated vertices go when ``P`` has none, leaves go when ``P`` has minimum
    degree 2, and degree-2 vertices are merged into a neighbour when ``P`` has
    minimum degree 3 (``H - x + ab`` equals ``H / xa``)."""
    mindeg = P.min_degree() if P.n else 0
    nbrs = {v: set(H.adj[v]) for v in range(H.n)}
    members = {v: [v] for v in range(H.n)}
    changed = True
    while changed:
        changed = False
        for v in sorted(nbrs):
            if v not in nbrs:
                continue
            d = len(nbrs[v])
            if (d == 0 and mindeg >= 1) or (d == 1 and mindeg >= 2):
                for u in nbrs[v]:
                    nbrs[u].discard(v)
                del nbrs[v]
                del members[v]
                changed = True
            elif d == 2 and mindeg >= 3:
                a, b = sorted(nbrs[v])
                nbrs[a].discard(v)
                nbrs[b].discard(v)
                nbrs[a].add(b)
                nbrs[b].add(a)
                members[a] = members[a] + members[v]
                del nbrs[v]
                del members[v]
                changed = True
    keep = sorted(nbrs)
    new = {v: i for i, v in enumerate(keep)}
    R = Graph(len(keep), [(new[u], new[v]) for u in keep for v in nbrs[u] if u < v])
    return R, [sorted(members[v]) for v in keep]


def _connected_sets(adj, seeds, allowed, max_size):
    """Connected vertex sets inside ``allowed`` containing at least one seed,
    each produced once (keyed by its smallest seed), smallest first."""
    out = []
    seeds = sorted(s for s in seeds if s in allowed)
    for si, s in enumerate(seeds):
        forbidden = set(seeds[:si])
        ok = allowed - forbidden

        def extend(sub, ext, nbhd):
            out.append(frozenset(sub))
            if len(sub) == max_size:
                return
            ext = list(ext)
            while ext:
                w = ext.pop()
                new_ext = list(ext)
                added = []
                for u in adj[w]:
                    if u in ok and u not in sub and u not in nbhd:
                        new_ext.append(u)
                        added.append(u)
                nbhd.update(added)
                sub.append(w)
                extend(sub, new_ext, nbhd)
                sub.pop()
                nbhd.difference_update(added)

        start = [u for u in adj[s] if u in ok]
        extend([s], start, set(start) | {s})
    out.sort(key=lambda S: (len(S), sorted(S)))
    return out


def contains_minor(pattern, host) -> MinorModel | None:
    """Find disjoint connected branch sets in ``host`` realizing ``pattern``.

    Brute force sized for patterns of at most 6 vertices and hosts of at most
    16 vertices once leaves and degree-2 vertices are reduced away
    (``STARUNIV_GUARD`` relaxes both)."""
    P = plain(pattern)
    H = plain(host)
    if P.n > guard("minor_pattern", 6):
        raise ResourceError(f"minor search limited to |pattern| <= {guard('minor_pattern', 6)}")
    if P.n == 0:
        return MinorModel(())
    if P.n > H.n or P.m > H.m:
        return None
    R, members = _reduce_host_for_minor(P, H)
    if P.n > R.n or P.m > R.m:
        return None
    # the guard bounds the host the search actually runs on
    if R.n > guard("minor_host", 16):
        raise ResourceError(f"minor search limited to |host| <= {guard('minor_host', 16)} "
                            f"after reduction (got {R.n} from {H.n})")
    order = _search_order(P)
    radj = R.adj
    sets = {}
    used = set()

    def boundary_ok():
        free = set(range(R.n)) - used
        for y, S in sets.items():
            need = sum(1 for w in P.adj[y] if w not in sets)
            if need:
                bnd = {u for x in S for u in radj[x] if u in free}
                if len(bnd) < need:
                    return False
        return True

    def rec(i):
        if i == len(order):
            return True
        z = order[i]
        free = set(range(R.n)) - used
        remaining = len(order) - i - 1
        max_size = len(free) - remaining
        if max_size < 1:
            return False
        nb = [y for y in P.adj[z] if y in sets]
        if nb:
            anchor = min(nb, key=lambda y: len(sets[y]))
            seeds = {u for x in sets[anchor] for u in radj[x] if u in free}
        else:
            seeds = free
        for S in _connected_sets(radj, seeds, free, max_size):
            if any(not any(u in sets[y] for x in S for u in radj[x]) for y in nb):
                continue
            sets[z] = S
            used.update(S)
            if boundary_ok() and rec(i + 1):
                return True
            used.difference_update(S)
            del sets[z]
        return False

    if not rec(0):
        return None
    out = []
    for z in range(P.n):
        out.append(tuple(sorted(v for x in sets[z] for v in members[x])))
    return MinorModel(tuple(out))
