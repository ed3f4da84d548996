"""Split a connected ``T``-free graph with a long path into a low-degree core
``G*`` and path-bounded parts ``G_v`` hanging at single core vertices.

The core is grown in the block-cut tree from a seed ``H*`` (one block with a
path of length ``m``, or the middle half of a block-tree path through
``4 p_k`` blocks), admitting only blocks whose vertices all have degree below
``k`` in ``G``.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field

from .certificates import StarPattern
from .connectivity import block_tree, has_path_of_length, longest_path, _is_cycle_block, _block_path
from .containment import contains_star
from .errors import GraphError, PreconditionError, StarUnivError
from .graph import plain

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DecompositionParams:
    """Path-length thresholds derived from ``T``. Passing ``relaxed_m`` swaps in
    a smaller ``m`` for exercising the pipeline on small graphs; such runs are
    flagged as outside the theorem."""

    T: StarPattern
    relaxed_m: int | None = None

    @property
    def k(self):
        return self.T.k

    @property
    def pk(self):
        return self.T.longest

    @property
    def true_m(self):
        return (self.k + 1) ** 2 * (2 * self.pk) ** 2

    @property
    def m_bound(self):
        return self.true_m if self.relaxed_m is None else self.relaxed_m

    @property
    def long_path_threshold(self):
        return 4 * self.pk * self.m_bound

    @property
    def core_path(self):
        return 2 * self.pk

    @property
    def part_path_bound(self):
        return 8 * self.pk + 2 * self.m_bound

    @property
    def theorem(self):
        return self.relaxed_m is None

    def to_obj(self):
        return {
            "k": self.k, "legs": list(self.T.legs), "m_bound": self.m_bound,
            "long_path_threshold": self.long_path_threshold, "core_path": self.core_path,
            "part_path_bound": self.part_path_bound, "theorem": self.theorem,
        }


@dataclass(frozen=True)
class Decomposition:
    core: tuple[int, ...]
    parts: dict = field(hash=False)
    trace: dict = field(default_factory=dict, hash=False, compare=False)

    def nontrivial_parts(self):
        return {v: p for v, p in self.parts.items() if len(p) > 1}

    def to_obj(self):
        return {
            "core": list(self.core),
            "parts": {str(v): list(p) for v, p in sorted(self.parts.items())},
            "trace": self.trace,
        }

    @classmethod
    def from_obj(cls, obj):
        return cls(tuple(obj["core"]), {int(v): tuple(p) for v, p in obj["parts"].items()},
                   obj.get("trace", {}))


def _params(T, relaxed_m):
    if isinstance(T, DecompositionParams):
        return T
    return DecompositionParams(T, relaxed_m)


# ---------------------------------------------------------------------------
# block bound
# ---------------------------------------------------------------------------

def check_block_bound(G, T: StarPattern, relaxed_m: int | None = None) -> dict:
    """Confirm that no block with a vertex of degree at least ``k`` has a path
    of length ``m``. Reports ``inapplicable`` (with a witness) if ``T <= G``."""
    G = plain(G)
    P = _params(T, relaxed_m)
    w = contains_star(G, P.T)
    if w is not None:
        return {"status": "inapplicable", "reason": f"contains {P.T}", "witness": w.to_obj()}
    bt = block_tree(G)
    entries = []
    status = "pass"
    for i, B in enumerate(bt.blocks):
        heavy = [v for v in B if len(G.adj[v]) >= P.k]
        if not heavy:
            continue
        found, path, conclusive = has_path_of_length(G, P.m_bound, B)
        if found:
            entries.append({"block": i, "status": "violation", "path": list(path)})
            status = "violation"
        elif not conclusive:
            entries.append({"block": i, "status": "inconclusive"})
            if status == "pass":
                status = "inconclusive"
        else:
            entries.append({"block": i, "status": "pass"})
    return {"status": status, "m_bound": P.m_bound, "theorem": P.theorem, "blocks": entries}


# ---------------------------------------------------------------------------
# decomposition
# ---------------------------------------------------------------------------

def _tree(bt):
    """Block-cut tree adjacency: node ``i`` is block ``i``; node ``nb + c`` is
    the ``c``-th cutvertex."""
    nb = len(bt.blocks)
    cidx = {a: nb + i for i, a in enumerate(bt.cutvertices)}
    tadj = [[] for _ in range(nb + len(cidx))]
    for a, i in bt.tree_edges:
        tadj[i].append(cidx[a])
        tadj[cidx[a]].append(i)
    return nb, cidx, tadj


def _farthest(tadj, start, nb):
    dist = {start: 0}
    parent = {start: None}
    queue = deque([start])
    far = start
    while queue:
        x = queue.popleft()
        if x < nb and dist[x] > dist[far]:
            far = x
        for y in tadj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                parent[y] = x
                queue.append(y)
    return far, parent


def _block_with_long_path(G, bt, P):
    """Case 1 seed: first block demonstrably holding a path of length ``m`` whose
    vertices all have degree below ``k``."""
    m = P.m_bound
    for i, B in enumerate(bt.blocks):
        if len(B) < m + 1:
            continue
        if _is_cycle_block(G, B):
            path, _ = _block_path(G, B)
        else:
            _, path, _ = longest_path(G, B, target=m, budget=200_000)
        if len(path) - 1 < m:
            continue
        if any(len(G.adj[v]) >= P.k for v in B):
            if P.theorem:
                raise StarUnivError(f"block {i} has a path of length {m} and a vertex of degree >= {P.k}; "
                                    "the block bound fails for this T-free graph", {"block": list(B)})
            continue
        return i, path[:m + 1]
    return None


def decompose(G, T: StarPattern, relaxed_m: int | None = None, check: bool = True) -> Decomposition:
    G = plain(G)
    P = _params(T, relaxed_m)
    if P.k < 3:
        raise GraphError("decomposition needs k >= 3")
    if G.n == 0 or not G.is_connected():
        raise PreconditionError("not connected", {"components": G.components()})
    if check:
        w = contains_star(G, P.T)
        if w is not None:
            raise PreconditionError(f"graph contains {P.T}", {"star": w.to_obj()})
        found, _, conclusive = has_path_of_length(G, P.long_path_threshold)
        if not found:
            raise PreconditionError(
                f"no path of length {P.long_path_threshold}" + ("" if conclusive else " (search inconclusive)"),
                {"threshold": P.long_path_threshold, "conclusive": conclusive})
    bt = block_tree(G)
    nb, cidx, tadj = _tree(bt)
    deg = [len(a) for a in G.adj]
    light = [all(deg[v] < P.k for v in B) for B in bt.blocks]

    trace = {"theorem": P.theorem, "m_bound": P.m_bound}
    seed_nodes = None
    got = _block_with_long_path(G, bt, P)
    if got is not None:
        seed_nodes = [got[0]]
        trace["case"] = "long block"
    else:
        a, _ = _farthest(tadj, 0, nb)
        b, parent = _farthest(tadj, a, nb)
        chain = []
        x = b
        while x is not None:
            chain.append(x)
            x = parent[x]
        blocks_on = [x for x in chain if x < nb]
        need = 4 * P.pk
        if len(blocks_on) < need:
            raise PreconditionError(f"no block with a path of length {P.m_bound} and no block-tree path "
                                    f"through {need} blocks")
        # chain alternates block, cutvertex, block, ...; take blocks p_k+1..3p_k
        start = chain.index(blocks_on[P.pk])
        stop = chain.index(blocks_on[3 * P.pk - 1])
        seed_nodes = chain[start:stop + 1]
        trace["case"] = "block path"
        bad = [x for x in seed_nodes if x < nb and not light[x]]
        if bad:
            raise StarUnivError("middle blocks of a long block-tree path contain a vertex of degree >= k",
                                {"blocks": [list(bt.blocks[x]) for x in bad]})
    trace["seed_blocks"] = [list(bt.blocks[x]) for x in seed_nodes if x < nb]
    log.debug("H* from %s: %d blocks", trace["case"], len(trace["seed_blocks"]))

    # K~*: grow through cutvertex nodes freely and through light blocks
    inside = set(seed_nodes)
    queue = deque(seed_nodes)
    while queue:
        x = queue.popleft()
        for y in tadj[x]:
            if y in inside:
                continue
            if y < nb and not light[y]:
                continue
            inside.add(y)
            queue.append(y)
    # K*: drop cutvertex leaves
    kstar = {x for x in inside if x < nb or sum(1 for y in tadj[x] if y in inside) > 1}
    core = set()
    for x in kstar:
        if x < nb:
            core.update(bt.blocks[x])

    parts = {v: {v} for v in core}
    seen = set(kstar)
    for s in range(len(tadj)):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in tadj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        verts = set()
        for x in comp:
            if x < nb:
                verts.update(bt.blocks[x])
            else:
                verts.add(bt.cutvertices[x - nb])
        touch = verts & core
        if len(touch) != 1:
            raise StarUnivError("a component of K - K* meets the core in more than one vertex",
                                {"vertices": sorted(touch)})
        v = touch.pop()
        parts[v] |= verts
    trace["nontrivial_parts"] = sum(1 for p in parts.values() if len(p) > 1)
    return Decomposition(tuple(sorted(core)), {v: tuple(sorted(p)) for v, p in sorted(parts.items())}, trace)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def _connected(G, vs):
    vs = set(vs)
    if not vs:
        return False
    s = min(vs)
    return len(G.distances_from(s, vs)) == len(vs)


def verify_decomposition(G, T: StarPattern, D: Decomposition, relaxed_m: int | None = None) -> dict:
    """Check properties (1) to (5) independently. Each entry is
    ``{"ok": True | False | None, ...}``; ``None`` means inconclusive."""
    G = plain(G)
    P = _params(T, relaxed_m)
    core = set(D.core)
    report = {}

    covered = set(core)
    for p in D.parts.values():
        covered |= set(p)
    memb = {}
    for v, p in D.parts.items():
        for x in p:
            memb.setdefault(x, set()).add(v)
    missing_edges = []
    for a, b in G.edge_list():
        if (a in core and b in core) or memb.get(a, set()) & memb.get(b, set()):
            continue
        missing_edges.append([a, b])
    issues = []
    if covered != set(range(G.n)):
        issues.append({"uncovered": sorted(set(range(G.n)) - covered)})
    if missing_edges:
        issues.append({"edges_outside": missing_edges[:20]})
    if set(D.parts) != core:
        issues.append({"parts_not_indexed_by_core": sorted(set(D.parts) ^ core)})
    if not _connected(G, core):
        issues.append({"core_disconnected": True})
    for v, p in D.parts.items():
        if v not in p or not _connected(G, p):
            issues.append({"part_disconnected": v})
    report["1_cover"] = {"ok": not issues, "issues": issues}

    issues = []
    for v, p in D.parts.items():
        inter = sorted(set(p) & core)
        if inter != [v]:
            issues.append({"part": v, "core_intersection": inter})
    seen = {}
    for v, p in D.parts.items():
        for x in p:
            if x in seen:
                issues.append({"parts": [seen[x], v], "shared": x})
            seen[x] = v
    report["2_intersections"] = {"ok": not issues, "issues": issues[:20]}

    heavy = sorted(v for v in core if len(G.adj[v]) >= P.k)
    report["3_core_degree"] = {"ok": not heavy, "heavy": heavy}

    found, path, conclusive = has_path_of_length(G, P.core_path, core)
    report["4_core_path"] = {"ok": True if found else (False if conclusive else None),
                             "length": P.core_path, "path": list(path) if found else None}

    bad, unknown = [], []
    for v, p in sorted(D.parts.items()):
        if len(p) <= P.part_path_bound:
            continue
        found, path, conclusive = has_path_of_length(G, P.part_path_bound, p)
        if found:
            bad.append({"part": v, "path": list(path)})
        elif not conclusive:
            unknown.append(v)
    report["5_part_paths"] = {"ok": False if bad else (None if unknown else True),
                              "bound": P.part_path_bound, "violations": bad, "inconclusive": unknown}
    report["ok"] = all(report[k]["ok"] is True for k in
                       ("1_cover", "2_intersections", "3_core_degree", "4_core_path", "5_part_paths"))
    report["theorem"] = P.theorem
    return report
