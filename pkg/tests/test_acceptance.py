"""The ten acceptance criteria, each at its stated scale and tolerance.

Every criterion records a PASS/FAIL line (shown in the terminal summary) and
writes the certificates it produced to a bundle that criterion 10 re-checks
through the ``verify`` subcommand.
"""

import json
import os
import random
import tempfile
import time
from functools import lru_cache

import pytest

from conftest import ACCEPTANCE
import oracles
from staruniv import documents as docs
from staruniv.certificates import Embedding, StarPattern
from staruniv.cli import main as cli_main
from staruniv.connectivity import independent_paths, is_two_connected, long_cycle
from staruniv.containment import contains_star, contains_subgraph, contains_topological
from staruniv.decomposition import decompose, verify_decomposition
from staruniv.gadgets import (alternating_sequences, build_G_alpha, check_boundary, check_claim1,
                              check_claim2)
from staruniv.generators import (all_graphs, corpus, corpus_122, corpus_1122, gnp, petersen,
                                 planted_minor_host, random_max_degree, random_two_connected)
from staruniv.graph import ColoredGraph, complete_graph, cycle_graph, subdivide_edge
from staruniv.io import dumps, graph_to_obj
from staruniv.reduction import blowup, derive_gamma_star, minor_to_topminor_witness
from staruniv.skfree import embed_skfree
from staruniv.universal import RegistryUniversal, embed_universal, with_tail
from staruniv.validate import problems_topological

CERT_DIR = tempfile.mkdtemp(prefix="staruniv-certs-")
EMITTED = {}
PROPS = ("1_cover", "2_intersections", "3_core_degree", "4_core_path", "5_part_paths")


def report(n, ok, detail):
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    print(line)
    ACCEPTANCE.append(line)
    return ok


def save_certs(n, items):
    path = os.path.join(CERT_DIR, f"criterion{n}.json")
    with open(path, "wb") as fh:
        fh.write(dumps(docs.bundle_doc(items, criterion=n)))
    EMITTED[n] = (path, len(items))


@lru_cache(maxsize=None)
def full_corpus():
    return tuple(corpus(20, 30, seed=0))


def test_criterion_01_star_relation_equivalence():
    rng = random.Random(101)
    t0 = time.time()
    bad, certs, positive = [], [], 0
    for i in range(500):
        n = rng.randint(3, 12)
        G = gnp(n, rng.uniform(0.1, 0.6), rng)
        T = StarPattern(tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 4))))
        P = T.graph()
        w = contains_star(G, T)
        e = contains_subgraph(P, G)
        t = contains_topological(P, G)
        if len({w is None, e is None, t is None}) != 1:
            bad.append((i, T.legs))
        if w is not None:
            positive += 1
            certs.append(docs.star_doc(G, T, w))
        if e is not None:
            certs.append(docs.subgraph_doc(P, G, e))
        if t is not None:
            certs.append(docs.topological_doc(P, G, t))
    dt = time.time() - t0
    save_certs(1, certs)
    ok = report(1, not bad and dt < 60,
                f"500 pairs, {positive} positive, {len(bad)} disagreements, {dt:.1f}s (limit 60s)")
    assert ok, bad[:5]


def _separators(G):
    """Brute force: smallest vertex set separating each non-adjacent pair."""
    n = G.n
    nb = [sum(1 << u for u in G.adj[v]) for v in range(n)]
    todo = {(u, v) for u in range(n) for v in range(u + 1, n) if not G.has_edge(u, v)}
    best = {}
    for S in sorted(range(1 << n), key=lambda s: bin(s).count("1")):
        if not todo:
            break
        label = [-1] * n
        for s in range(n):
            if S >> s & 1 or label[s] >= 0:
                continue
            comp, frontier = 1 << s, 1 << s
            while frontier:
                x = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                new = nb[x] & ~comp & ~S
                comp |= new
                frontier |= new
            for x in range(n):
                if comp >> x & 1:
                    label[x] = s
        for u, v in list(todo):
            if not (S >> u & 1 or S >> v & 1) and label[u] != label[v]:
                best[(u, v)] = bin(S).count("1")
                todo.discard((u, v))
    return best


def test_criterion_02_menger_exhaustive():
    t0 = time.time()
    graphs, pairs, bad, certs = 0, 0, [], []
    for n in range(2, 9):
        for G in all_graphs(n):
            graphs += 1
            for (u, v), sep in _separators(G).items():
                pairs += 1
                fam = independent_paths(G, u, v)
                if len(fam) != sep:
                    bad.append((G.edge_list(), u, v, len(fam), sep))
                certs.append(docs.paths_doc(G, fam))
    dt = time.time() - t0
    save_certs(2, certs)
    ok = report(2, not bad and dt < 600,
                f"{graphs} graphs on 2..8 vertices, {pairs} non-adjacent pairs, "
                f"{len(bad)} disagreements, {dt:.1f}s (limit 600s)")
    assert ok, bad[:5]


def test_criterion_03_derived_graph_shadow():
    rng = random.Random(303)
    bad, certs = [], []
    for i in range(200):
        n = rng.randint(2, 8)
        G = gnp(n, rng.uniform(0.2, 0.7), rng)
        N = rng.randint(1, 6)
        t = rng.randint(1, N)
        B = blowup(G, N)
        D = derive_gamma_star(B.graph, t)
        got = {(a, b) for a, b in D.edges if b < n}
        want = set(G.edges)
        for u in range(n):
            for v in range(u + 1, n):
                if not G.has_edge(u, v) and oracles.min_separator(G, u, v) >= t:
                    want.add((u, v))
        if got != want:
            bad.append((G.edge_list(), N, t, sorted(got ^ want)))
        for u, v in sorted(got - set(G.edges)):
            certs.append(docs.paths_doc(B.graph, independent_paths(B.graph, u, v, t)))
    save_certs(3, certs)
    ok = report(3, not bad, f"200 random (G, N, t), {len(bad)} failures, {len(certs)} derived edges certified")
    assert ok, bad[:3]


def test_criterion_04_minor_to_topological_minor():
    rng = random.Random(404)
    cases = [(petersen(), complete_graph(5), "Petersen/K5")]
    for i in range(20):
        X = complete_graph(4 if i % 2 else 5)
        cases.append((planted_minor_host(X, rng, blow=2, subdiv=2, noise=3), X, f"planted K{X.n} #{i}"))
    bad, certs = [], []
    for H, X, name in cases:
        wit = minor_to_topminor_witness(H, X)
        if wit is None:
            bad.append((name, "no witness"))
            continue
        doc = docs.topminor_doc(H, X, wit)
        Y = wit.Y
        simple = len(set(Y.edges)) == Y.m and all(a != b for a, b in Y.edges)
        problems = docs.verify_document(doc)
        if Y.min_degree() < 3 or not simple or problems:
            bad.append((name, Y.min_degree(), problems[:3]))
        certs.append(doc)
    save_certs(4, certs)
    ok = report(4, not bad, f"{len(cases)} hosts (Petersen + 20 planted K4/K5), {len(bad)} failures")
    assert ok, bad


def test_criterion_05_long_cycle():
    rng = random.Random(505)
    done, bad, certs, tries = 0, [], [], 0
    by_n = {}
    while done < 100:
        tries += 1
        G = random_two_connected(rng.randint(4, 14), rng, ears=rng.randint(1, 5))
        if G.n > 14 or not is_two_connected(G):
            continue
        L = oracles.longest_path_length(G)
        n = int(L ** 0.5)
        while (n + 1) ** 2 <= L:
            n += 1
        if n < 2:
            continue
        c = long_cycle(G, n)
        done += 1
        by_n[n] = by_n.get(n, 0) + 1
        if c is None or len(c) < n:
            bad.append((G.edge_list(), n, c))
            continue
        certs.append(docs.subgraph_doc(cycle_graph(len(c)), G, Embedding(tuple(c))))
    save_certs(5, certs)
    ok = report(5, not bad, f"100 two-connected graphs on <= 14 vertices (cases n={dict(sorted(by_n.items()))}), "
                f"{len(bad)} failures")
    assert ok, bad[:3]


def test_criterion_06_skfree_embedding():
    rng = random.Random(606)
    bad, certs = [], []
    for i in range(200):
        k = rng.choice([4, 5, 6])
        n = rng.randint(3, 30)
        g = random_max_degree(n, k, rng)
        G = ColoredGraph(g, [rng.randrange(5) for _ in range(n)], "omega")
        res = embed_skfree(G, k)
        host = res.host.graph
        problems = problems_topological(G, host, res.embedding, colored=True)
        degs = all(host.graph.degree(x) == g.degree(v) for v, x in enumerate(res.embedding.vertex_map))
        if problems or not degs:
            bad.append((i, problems[:3], degs))
        certs.append(docs.topological_doc(G, host, res.embedding, colored=True, degree_preserving=True))
    # the drawn enumeration, through the command line
    path = os.path.join(CERT_DIR, "figure1.json")
    assert cli_main(["gamma-star", "--k", "4", "--rays", "3", "--len", "5", "--figure1", "-o", path]) == 0
    with open(path) as fh:
        obj = json.load(fh)
    table = {"1": [0, 1], "2": [0, 2], "3": [0, 1], "4": [1], "5": [0, 1, 2]}
    nbrs = {}
    for a, b in obj["edges"]:
        nbrs.setdefault(a, set()).add(b)
        nbrs.setdefault(b, set()).add(a)
    fig_ok = obj["attachments"] == table
    for j, rays in table.items():
        x = obj["attachment_vertices"][j]
        fig_ok &= nbrs.get(x, set()) == {obj["ray_vertices"][i][int(j) - 1] for i in rays}
    save_certs(6, certs)
    ok = report(6, not bad and fig_ok,
                f"200 S_k-free graphs (k in 4..6, n <= 30), {len(bad)} failures; "
                f"drawn table {'matches' if fig_ok else 'DIFFERS'}")
    assert ok, bad[:3]


def test_criterion_07_decomposition():
    t0 = time.time()
    items = full_corpus()
    bad, certs = [], []
    for it in items:
        G, T = it["graph"], it["T"]
        D = decompose(G, T)
        rep = verify_decomposition(G, T, D)
        if not all(rep[p]["ok"] is True for p in PROPS):
            bad.append((it["name"], {p: rep[p]["ok"] for p in PROPS}))
        certs.append(docs.decomposition_doc(G, T, D))
    dt = time.time() - t0
    biggest = max(it["graph"].n for it in items)
    cases, relaxed = set(), 0
    for seed in range(25):
        for T, lst in ((StarPattern((1, 2, 2)), corpus_122(4, seed, 32 / 2048)),
                       (StarPattern((1, 1, 2, 2)), corpus_1122(5, seed, 32 / 3200))):
            for it in lst:
                D = decompose(it["graph"], T, relaxed_m=4)
                rep = verify_decomposition(it["graph"], T, D, relaxed_m=4)
                relaxed += 1
                cases.add(D.trace["case"])
                if not all(rep[p]["ok"] is True for p in PROPS):
                    bad.append((it["name"], "relaxed"))
                certs.append(docs.decomposition_doc(it["graph"], T, D, relaxed_m=4))
    save_certs(7, certs)
    both = cases == {"long block", "block path"}
    ok = report(7, not bad and dt < 600 and len(items) >= 50 and relaxed >= 200 and both,
                f"{len(items)} corpus graphs (largest {biggest} vertices) in {dt:.1f}s (limit 600s); "
                f"{relaxed} relaxed runs covering {sorted(cases)}; {len(bad)} failures")
    assert ok, bad[:3]


def test_criterion_08_end_to_end_embedding():
    regs = {}
    bad, certs = [], []
    for it in full_corpus():
        G, T = it["graph"], it["T"]
        R = regs.setdefault(T.legs, RegistryUniversal(T))
        U = embed_universal(G, T, R, allow_k3=T.k == 3)
        problems = problems_topological(G, U.prefix.graph, U.embedding)
        if problems or not U.prefix.meta.get("t_free") or not U.consistency["ok"]:
            bad.append((it["name"], problems[:3], U.prefix.meta, U.consistency["mismatches"][:3]))
        doc = docs.topological_doc(G, U.prefix.graph, U.embedding)
        certs.append(doc)
    closure = all(contains_star(with_tail(H, R.T.longest), R.T) is None
                  for R in regs.values() for _, _, H in R.items())
    save_certs(8, certs)
    ok = report(8, not bad and closure,
                f"{len(certs)} corpus graphs embedded, prefixes T-free, registry classes consistent; "
                f"{len(bad)} failures")
    assert ok, bad[:3]


def test_criterion_09_gadgets():
    truncations, bad, certs = 0, [], []
    edges_checked, small = 0, []
    for legs in ((2, 2, 2), (2, 2, 2, 2), (2, 2, 3)):
        T = StarPattern(legs)
        for L in range(1, 5):
            for alpha in alternating_sequences(L):
                for depth in range(0, min(L, 3) + 1):
                    for N in (3, 5):
                        G = build_G_alpha(T, alpha, depth, N, enforce_N=False)
                        truncations += 1
                        c1 = check_claim1(G)
                        c2 = check_claim2(G)
                        boundary = check_boundary(G)
                        total = c2["checked"] + len(boundary)
                        edges_checked += total
                        if total < min(30, G.graph.m):
                            small.append((legs, alpha, depth, N, total))
                        missing = [e for e, w in boundary.items() if w is None]
                        if not c1["ok"] or not c2["ok"] or missing:
                            bad.append((legs, alpha, depth, N, c1["ok"], c2["failures"][:3], missing[:3]))
                        wits = list(c2["witnesses"].items())
                        wits += [(f"{a}-{b}", w) for (a, b), w in boundary.items() if w is not None]
                        for key, w in wits:
                            a, b = map(int, key.split("-"))
                            H = subdivide_edge(G.graph, (a, b), 1)
                            certs.append({"kind": "star", "holds": True, "star": list(legs),
                                          "host": graph_to_obj(H), "witness": w})
    fig = build_G_alpha(StarPattern((2, 2, 2, 2)), "112", 2, 5)
    save_certs(9, certs)
    ok = report(9, not bad and not small and fig.graph.n == 55,
                f"{truncations} truncations, {edges_checked} single-edge subdivisions all force T; "
                f"reference instance T(2,2,2,2), alpha 112, depth 2, N 5 has {fig.graph.n} vertices; {len(bad)} failures")
    assert ok, (bad[:3], small[:3])


def test_criterion_10_certificate_independence(capsys):
    missing = [n for n in range(1, 10) if n not in EMITTED]
    if missing:
        pytest.skip(f"criteria {missing} did not run in this session")
    total, invalid = 0, []
    for n in range(1, 10):
        path, count = EMITTED[n]
        code = cli_main(["verify", path])
        out = json.loads(capsys.readouterr().out)
        total += count
        if code != 0 or not out["valid"]:
            invalid.append((n, out["problems"][:3]))
    ok = report(10, not invalid,
                f"{total} certificates from criteria 1-9 re-checked by `staruniv verify`; "
                f"{len(invalid)} bundles rejected")
    assert ok, invalid
