"""``staruniv`` command line.

Exit status: 0 when the relation holds or the construction succeeded, 1 when
it does not hold, 2 on bad input (a JSON error document goes to stdout).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import documents as docs
from .certificates import StarPattern
from .errors import ParseError, StarUnivError
from .graph import ColoredGraph, plain
from .io import decode, dumps, encode, graph_to_obj, loads


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_bytes(path):
    if path in (None, "-"):
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _graph(path):
    return decode(_read_bytes(path))


def _star(text):
    return StarPattern.parse(text)


def _emit(args, payload: bytes):
    out = getattr(args, "output", None)
    if out and out != "-":
        with open(out, "wb") as fh:
            fh.write(payload + b"\n")
    else:
        sys.stdout.buffer.write(payload + b"\n")
        sys.stdout.flush()


def _emit_doc(args, doc):
    _emit(args, dumps(doc))
    return 0 if doc.get("holds", True) else 1


def _emit_graph(args, G):
    _emit(args, encode(G, getattr(args, "format", "json")).rstrip(b"\n"))
    return 0


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_check(args):
    from . import containment as C
    host = _graph(args.host)
    if args.star is not None:
        T = _star(args.star)
        return _emit_doc(args, docs.star_doc(host, T, C.contains_star(host, T)))
    if args.paths is not None:
        from .connectivity import independent_paths
        u, v = args.paths
        return _emit_doc(args, docs.paths_doc(host, independent_paths(plain(host), u, v)))
    if args.pattern is None:
        raise UsageError("check needs --star, --paths or --pattern")
    pattern = _graph(args.pattern)
    if args.minor:
        return _emit_doc(args, docs.minor_doc(pattern, host, C.contains_minor(pattern, host)))
    if args.topminor:
        from .reduction import minor_to_topminor_witness
        return _emit_doc(args, docs.topminor_doc(host, pattern, minor_to_topminor_witness(host, pattern)))
    if args.topo:
        emb = C.contains_topological(pattern, host, colored=args.colored)
        return _emit_doc(args, docs.topological_doc(pattern, host, emb, args.colored))
    emb = C.contains_subgraph(pattern, host, colored=args.colored)
    return _emit_doc(args, docs.subgraph_doc(pattern, host, emb, args.colored))


def cmd_decompose(args):
    from .decomposition import check_block_bound, decompose, verify_decomposition
    G = _graph(args.host)
    T = _star(args.star)
    if args.block_bound:
        rep = check_block_bound(G, T, args.relaxed_m)
        _emit(args, dumps(rep))
        return 0 if rep["status"] == "pass" else 1
    D = decompose(G, T, args.relaxed_m)
    rep = verify_decomposition(G, T, D, args.relaxed_m)
    doc = docs.decomposition_doc(G, T, D, args.relaxed_m, rep)
    doc["holds"] = rep["ok"]
    return _emit_doc(args, doc)


def cmd_verify(args):
    obj, _ = loads(_read_bytes(args.certificate))
    problems = docs.verify_document(obj)
    _emit(args, dumps({"valid": not problems, "kind": obj.get("kind"), "problems": problems}))
    return 0 if not problems else 1


def _registry(args, T):
    from .universal import RegistryUniversal
    if args.registry and os.path.exists(os.path.join(args.registry, "index.json")):
        return RegistryUniversal.load(args.registry)
    return RegistryUniversal(T, args.relaxed_m)


def cmd_embed(args):
    from .universal import embed_universal
    G = _graph(args.host)
    T = _star(args.star)
    reg = _registry(args, T)
    U = embed_universal(G, T, reg, args.relaxed_m, touched_only=not args.full, allow_k3=args.allow_k3)
    if args.registry:
        reg.save(args.registry)
    doc = docs.topological_doc(G, U.prefix.graph, U.embedding)
    doc["star"] = list(T.legs)
    doc["prefix"] = {"core_size": U.prefix.core.graph.n, "meta": U.prefix.meta,
                     "classes": {str(x): list(c) for x, c in sorted(U.prefix.classes.items())}}
    doc["decomposition"] = U.decomposition.to_obj()
    doc["consistency"] = U.consistency
    return _emit_doc(args, doc)


def _figure1_table(k):
    from .skfree import IncidenceEnumeration
    return IncidenceEnumeration.figure1(k)


def cmd_embed_skfree(args):
    from .skfree import build_prefix, embed_skfree
    G = _graph(args.host)
    prefix = None
    if args.figure1:
        R, L = args.rays or 3, args.len or 5
        prefix = build_prefix(args.k, R, L, _figure1_table(args.k))
    res = embed_skfree(G, args.k, prefix, touched_only=args.touched_only)
    pattern = G if isinstance(G, ColoredGraph) else ColoredGraph(G, [0] * G.n, "omega")
    doc = docs.topological_doc(pattern, res.host.graph, res.embedding, colored=True, degree_preserving=True)
    doc["prefix"] = {"k": res.prefix.k, "rays": res.prefix.R, "len": res.prefix.L,
                     "touched_only": res.touched_only}
    doc["index_of"] = {str(v): j for v, j in sorted(res.index_of.items())}
    return _emit_doc(args, doc)


def cmd_derive(args):
    from .reduction import derive_gamma_star
    return _emit_graph(args, derive_gamma_star(_graph(args.input), args.t))


def cmd_blowup(args):
    from .reduction import blowup
    return _emit_graph(args, blowup(_graph(args.input), args.n).graph)


def cmd_suppress(args):
    from .reduction import suppress_degree_two
    return _emit_graph(args, suppress_degree_two(_graph(args.input)))


def cmd_gamma_star(args):
    from .skfree import build_prefix
    table = _figure1_table(args.k) if args.figure1 else None
    P = build_prefix(args.k, args.rays, args.len, table)
    if args.format == "dot":
        return _emit_graph(args, P.graph)
    _emit(args, dumps(P.to_obj()))
    return 0


def cmd_gadget(args):
    from . import gadgets as GD
    T = _star(args.star)
    G = GD.build_G_alpha(T, args.alpha, args.depth, args.N, enforce_N=not args.allow_small_n)
    if args.check is None:
        _emit(args, dumps(G.to_obj()))
        return 0
    if args.check == "claim1":
        rep = GD.check_claim1(G)
        _emit(args, dumps(rep))
        return 0 if rep["ok"] else 1
    sample = "all" if args.sample == "all" else int(args.sample)
    rep = GD.check_claim2(G, sample=sample, seed=args.seed)
    if args.certificates:
        from .graph import subdivide_edge
        items = []
        for key, w in sorted(rep["witnesses"].items()):
            a, b = map(int, key.split("-"))
            H = subdivide_edge(G.graph, (a, b), 1)
            items.append({"kind": "star", "holds": True, "star": list(T.legs),
                          "host": graph_to_obj(H), "witness": w})
        rep["certificates"] = docs.bundle_doc(items)
    _emit(args, dumps(rep))
    return 0 if rep["ok"] else 1


def cmd_trivial(args):
    from .universal import trivial_universal_prefix
    return _emit_graph(args, trivial_universal_prefix(args.k, args.n, args.kind))


def cmd_registry(args):
    from .universal import RegistryUniversal
    T = _star(args.star) if args.star else None
    path = args.dir
    if os.path.exists(os.path.join(path, "index.json")):
        reg = RegistryUniversal.load(path)
    elif T is None:
        raise UsageError(f"no registry at {path}; pass --star to create one")
    else:
        reg = RegistryUniversal(T, args.relaxed_m)
    if args.action == "list":
        listing = {"legs": list(reg.T.legs), "kind": reg.kind, "relaxed_m": reg.relaxed_m,
                   "classes": {str(n): [{"index": i, "n": H.n, "m": H.graph.m}
                                        for i, H in enumerate(reg.classes[n])] for n in sorted(reg.classes)}}
        _emit(args, dumps(listing))
        return 0
    if args.host is None:
        raise UsageError("registry admit needs --host")
    H = _graph(args.host)
    n, i, mapping = reg.admit(H, args.n)
    reg.save(path)
    _emit(args, dumps({"n": n, "index": i, "mapping": [[x, y] for x, y in sorted(mapping.items())]}))
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser():
    p = _Parser(prog="staruniv", description="Containment, decompositions and universal prefixes for subdivided stars.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("-o", "--output", help="output file (default stdout)")
        return sp

    sp = add("check", cmd_check, "test a containment relation and print a certificate")
    sp.add_argument("--host", required=True)
    sp.add_argument("--star", help="subdivided star legs, e.g. 1,2,2")
    sp.add_argument("--pattern")
    sp.add_argument("--paths", nargs=2, type=int, metavar=("U", "V"), help="maximum independent U-V paths")
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--topo", action="store_true", help="topological minor")
    mode.add_argument("--minor", action="store_true")
    mode.add_argument("--topminor", action="store_true", help="minor to topological-minor witness")
    sp.add_argument("--colored", action="store_true")

    sp = add("decompose", cmd_decompose, "decompose a T-free graph with a long path")
    sp.add_argument("--star", required=True)
    sp.add_argument("--host", default="-")
    sp.add_argument("--relaxed-m", type=int)
    sp.add_argument("--block-bound", action="store_true", help="only check the block bound")

    sp = add("verify", cmd_verify, "re-validate a result document")
    sp.add_argument("certificate", nargs="?", default="-")

    sp = add("embed", cmd_embed, "embed a T-free graph into an assembled universal prefix")
    sp.add_argument("--star", required=True)
    sp.add_argument("--host", default="-")
    sp.add_argument("--relaxed-m", type=int)
    sp.add_argument("--registry", help="registry directory (loaded if present, saved after)")
    sp.add_argument("--allow-k3", action="store_true")
    sp.add_argument("--full", action="store_true", help="materialize the whole ray prefix")

    sp = add("embed-skfree", cmd_embed_skfree, "degree-preserving embedding into the ray graph")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--host", default="-")
    sp.add_argument("--figure1", action="store_true", help="seed the table with the drawn enumeration")
    sp.add_argument("--rays", type=int)
    sp.add_argument("--len", type=int)
    sp.add_argument("--touched-only", action="store_true")

    for name, func, help_text in (("derive", cmd_derive, "join pairs with at least t independent paths"),
                                  ("blowup", cmd_blowup, "replace every edge by n paths of length 2"),
                                  ("suppress", cmd_suppress, "suppress degree-2 vertices")):
        sp = add(name, func, help_text)
        sp.add_argument("input", nargs="?", default="-")
        sp.add_argument("--format", choices=("json", "dot"), default="json")
    sub.choices["derive"].add_argument("--t", type=int, required=True)
    sub.choices["blowup"].add_argument("--n", type=int, required=True)

    sp = add("gamma-star", cmd_gamma_star, "finite prefix of the ray graph")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--rays", type=int, required=True)
    sp.add_argument("--len", type=int, required=True)
    sp.add_argument("--figure1", action="store_true")
    sp.add_argument("--format", choices=("json", "dot"), default="json")

    sp = add("gadget", cmd_gadget, "build a gadget graph and optionally check a claim")
    sp.add_argument("--star", required=True)
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--check", choices=("claim1", "claim2"))
    sp.add_argument("--sample", default="all", help="'all' or a number of interior edges")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--allow-small-n", action="store_true", help="permit N < k")
    sp.add_argument("--certificates", action="store_true", help="attach verifiable star documents")

    sp = add("trivial-universal", cmd_trivial, "subdivided complete graph prefix")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--kind", default="cycle_girth", choices=("cycle_girth", "branch_distance"))
    sp.add_argument("--format", choices=("json", "dot"), default="json")

    sp = add("registry", cmd_registry, "list or extend a component registry")
    sp.add_argument("action", choices=("list", "admit"))
    sp.add_argument("--dir", required=True)
    sp.add_argument("--star")
    sp.add_argument("--relaxed-m", type=int)
    sp.add_argument("--host")
    sp.add_argument("--n", type=int)
    return p


def _error(kind, message, **extra):
    doc = {"error": kind, "message": message}
    doc.update(extra)
    sys.stdout.buffer.write(dumps(doc) + b"\n")
    sys.stdout.flush()
    return 2


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _error("usage", str(exc))
    try:
        return args.func(args)
    except UsageError as exc:
        return _error("usage", str(exc))
    except ParseError as exc:
        return _error("parse", str(exc), offset=exc.offset)
    except StarUnivError as exc:
        return _error(type(exc).__name__, str(exc), certificate=exc.certificate)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        return _error(type(exc).__name__, str(exc))


if __name__ == "__main__":
    sys.exit(main())
