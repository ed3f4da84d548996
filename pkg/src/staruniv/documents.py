"""Self-contained result documents and their re-validation.

A document is a JSON object with a ``kind``, a ``holds`` flag and everything a
checker needs: the pattern, the host and the certificate. :func:`verify_document`
re-checks it with the validators in :mod:`staruniv.validate` only; the search
engines are never imported here.
"""

from __future__ import annotations

from .certificates import Embedding, MinorModel, StarPattern, StarWitness, TopologicalEmbedding
from .errors import GraphError
from .io import graph_from_obj, graph_to_obj
from . import validate as V


def star_doc(host, T: StarPattern, witness) -> dict:
    return {"kind": "star", "holds": witness is not None, "star": list(T.legs),
            "host": graph_to_obj(host), "witness": witness.to_obj() if witness else None}


def subgraph_doc(pattern, host, emb, colored=False) -> dict:
    return {"kind": "subgraph", "holds": emb is not None, "colored": colored,
            "pattern": graph_to_obj(pattern), "host": graph_to_obj(host),
            "embedding": emb.to_obj() if emb else None}


def topological_doc(pattern, host, emb, colored=False, degree_preserving=False) -> dict:
    doc = {"kind": "topological", "holds": emb is not None, "colored": colored,
           "pattern": graph_to_obj(pattern), "host": graph_to_obj(host),
           "embedding": emb.to_obj() if emb else None}
    if degree_preserving:
        doc["degree_preserving"] = True
    return doc


def minor_doc(pattern, host, model, pruned=False) -> dict:
    return {"kind": "minor", "holds": model is not None, "pruned": pruned,
            "pattern": graph_to_obj(pattern), "host": graph_to_obj(host),
            "model": model.to_obj() if model else None}


def paths_doc(host, fam) -> dict:
    return {"kind": "paths", "holds": True, "host": graph_to_obj(host), "u": fam.u, "v": fam.v,
            "count": len(fam), "paths": [list(p) for p in fam.paths]}


def topminor_doc(H, X, wit) -> dict:
    doc = {"kind": "topminor", "holds": wit is not None, "pattern": graph_to_obj(X), "host": graph_to_obj(H)}
    if wit is not None:
        doc["Y"] = graph_to_obj(wit.Y)
        doc["embedding"] = wit.embedding.to_obj()
        doc["model"] = wit.model.to_obj()
    return doc


def decomposition_doc(G, T: StarPattern, D, relaxed_m=None, report=None) -> dict:
    doc = {"kind": "decomposition", "holds": True, "star": list(T.legs), "relaxed_m": relaxed_m,
           "host": graph_to_obj(G), "decomposition": D.to_obj()}
    if report is not None:
        doc["report"] = report
    return doc


def relation_doc(host, v, w, witness) -> dict:
    return {"kind": "relation", "holds": witness is not None, "host": graph_to_obj(host),
            "v": v, "w": w, "witness": witness}


def bundle_doc(items, **extra) -> dict:
    doc = {"kind": "bundle", "holds": all(d.get("holds") for d in items), "items": items}
    doc.update(extra)
    return doc


def _degree_problems(pattern, host, vmap):
    P = pattern.graph if hasattr(pattern, "colors") else pattern
    H = host.graph if hasattr(host, "colors") else host
    return [f"pattern vertex {i} has degree {len(P.adj[i])}, image {v} has {len(H.adj[v])}"
            for i, v in enumerate(vmap) if len(P.adj[i]) != len(H.adj[v])]


def verify_document(doc) -> list[str]:
    """Problems found in ``doc``; empty means every certificate in it is valid."""
    if not isinstance(doc, dict) or "kind" not in doc:
        raise GraphError("not a result document")
    kind = doc["kind"]
    if kind == "bundle":
        out = []
        for i, item in enumerate(doc["items"]):
            out += [f"item {i}: {p}" for p in verify_document(item)]
        return out
    if not doc.get("holds"):
        return ["negative result: there is no certificate to check"]
    host = graph_from_obj(doc["host"])
    if kind == "star":
        return V.problems_star(host, StarPattern(tuple(doc["star"])), StarWitness.from_obj(doc["witness"]))
    if kind == "subgraph":
        return V.problems_embedding(graph_from_obj(doc["pattern"]), host,
                                    Embedding.from_obj(doc["embedding"]), doc.get("colored", False))
    if kind == "topological":
        pattern = graph_from_obj(doc["pattern"])
        emb = TopologicalEmbedding.from_obj(doc["embedding"])
        out = V.problems_topological(pattern, host, emb, doc.get("colored", False))
        if doc.get("degree_preserving") and not out:
            out += _degree_problems(pattern, host, emb.vertex_map)
        return out
    if kind == "minor":
        return V.problems_minor(graph_from_obj(doc["pattern"]), host,
                                MinorModel.from_obj(doc["model"]), doc.get("pruned", False))
    if kind == "paths":
        out = V.problems_path_family(host, doc["u"], doc["v"], doc["paths"])
        if len(doc["paths"]) != doc["count"]:
            out.append(f"claims {doc['count']} paths, lists {len(doc['paths'])}")
        return out
    if kind == "topminor":
        X = graph_from_obj(doc["pattern"])
        Y = graph_from_obj(doc["Y"])
        out = V.problems_topological(Y, host, TopologicalEmbedding.from_obj(doc["embedding"]))
        out += V.problems_minor(X, Y, MinorModel.from_obj(doc["model"]))
        if Y.n and Y.min_degree() < 3:
            out.append(f"Y has minimum degree {Y.min_degree()}")
        return out
    if kind == "relation":
        return V.problems_relation(host, doc["v"], doc["w"], doc["witness"])
    if kind == "decomposition":
        from .decomposition import Decomposition, verify_decomposition
        T = StarPattern(tuple(doc["star"]))
        rep = verify_decomposition(host, T, Decomposition.from_obj(doc["decomposition"]), doc.get("relaxed_m"))
        return [f"property {key} not confirmed" for key in
                ("1_cover", "2_intersections", "3_core_degree", "4_core_path", "5_part_paths")
                if rep[key]["ok"] is not True]
    raise GraphError(f"unknown document kind {kind!r}")
