"""JSON and DOT serialization.

JSON layout: ``{"n": int, "edges": [[u, v], ...], "colors": [int, ...]}`` with
``u < v``, edges sorted, ``colors`` only for coloured graphs. An ω-coloured
graph additionally carries ``"alpha": "omega"``; without it a colour array is
read as a 2-colouring. Unknown keys are ignored on input so that larger
documents (prefix attachments, gadget tags, certificates) can embed a graph.
"""

from __future__ import annotations

import json
import re

from .errors import ParseError
from .graph import OMEGA, ColoredGraph, Graph


def graph_to_obj(G) -> dict:
    g = G.graph if isinstance(G, ColoredGraph) else G
    obj = {"n": g.n, "edges": [list(e) for e in g.edge_list()]}
    if isinstance(G, ColoredGraph):
        obj["colors"] = list(G.colors)
        if G.alpha == OMEGA:
            obj["alpha"] = OMEGA
    return obj


def dumps(obj) -> bytes:
    return json.dumps(obj, separators=(",", ":")).encode()


def encode(G, fmt: str = "json") -> bytes:
    if fmt == "json":
        return dumps(graph_to_obj(G))
    if fmt == "dot":
        return to_dot(G).encode()
    raise ValueError(f"unknown format {fmt!r}")


def _key_offset(text: str, key: str) -> int:
    pos = text.find(f'"{key}"')
    return len(text[:max(pos, 0)].encode())


def graph_from_obj(obj, text: str = ""):
    if not isinstance(obj, dict):
        raise ParseError("graph document must be a JSON object", 0)
    n = obj.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError("'n' must be a non-negative integer", _key_offset(text, "n"))
    edges = obj.get("edges")
    if not isinstance(edges, list):
        raise ParseError("'edges' must be a list", _key_offset(text, "edges"))
    clean = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise ParseError(f"bad edge entry {e!r}", _key_offset(text, "edges"))
        u, v = e
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"invalid edge {e!r} for n={n}", _key_offset(text, "edges"))
        clean.append((u, v))
    G = Graph(n, clean)
    if "colors" not in obj:
        return G
    colors = obj["colors"]
    if not isinstance(colors, list) or len(colors) != n or \
            not all(isinstance(c, int) and not isinstance(c, bool) and c >= 0 for c in colors):
        raise ParseError("'colors' must be n non-negative integers", _key_offset(text, "colors"))
    alpha = obj.get("alpha")
    if alpha is None:
        alpha = 2 if all(c <= 1 for c in colors) else OMEGA
    elif alpha not in (OMEGA, 2):
        raise ParseError(f"unknown alpha {alpha!r}", _key_offset(text, "alpha"))
    return ColoredGraph(G, colors, alpha)


def loads(data):
    """Parse JSON bytes into a Python object, mapping syntax errors to ``ParseError``."""
    text = data.decode("utf-8", errors="replace") if isinstance(data, (bytes, bytearray)) else data
    try:
        return json.loads(text), text
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, len(text[:exc.pos].encode())) from None


def decode(data):
    """Inverse of :func:`encode`. Accepts JSON or the DOT dialect written by
    :func:`to_dot`; returns a :class:`Graph` or :class:`ColoredGraph`."""
    text = data.decode("utf-8", errors="replace") if isinstance(data, (bytes, bytearray)) else data
    if text.lstrip().startswith("graph"):
        return from_dot(text)
    obj, text = loads(text)
    return graph_from_obj(obj, text)


def to_dot(G) -> str:
    g = G.graph if isinstance(G, ColoredGraph) else G
    lines = ["graph G {"]
    if isinstance(G, ColoredGraph) and G.alpha == OMEGA:
        lines.append("  alpha=omega;")
    for v in range(g.n):
        if isinstance(G, ColoredGraph):
            lines.append(f'  {v} [label="{v}", c={G.colors[v]}];')
        else:
            lines.append(f'  {v} [label="{v}"];')
    for u, v in g.edge_list():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_NODE = re.compile(r'^\s*(\d+)\s*\[label="\d+"(?:,\s*c=(\d+))?\];\s*$')
_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+);\s*$")


def from_dot(text: str):
    n = 0
    colors = {}
    edges = []
    alpha = 2
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.strip()
        if body in ("", "}") or body.startswith("graph"):
            pass
        elif body == "alpha=omega;":
            alpha = OMEGA
        elif (mo := _NODE.match(line)):
            v = int(mo.group(1))
            n = max(n, v + 1)
            if mo.group(2) is not None:
                colors[v] = int(mo.group(2))
        elif (mo := _EDGE.match(line)):
            edges.append((int(mo.group(1)), int(mo.group(2))))
        else:
            raise ParseError(f"unrecognised DOT line {body!r}", offset)
        offset += len(line.encode())
    for u, v in edges:
        n = max(n, u + 1, v + 1)
    G = Graph(n, edges)
    if not colors:
        return G
    return ColoredGraph(G, [colors.get(v, 0) for v in range(n)], alpha)
