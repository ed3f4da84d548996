"""Certificate types returned by the containment searches and the constructions.

Every certificate round-trips through a plain JSON object so that the
``verify`` command can re-check it without touching the search code.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GraphError
from .graph import Graph


@dataclass(frozen=True)
class StarPattern:
    """The subdivided star ``T(p_1, ..., p_k)``.

    In :meth:`graph` the centre is vertex 0 and leg ``i`` occupies the next
    ``p_i`` vertices, walking away from the centre.
    """

    legs: tuple[int, ...]

    def __post_init__(self):
        legs = tuple(sorted(int(p) for p in self.legs))
        if any(p < 1 for p in legs):
            raise GraphError("leg lengths must be positive")
        object.__setattr__(self, "legs", legs)

    @classmethod
    def parse(cls, text: str) -> "StarPattern":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(x) for x in text.split(",")))
        except ValueError:
            raise GraphError(f"bad star specification {text!r}") from None

    @classmethod
    def star(cls, k: int) -> "StarPattern":
        return cls((1,) * k)

    @property
    def k(self) -> int:
        return len(self.legs)

    @property
    def order(self) -> int:
        return 1 + sum(self.legs)

    @property
    def longest(self) -> int:
        return self.legs[-1] if self.legs else 0

    def leg_vertices(self) -> list[list[int]]:
        out, nxt = [], 1
        for p in self.legs:
            out.append(list(range(nxt, nxt + p)))
            nxt += p
        return out

    def graph(self) -> Graph:
        edges = []
        for leg in self.leg_vertices():
            chain = [0] + leg
            edges += zip(chain, chain[1:])
        return Graph(self.order, edges)

    def __str__(self):
        return "T(" + ",".join(map(str, self.legs)) + ")"


@dataclass(frozen=True)
class StarWitness:
    """A copy of a subdivided star: ``legs[i]`` starts at ``centre`` and has length ``pattern.legs[i]``."""

    centre: int
    legs: tuple[tuple[int, ...], ...]

    def vertex_map(self) -> tuple[int, ...]:
        return (self.centre,) + tuple(v for leg in self.legs for v in leg[1:])

    def vertices(self) -> set[int]:
        return set(self.vertex_map())

    def to_obj(self):
        return {"centre": self.centre, "legs": [list(leg) for leg in self.legs]}

    @classmethod
    def from_obj(cls, obj):
        return cls(obj["centre"], tuple(tuple(leg) for leg in obj["legs"]))


@dataclass(frozen=True)
class Embedding:
    """Injective adjacency-preserving map; ``vertex_map[i]`` is the image of pattern vertex ``i``."""

    vertex_map: tuple[int, ...]

    def to_obj(self):
        return {"vertex_map": [[i, v] for i, v in enumerate(self.vertex_map)]}

    @classmethod
    def from_obj(cls, obj):
        pairs = sorted(obj["vertex_map"])
        return cls(tuple(v for _, v in pairs))


@dataclass(frozen=True)
class TopologicalEmbedding:
    """Vertex map plus one host path per pattern edge (keyed ``(u, v)`` with ``u < v``,
    running from the image of ``u`` to the image of ``v``)."""

    vertex_map: tuple[int, ...]
    edge_paths: dict = field(hash=False)

    def to_obj(self):
        keys = sorted(self.edge_paths)
        return {
            "vertex_map": [[i, v] for i, v in enumerate(self.vertex_map)],
            "edges": [list(k) for k in keys],
            "edge_paths": [list(self.edge_paths[k]) for k in keys],
        }

    @classmethod
    def from_obj(cls, obj):
        pairs = sorted(obj["vertex_map"])
        paths = {tuple(e): tuple(p) for e, p in zip(obj["edges"], obj["edge_paths"])}
        return cls(tuple(v for _, v in pairs), paths)

    def inner_vertices(self) -> set[int]:
        return {v for p in self.edge_paths.values() for v in p[1:-1]}


@dataclass(frozen=True)
class MinorModel:
    """Disjoint connected branch sets, one per pattern vertex; ``carrier_edges``
    optionally lists the host edges of the model subgraph (set by pruning)."""

    branch_sets: tuple[tuple[int, ...], ...]
    carrier_edges: tuple[tuple[int, int], ...] | None = None

    def to_obj(self):
        obj = {"branch_sets": [list(s) for s in self.branch_sets]}
        if self.carrier_edges is not None:
            obj["carrier_edges"] = [list(e) for e in self.carrier_edges]
        return obj

    @classmethod
    def from_obj(cls, obj):
        carrier = obj.get("carrier_edges")
        return cls(tuple(tuple(s) for s in obj["branch_sets"]),
                   None if carrier is None else tuple(tuple(e) for e in carrier))
