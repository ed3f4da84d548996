"""Exception hierarchy shared by every module."""

import os


class StarUnivError(Exception):
    """Base class; ``certificate`` carries a JSON-ready witness when one exists."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class GraphError(StarUnivError, ValueError):
    """Invalid graph construction or an operation on a missing vertex/edge."""


class ParseError(GraphError):
    def __init__(self, message, offset=0):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class ResourceError(StarUnivError):
    """A size guard was exceeded."""


class PreconditionError(StarUnivError):
    """An input violates the hypothesis of a construction."""


class StructuralError(StarUnivError):
    """Degree-2 suppression would create a loop, a parallel edge, or hit a bare cycle."""

    def __init__(self, message, vertices=()):
        super().__init__(message, certificate={"vertices": sorted(vertices)})
        self.vertices = tuple(sorted(vertices))


def guard(name, default):
    """Resource guard value; ``STARUNIV_GUARD`` scales every guard (e.g. ``4`` or ``name=64,other=8``)."""
    raw = os.environ.get("STARUNIV_GUARD")
    if not raw:
        return default
    if "=" not in raw:
        return int(default * float(raw))
    for item in raw.split(","):
        key, _, value = item.partition("=")
        if key.strip() == name:
            return int(value)
    return default
