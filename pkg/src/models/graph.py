"""Graph models: cubic multigraphs, darts, matchings and 2-factor cycles.

Darts are encoded as integers, ``code = 2 * edge_id + end``: ``end = 0`` means
the dart runs from ``edges[e][0]`` to ``edges[e][1]``, ``end = 1`` the reverse.
The reverse of a dart is ``code ^ 1``.
"""
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, model_validator


class CubicGraph(BaseModel):
    """Validated cubic multigraph. Immutable; bridgelessness cached at build time."""
    model_config = ConfigDict(frozen=True)

    name: str = "graph"
    n: int
    m: int
    edges: Tuple[Tuple[int, int], ...]
    incidence: Tuple[Tuple[int, int, int], ...]   # edge ids per vertex, edge-id order
    bridgeless: bool
    connected: bool
    rejections: int = 0                           # configuration-model retries, random graphs only

    @model_validator(mode="after")
    def _check_shape(self) -> "CubicGraph":
        if len(self.edges) != self.m or len(self.incidence) != self.n:
            raise ValueError("edge/incidence table sizes disagree with n, m")
        if 2 * self.m != 3 * self.n:
            raise ValueError(f"cubic graph needs 2m = 3n (n={self.n}, m={self.m})")
        return self

    def tail(self, code: int) -> int:
        """Vertex a dart leaves from."""
        return self.edges[code >> 1][code & 1]

    def head(self, code: int) -> int:
        """Vertex a dart points to."""
        return self.edges[code >> 1][1 - (code & 1)]

    def dart_at(self, v: int, e: int) -> int:
        """The dart of edge ``e`` whose tail is ``v``."""
        u, w = self.edges[e]
        if u == v:
            return 2 * e
        if w == v:
            return 2 * e + 1
        raise ValueError(f"edge {e} is not incident with vertex {v}")

    def darts_at(self, v: int) -> Tuple[int, int, int]:
        """Darts leaving ``v`` in incidence order."""
        a, b, c = self.incidence[v]
        return (self.dart_at(v, a), self.dart_at(v, b), self.dart_at(v, c))

    def third_edge(self, v: int, e1: int, e2: int) -> int:
        for e in self.incidence[v]:
            if e != e1 and e != e2:
                return e
        raise ValueError(f"vertex {v} has no edge besides {e1} and {e2}")

    def summary(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "m": self.m,
            "bridgeless": self.bridgeless,
            "connected": self.connected,
            "edges": [list(e) for e in self.edges],
        }


class Matching(BaseModel):
    model_config = ConfigDict(frozen=True)

    edges: Tuple[int, ...]    # sorted edge ids

    def is_perfect(self, g: CubicGraph) -> bool:
        return 2 * len(self.edges) == g.n


class FactorCycle(BaseModel):
    """One cycle of a 2-factor: ``edges[i]`` joins ``vertices[i]`` and ``vertices[i + 1]`` (cyclically)."""
    model_config = ConfigDict(frozen=True)

    vertices: Tuple[int, ...]
    edges: Tuple[int, ...]

    def darts(self, g: CubicGraph) -> List[int]:
        """The cycle as darts, oriented along ``vertices``."""
        return [g.dart_at(v, e) for v, e in zip(self.vertices, self.edges)]
