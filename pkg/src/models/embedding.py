"""Embedding models: signed rotation systems, traced faces and edge classes."""
from enum import Enum
from typing import Dict, List, NamedTuple, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

from src.models.graph import CubicGraph


class EdgeClass(str, Enum):
    REGULAR = "regular"
    GOOD_SINGULAR = "good_singular"    # sign "−" in the facial diagram
    BAD_SINGULAR = "bad_singular"      # sign "+" in the facial diagram

    @property
    def is_singular(self) -> bool:
        return self is not EdgeClass.REGULAR


def least_rotation(seq: Tuple[int, ...]) -> Tuple[int, ...]:
    if not seq:
        return seq
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


def walk_key(darts: Tuple[int, ...]) -> Tuple[int, ...]:
    """Orientation-free key of a closed walk given as darts.

    The walk and its mirror (reversed order, every dart reversed) get the same key:
    the lexicographically least cyclic rotation of either.
    """
    darts = tuple(darts)
    mirror = tuple(d ^ 1 for d in reversed(darts))
    return min(least_rotation(darts), least_rotation(mirror))


class Embedding(BaseModel):
    """Rotation (three darts per vertex, cyclic) plus a +1/-1 sign per edge.

    Triples are stored with their lowest dart first, so cyclically equal
    rotations compare equal.
    """
    model_config = ConfigDict(frozen=True)

    rotation: Tuple[Tuple[int, int, int], ...]
    signature: Tuple[int, ...]

    @field_validator("rotation")
    @classmethod
    def _canonical_rotation(cls, value):
        canonical = []
        for triple in value:
            i = triple.index(min(triple))
            canonical.append(triple[i:] + triple[:i])
        return tuple(canonical)

    @field_validator("signature")
    @classmethod
    def _signs_only(cls, value):
        for e, s in enumerate(value):
            if s not in (1, -1):
                raise ValueError(f"signature of edge {e} must be +1 or -1, got {s}")
        return value

    def to_document(self) -> dict:
        return {
            "rotation": [list(t) for t in self.rotation],
            "signature": list(self.signature),
        }


class TraceState(NamedTuple):
    """A dart together with the local sense it is entered with."""
    dart: int
    sense: int

    @property
    def state_id(self) -> int:
        return 2 * self.dart + (1 if self.sense < 0 else 0)

    @classmethod
    def from_id(cls, state_id: int) -> "TraceState":
        return cls(state_id >> 1, -1 if state_id & 1 else 1)


class EdgeOccurrence(NamedTuple):
    walk: int
    position: int
    end: int          # direction of the traversal: the dart end bit


class FacialWalk(BaseModel):
    model_config = ConfigDict(frozen=True)

    states: Tuple[TraceState, ...]

    @property
    def length(self) -> int:
        return len(self.states)

    @property
    def darts(self) -> Tuple[int, ...]:
        return tuple(s.dart for s in self.states)

    @property
    def edges(self) -> Tuple[int, ...]:
        return tuple(s.dart >> 1 for s in self.states)

    def key(self) -> Tuple[int, ...]:
        return walk_key(self.darts)

    def alternating(self, g: CubicGraph) -> List[int]:
        """Vertex/edge alternating view ``[v0, e1, v1, e2, ..., v_{t-1}, e_t]``."""
        seq: List[int] = []
        for s in self.states:
            seq.append(g.tail(s.dart))
            seq.append(s.dart >> 1)
        return seq

    def export(self, g: CubicGraph) -> List[Dict[str, int]]:
        return [
            {"edge": s.dart >> 1, "from": g.tail(s.dart), "to": g.head(s.dart)}
            for s in self.states
        ]


class FaceSet(BaseModel):
    """One representative walk per face, plus both traversals of every edge."""
    model_config = ConfigDict(frozen=True)

    walks: Tuple[FacialWalk, ...]
    edge_index: Tuple[Tuple[EdgeOccurrence, EdgeOccurrence], ...]

    @property
    def face_count(self) -> int:
        return len(self.walks)

    @property
    def total_length(self) -> int:
        return sum(w.length for w in self.walks)

    def face_multiset(self) -> Tuple[Tuple[int, ...], ...]:
        """Sorted orientation-free face keys; equal iff the facial walks agree."""
        return tuple(sorted(w.key() for w in self.walks))

    def export(self, g: CubicGraph) -> List[List[Dict[str, int]]]:
        return [w.export(g) for w in self.walks]


class ClassCounts(BaseModel):
    model_config = ConfigDict(frozen=True)

    bad: int
    good: int
    regular: int

    @property
    def singular(self) -> int:
        return self.bad + self.good

    @property
    def total(self) -> int:
        return self.bad + self.good + self.regular
