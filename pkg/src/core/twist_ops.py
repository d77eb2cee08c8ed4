"""
Twist Ops - edge twists, local rotation flips and their equivalence.

All operations return new Embedding values; nothing is mutated.
"""
import logging
from typing import Iterable, Tuple

from src.core.embedding_core import count_classes, trace_faces, validate_embedding
from src.errors import GraphInputError, TracingError
from src.models.embedding import Embedding
from src.models.graph import CubicGraph
from src.models.reports import TwistRecord

logger = logging.getLogger(__name__)


def _check_edge(emb: Embedding, e: int) -> None:
    if not 0 <= e < len(emb.signature):
        raise GraphInputError(f"edge id {e} out of range 0..{len(emb.signature) - 1}")


def _check_vertex(emb: Embedding, v: int) -> None:
    if not 0 <= v < len(emb.rotation):
        raise GraphInputError(f"vertex id {v} out of range 0..{len(emb.rotation) - 1}")


def twist(emb: Embedding, e: int) -> Embedding:
    """Negate the sign of edge ``e``."""
    _check_edge(emb, e)
    signature = list(emb.signature)
    signature[e] = -signature[e]
    return emb.model_copy(update={"signature": tuple(signature)})


def twist_with_record(g: CubicGraph, emb: Embedding, e: int) -> Tuple[Embedding, TwistRecord]:
    """Twist ``e`` and record class and face counts on both sides."""
    validate_embedding(g, emb)
    before = trace_faces(g, emb)
    twisted = twist(emb, e)
    after = trace_faces(g, twisted)
    record = TwistRecord(
        edge=e,
        before=count_classes(before),
        after=count_classes(after),
        faces_before=before.face_count,
        faces_after=after.face_count,
    )
    logger.debug(f"twist e={e}: faces {record.faces_before} -> {record.faces_after}")
    return twisted, record


def local_rotation_flip(emb: Embedding, v: int) -> Embedding:
    """Reverse the cyclic order at ``v``; signs unchanged."""
    _check_vertex(emb, v)
    rotation = list(emb.rotation)
    a, b, c = rotation[v]
    rotation[v] = (a, c, b)
    return Embedding(rotation=tuple(rotation), signature=emb.signature)


def _incident_edges(g: CubicGraph, vertices: Iterable[int]) -> list:
    """Edge ids over every incidence at ``vertices``, repeated once per incidence."""
    edges = []
    for v in vertices:
        edges.extend(g.incidence[v])
    return edges


def _flip_signs(signature: Tuple[int, ...], edges: Iterable[int]) -> Tuple[int, ...]:
    flipped = list(signature)
    for e in edges:
        flipped[e] = -flipped[e]
    return tuple(flipped)


def triple_twist(g: CubicGraph, emb: Embedding, v: int) -> Embedding:
    """Twist the three edges incident with ``v``.

    Loops are rejected at graph construction, so the three incident ids are
    distinct and each is flipped exactly once, parallel edges included.
    """
    _check_vertex(emb, v)
    return emb.model_copy(update={"signature": _flip_signs(emb.signature, g.incidence[v])})


def flipped_vertices(rot_a, rot_b) -> list:
    """Vertices where two rotations differ (as cyclic triples)."""
    if len(rot_a) != len(rot_b):
        raise GraphInputError(f"rotations cover {len(rot_a)} and {len(rot_b)} vertices")
    a = Embedding(rotation=tuple(rot_a), signature=()).rotation
    b = Embedding(rotation=tuple(rot_b), signature=()).rotation
    return [v for v in range(len(a)) if a[v] != b[v]]


def reachability_equivalence_check(g: CubicGraph, rot_a, rot_b, signature) -> Tuple[int, ...]:
    """Signs that make ``rot_a`` trace the same faces as ``(rot_b, signature)``.

    The flip set S is read off as the vertices where the rotations differ;
    the answer flips the signature once per incidence at S.

    Raises:
        TracingError: the two face multisets differ (an implementation fault).
    """
    signature = tuple(signature)
    flipped = flipped_vertices(rot_a, rot_b)
    adjusted = _flip_signs(signature, _incident_edges(g, flipped))

    faces_a = trace_faces(g, Embedding(rotation=tuple(rot_a), signature=adjusted))
    faces_b = trace_faces(g, Embedding(rotation=tuple(rot_b), signature=signature))
    if faces_a.face_multiset() != faces_b.face_multiset():
        raise TracingError(
            f"rotation flips at {flipped} are not matched by twisting their incident edges"
        )
    return adjusted
