"""
Embedding Core - signed rotation systems, face tracing and edge classification.

Face tracing works on trace states ``(dart, sense)``. From a state whose dart
``d`` runs ``u -> v`` along edge ``e`` with sense ``s``:

    s' = s * signature[e]
    next dart = rotation successor of reverse(d) at v   if s' == +1
              = rotation predecessor of reverse(d) at v if s' == -1
    next state = (next dart, s')

The successor permutation on the 4m states splits into orbits that come in
mirror pairs (same darts, reversed and each dart reversed). One orbit per pair
is a face; the kept one is the orbit holding the smaller state id.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.core.graph_core import girth
from src.errors import GraphInputError, TracingError
from src.models.embedding import (
    ClassCounts,
    EdgeClass,
    EdgeOccurrence,
    Embedding,
    FaceSet,
    FacialWalk,
    TraceState,
    least_rotation,
)
from src.models.graph import CubicGraph

logger = logging.getLogger(__name__)


# ============ CONSTRUCTION ============

def validate_embedding(g: CubicGraph, emb: Embedding) -> Embedding:
    """Check that ``emb`` fits ``g``; returns it unchanged."""
    if len(emb.rotation) != g.n:
        raise GraphInputError(f"rotation has {len(emb.rotation)} vertices, graph has {g.n}")
    if len(emb.signature) != g.m:
        raise GraphInputError(f"signature has {len(emb.signature)} entries, graph has {g.m} edges")
    for v, triple in enumerate(emb.rotation):
        expected = sorted(g.darts_at(v))
        if sorted(triple) != expected:
            raise GraphInputError(
                f"rotation at vertex {v} is {list(triple)}, must list the darts {expected} leaving it"
            )
    return emb


def standard_rotation(g: CubicGraph) -> Tuple[Tuple[int, int, int], ...]:
    """Darts in incidence order at every vertex."""
    return tuple(g.darts_at(v) for v in range(g.n))


def embedding_from_bits(g: CubicGraph, rotation_bits: int, signature_bits: int) -> Embedding:
    """Bit ``v`` of ``rotation_bits`` reverses the rotation at v; bit ``e`` of ``signature_bits`` makes edge e negative."""
    rotation = []
    for v in range(g.n):
        a, b, c = g.darts_at(v)
        rotation.append((a, c, b) if (rotation_bits >> v) & 1 else (a, b, c))
    signature = tuple(-1 if (signature_bits >> e) & 1 else 1 for e in range(g.m))
    return Embedding(rotation=tuple(rotation), signature=signature)


def embedding_from_choices(g: CubicGraph, reversed_at: Sequence[bool], negative: Sequence[bool]) -> Embedding:
    rotation_bits = sum(1 << v for v, flag in enumerate(reversed_at) if flag)
    signature_bits = sum(1 << e for e, flag in enumerate(negative) if flag)
    return embedding_from_bits(g, rotation_bits, signature_bits)


def planar_like(g: CubicGraph) -> Embedding:
    """Standard rotation with every edge positive."""
    return Embedding(rotation=standard_rotation(g), signature=(1,) * g.m)


def random_embedding(g: CubicGraph, rng: np.random.Generator) -> Embedding:
    """Independent uniform rotation per vertex and sign per edge."""
    flips = rng.integers(0, 2, size=g.n)
    signs = rng.integers(0, 2, size=g.m)
    return embedding_from_choices(g, [bool(f) for f in flips], [bool(s) for s in signs])


# ============ FACE TRACING ============

def _neighbours(g: CubicGraph, emb: Embedding) -> Tuple[List[int], List[int]]:
    """Rotation successor and predecessor of every dart."""
    succ = [0] * (2 * g.m)
    pred = [0] * (2 * g.m)
    for a, b, c in emb.rotation:
        succ[a], succ[b], succ[c] = b, c, a
        pred[a], pred[b], pred[c] = c, a, b
    return succ, pred


def _orbits(g: CubicGraph, emb: Embedding) -> List[List[int]]:
    """Orbits of the successor map as state-id lists, each starting at its smallest id."""
    succ, pred = _neighbours(g, emb)
    signature = emb.signature
    total = 4 * g.m
    seen = [False] * total
    orbits: List[List[int]] = []

    for start in range(total):
        if seen[start]:
            continue
        orbit = []
        sid = start
        while not seen[sid]:
            seen[sid] = True
            orbit.append(sid)
            dart, negative = sid >> 1, sid & 1
            sense = (-1 if negative else 1) * signature[dart >> 1]
            back = dart ^ 1
            nxt = succ[back] if sense > 0 else pred[back]
            sid = 2 * nxt + (1 if sense < 0 else 0)
        if sid != start:
            raise TracingError(f"successor map is not a permutation: orbit from state {start} re-entered at {sid}")
        orbits.append(orbit)
    return orbits


def trace_faces(g: CubicGraph, emb: Embedding) -> FaceSet:
    """Trace every facial walk of ``emb``, one representative per mirror pair."""
    validate_embedding(g, emb)
    orbits = _orbits(g, emb)

    by_darts: Dict[Tuple[int, ...], int] = {}
    dart_seqs = []
    for i, orbit in enumerate(orbits):
        darts = tuple(sid >> 1 for sid in orbit)
        dart_seqs.append(darts)
        by_darts[least_rotation(darts)] = i

    kept: List[List[int]] = []
    dropped = set()
    for i, orbit in enumerate(orbits):
        if i in dropped:
            continue
        mirror = tuple(d ^ 1 for d in reversed(dart_seqs[i]))
        partner = by_darts.get(least_rotation(mirror))
        if partner is None:
            raise TracingError(f"orbit starting at state {orbit[0]} has no mirror orbit")
        if partner == i:
            raise TracingError(f"orbit starting at state {orbit[0]} is its own mirror")
        dropped.add(partner)
        kept.append(orbit)

    occurrences: List[List[EdgeOccurrence]] = [[] for _ in range(g.m)]
    walks = []
    for w, orbit in enumerate(kept):
        states = tuple(TraceState.from_id(sid) for sid in orbit)
        for p, state in enumerate(states):
            occurrences[state.dart >> 1].append(EdgeOccurrence(w, p, state.dart & 1))
        walks.append(FacialWalk.model_construct(states=states))

    for e, occ in enumerate(occurrences):
        if len(occ) != 2:
            raise TracingError(f"edge {e} is traversed {len(occ)} times by the kept walks, expected 2")

    # hot path in sweeps: fields are built here, skip re-validation
    return FaceSet.model_construct(walks=tuple(walks), edge_index=tuple((a, b) for a, b in occurrences))


# ============ SURFACE ============

def euler_characteristic(g: CubicGraph, fs: FaceSet) -> int:
    return g.n - g.m + fs.face_count


def is_orientable(g: CubicGraph, emb: Embedding) -> bool:
    """True iff every cycle has positive sign product (BFS vertex signs, then check non-tree edges)."""
    sigma: List[Optional[int]] = [None] * g.n
    for root in range(g.n):
        if sigma[root] is not None:
            continue
        sigma[root] = 1
        queue = [root]
        while queue:
            u = queue.pop()
            for e in g.incidence[u]:
                a, b = g.edges[e]
                w = b if a == u else a
                expected = sigma[u] * emb.signature[e]
                if sigma[w] is None:
                    sigma[w] = expected
                    queue.append(w)
                elif sigma[w] != expected:
                    return False
    return True


def surface_label(chi: int, orientable: bool) -> str:
    if orientable:
        genus = (2 - chi) // 2
        return {0: "sphere", 1: "torus"}.get(genus, f"orientable genus {genus}")
    crosscaps = 2 - chi
    return {1: "projective plane", 2: "Klein bottle"}.get(crosscaps, f"nonorientable genus {crosscaps}")


def surface_summary(g: CubicGraph, emb: Embedding, fs: FaceSet = None) -> dict:
    fs = fs or trace_faces(g, emb)
    chi = euler_characteristic(g, fs)
    orientable = is_orientable(g, emb)
    return {
        "face_count": fs.face_count,
        "euler_characteristic": chi,
        "orientable": orientable,
        "surface": surface_label(chi, orientable),
    }


# ============ CLASSIFICATION ============

def classify_edges(fs: FaceSet) -> Dict[int, EdgeClass]:
    classes: Dict[int, EdgeClass] = {}
    for e, (first, second) in enumerate(fs.edge_index):
        if first.walk != second.walk:
            classes[e] = EdgeClass.REGULAR
        elif first.end == second.end:
            classes[e] = EdgeClass.GOOD_SINGULAR
        else:
            classes[e] = EdgeClass.BAD_SINGULAR
    return classes


def count_classes(fs: FaceSet) -> ClassCounts:
    classes = classify_edges(fs)
    values = list(classes.values())
    return ClassCounts(
        bad=values.count(EdgeClass.BAD_SINGULAR),
        good=values.count(EdgeClass.GOOD_SINGULAR),
        regular=values.count(EdgeClass.REGULAR),
    )


def singular_edges(fs: FaceSet) -> List[int]:
    return [e for e, c in classify_edges(fs).items() if c.is_singular]


def is_circular(fs: FaceSet) -> bool:
    """No singular edge, so every facial walk is a cycle."""
    return all(first.walk != second.walk for first, second in fs.edge_index)


def max_circular_faces(g: CubicGraph) -> int:
    """Upper bound on the faces of a circular embedding: every face is a cycle of length >= girth."""
    return 2 * g.m // girth(g)
