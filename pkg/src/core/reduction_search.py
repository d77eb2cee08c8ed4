"""
Reduction Search - greedy '-' link reduction, the '+' cascade heuristic,
exhaustive circular search over signatures, and the matching-bound embedding.
"""
import logging
import time
from typing import List, Optional, Tuple

import numpy as np

from src import config
from src.core.embedding_core import (
    classify_edges,
    count_classes,
    euler_characteristic,
    max_circular_faces,
    standard_rotation,
    trace_faces,
    validate_embedding,
)
from src.core.facial_diagram import build_diagram, crossing_pairs, crossing_partners
from src.core.graph_core import perfect_matching, two_factor_cycles
from src.core.twist_ops import twist
from src.errors import CapExceededError, ClaimFalsifiedError
from src.models.diagram import PropertyViolation
from src.models.embedding import EdgeClass, Embedding, FaceSet, walk_key
from src.models.graph import CubicGraph, Matching
from src.models.reports import SearchOutcome, SearchStatus, TwistRecord, TwistSequence

logger = logging.getLogger(__name__)


def _record(e: int, before: FaceSet, after: FaceSet) -> TwistRecord:
    return TwistRecord(
        edge=e,
        before=count_classes(before),
        after=count_classes(after),
        faces_before=before.face_count,
        faces_after=after.face_count,
    )


# ============ GREEDY REDUCTION ============

def _reduce_steps(g: CubicGraph, emb: Embedding) -> Tuple[Embedding, FaceSet, List[TwistRecord]]:
    """Twist the smallest '-' link until none remain; every step is checked."""
    fs = trace_faces(g, emb)
    steps: List[TwistRecord] = []
    while True:
        classes = classify_edges(fs)
        good = [e for e, c in classes.items() if c is EdgeClass.GOOD_SINGULAR]
        if not good:
            return emb, fs, steps

        e = good[0]
        partners = crossing_partners(build_diagram(g, fs), e)
        nxt = twist(emb, e)
        nxt_fs = trace_faces(g, nxt)
        record = _record(e, fs, nxt_fs)

        drop = record.before.singular - record.after.singular
        if drop < 1 + len(partners) or record.after.bad > record.before.bad:
            violation = PropertyViolation(
                claim="greedy_step",
                edges=(e, *partners),
                detail=(
                    f"twisting '-' link {e} with {len(partners)} crossing partner(s): "
                    f"singular {record.before.singular} -> {record.after.singular}, "
                    f"'+' {record.before.bad} -> {record.after.bad}"
                ),
            )
            raise ClaimFalsifiedError(violation.detail, [violation])

        logger.debug(f"greedy: twisted {e}, singular {record.before.singular} -> {record.after.singular}")
        steps.append(record)
        emb, fs = nxt, nxt_fs


def greedy_reduce(g: CubicGraph, emb: Embedding) -> Tuple[Embedding, TwistSequence]:
    """Remove every '-' link, smallest edge id first, never adding '+' links.

    Raises:
        ClaimFalsifiedError: a step failed to drop the singular count by
            1 + its crossing partners, or raised the '+' count.
    """
    validate_embedding(g, emb)
    initial_counts = count_classes(trace_faces(g, emb))
    final, fs, steps = _reduce_steps(g, emb)
    sequence = TwistSequence(
        steps=tuple(steps),
        initial=emb,
        final=final,
        initial_counts=initial_counts,
        final_counts=count_classes(fs),
    )
    return final, sequence


# ============ PLUS CASCADE ============

def plus_cascade(g: CubicGraph, emb: Embedding, budget: int = None,
                 rng: np.random.Generator = None) -> Tuple[Embedding, TwistSequence]:
    """Alternate greedy reduction with random '+' twists on crossing '+' links.

    A '+' twist turns its crossing partners into '-' links, which the next
    greedy pass removes. ``budget`` counts '+' twists. Returns the best
    embedding seen and the twist prefix that reaches it.
    """
    validate_embedding(g, emb)
    budget = config.CASCADE_BUDGET if budget is None else budget
    if budget < 0:
        raise ValueError(f"budget must be >= 0, got {budget}")
    rng = rng if rng is not None else np.random.default_rng(0)

    initial_counts = count_classes(trace_faces(g, emb))
    current, fs, steps = _reduce_steps(g, emb)
    best, best_fs, best_len = current, fs, len(steps)
    rounds = best_rounds = 0

    while count_classes(fs).singular > 0 and rounds < budget:
        fd = build_diagram(g, fs)
        classes = classify_edges(fs)
        crossing = {e for pair in crossing_pairs(fd) for e in pair}
        candidates = sorted(e for e in crossing if classes[e] is EdgeClass.BAD_SINGULAR)
        if not candidates:
            logger.debug(f"cascade: no '+' link with a crossing partner after {rounds} round(s)")
            break

        e = candidates[int(rng.integers(len(candidates)))]
        nxt = twist(current, e)
        nxt_fs = trace_faces(g, nxt)
        steps.append(_record(e, fs, nxt_fs))
        rounds += 1

        current, fs, more = _reduce_steps(g, nxt)
        steps.extend(more)
        if count_classes(fs).singular < count_classes(best_fs).singular:
            best, best_fs, best_len, best_rounds = current, fs, len(steps), rounds

    logger.info(
        f"🔁 cascade on {g.name}: {rounds} round(s), singular "
        f"{initial_counts.singular} -> {count_classes(best_fs).singular}"
    )
    sequence = TwistSequence(
        steps=tuple(steps[:best_len]),
        initial=emb,
        final=best,
        initial_counts=initial_counts,
        final_counts=count_classes(best_fs),
        rounds=best_rounds,
    )
    return best, sequence


# ============ EXHAUSTIVE SEARCH ============

def search_circular_exhaustive(g: CubicGraph, rotation=None, cap: int = None) -> SearchOutcome:
    """Sweep every signature under a fixed rotation in Gray-code order.

    Consecutive signatures differ in one edge. The witness is the first
    circular embedding with the most faces; the sweep stops as soon as one
    reaches ``max_circular_faces``. Without a circular embedding the smallest
    singular count seen is returned.
    """
    cap = config.SEARCH_CAP if cap is None else cap
    if g.m > cap:
        raise CapExceededError(f"{g.name}: signature search needs 2^{g.m} states, cap is 2^{cap}")

    rotation = tuple(rotation) if rotation is not None else standard_rotation(g)
    signature = [1] * g.m
    best_singular: Optional[int] = None
    best: Optional[Embedding] = None
    witness: Optional[Tuple[Embedding, FaceSet]] = None
    ceiling = max_circular_faces(g)
    started = time.perf_counter()
    total = 1 << g.m

    visited = 0
    for i in range(total):
        if i:
            flip = (i & -i).bit_length() - 1
            signature[flip] = -signature[flip]
        emb = Embedding(rotation=rotation, signature=tuple(signature))
        fs = trace_faces(g, emb)
        visited = i + 1
        singular = count_classes(fs).singular
        if best_singular is None or singular < best_singular:
            best_singular, best = singular, emb
        if singular == 0 and (witness is None or fs.face_count > witness[1].face_count):
            witness = (emb, fs)
            if fs.face_count >= ceiling:
                break

    if witness is not None:
        emb, fs = witness
        logger.info(f"✅ {g.name}: circular embedding with {fs.face_count} face(s) after {visited} signature(s)")
        return SearchOutcome(
            status=SearchStatus.CIRCULAR_FOUND,
            witness=emb,
            witness_faces=fs.face_count,
            witness_euler_characteristic=euler_characteristic(g, fs),
            states_visited=visited,
            best_singular=0,
            best_embedding=emb,
        )

    logger.info(f"❌ {g.name}: no circular embedding in {total} signatures ({time.perf_counter() - started:.1f}s)")
    return SearchOutcome(
        status=SearchStatus.BUDGET_EXHAUSTED,
        states_visited=total,
        best_singular=best_singular,
        best_embedding=best,
    )


# ============ MATCHING BOUND ============

def matching_bound_embedding(g: CubicGraph) -> Tuple[Embedding, Matching]:
    """Orient the 2-factor left by a perfect matching so every cycle is a face.

    At each vertex the rotation runs reverse(incoming factor dart), outgoing
    factor dart, matching dart; every sign is +1. Only matching edges can end
    up singular.
    """
    matching = perfect_matching(g)
    rotation: List[Optional[Tuple[int, int, int]]] = [None] * g.n
    matched_at = {}
    for e in matching.edges:
        u, v = g.edges[e]
        matched_at[u] = g.dart_at(u, e)
        matched_at[v] = g.dart_at(v, e)

    for cycle in two_factor_cycles(g, matching):
        darts = cycle.darts(g)
        for i, v in enumerate(cycle.vertices):
            incoming = darts[i - 1]
            outgoing = darts[i]
            rotation[v] = (incoming ^ 1, outgoing, matched_at[v])

    return Embedding(rotation=tuple(rotation), signature=(1,) * g.m), matching


def matching_bound_violations(g: CubicGraph, emb: Embedding, matching: Matching) -> List[PropertyViolation]:
    """Check the construction: factor cycles are faces, factor edges regular, singular edges matched."""
    fs = trace_faces(g, emb)
    classes = classify_edges(fs)
    matched = set(matching.edges)
    violations = []

    off_matching = [e for e, c in classes.items() if c.is_singular and e not in matched]
    if off_matching:
        violations.append(PropertyViolation(
            claim="singular_within_matching", edges=tuple(off_matching),
            detail=f"singular edges {off_matching} are not matching edges",
        ))

    faces = set(fs.face_multiset())
    for cycle in two_factor_cycles(g, matching):
        key = walk_key(tuple(cycle.darts(g)))
        if key not in faces:
            violations.append(PropertyViolation(
                claim="factor_cycle_is_face", edges=cycle.edges,
                detail=f"2-factor cycle through {list(cycle.vertices)} is not a facial walk",
            ))

    singular = sum(c.is_singular for c in classes.values())
    if 3 * singular > g.m:
        violations.append(PropertyViolation(
            claim="singular_at_most_third", detail=f"{singular} singular edges exceed m/3 = {g.m / 3:g}",
        ))
    return violations
