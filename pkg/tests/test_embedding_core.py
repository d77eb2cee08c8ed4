#!/usr/bin/env python3
"""
Embedding core tests - face tracing, surfaces, edge classes
Run from the repository root: pytest tests/test_embedding_core.py
"""
import sys
from collections import Counter
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

sys.path.insert(0, str(Path(__file__).parent.parent))

from tests.conftest import CATALOG
from src.core.embedding_core import (
    classify_edges,
    count_classes,
    embedding_from_bits,
    euler_characteristic,
    is_circular,
    is_orientable,
    planar_like,
    random_embedding,
    surface_label,
    surface_summary,
    trace_faces,
    validate_embedding,
)
from src.core.graph_core import named_graph
from src.errors import GraphInputError
from src.models.embedding import EdgeClass, Embedding, TraceState, walk_key


# ============ HAND-CHECKED EMBEDDINGS ============

def test_planar_k4_has_four_triangles(k4, planar_k4):
    fs = trace_faces(k4, planar_k4)
    assert fs.face_count == 4
    assert [w.length for w in fs.walks] == [3, 3, 3, 3]
    assert euler_characteristic(k4, fs) == 2
    assert is_circular(fs)
    assert surface_summary(k4, planar_k4, fs)["surface"] == "sphere"


def test_twisted_k4_is_projective(k4, twisted_k4):
    fs = trace_faces(k4, twisted_k4)
    assert fs.face_count == 3
    assert fs.walks[0].darts == (0, 6, 3, 0, 8, 5)
    assert classify_edges(fs)[0] is EdgeClass.GOOD_SINGULAR
    assert count_classes(fs).model_dump() == {"bad": 0, "good": 1, "regular": 5}
    summary = surface_summary(k4, twisted_k4, fs)
    assert summary["face_count"] == 3
    assert summary["euler_characteristic"] == 1
    assert summary["orientable"] is False
    assert summary["surface"] == "projective plane"


def test_theta_standard_rotation_is_one_torus_face(theta):
    emb = planar_like(theta)
    fs = trace_faces(theta, emb)
    assert fs.face_count == 1
    assert fs.walks[0].darts == (0, 3, 4, 1, 2, 5)
    assert count_classes(fs).bad == 3
    assert surface_summary(theta, emb, fs)["surface"] == "torus"


def test_theta_with_one_flipped_vertex_is_planar(theta):
    emb = embedding_from_bits(theta, 1, 0)
    fs = trace_faces(theta, emb)
    assert [w.length for w in fs.walks] == [2, 2, 2]
    assert euler_characteristic(theta, fs) == 2
    assert is_circular(fs)


def test_walk_views(k4, planar_k4):
    walk = trace_faces(k4, planar_k4).walks[0]
    alternating = walk.alternating(k4)
    assert len(alternating) == 2 * walk.length
    assert alternating[1::2] == list(walk.edges)
    hops = walk.export(k4)
    assert all(hops[i]["to"] == hops[(i + 1) % len(hops)]["from"] for i in range(len(hops)))


# ============ INVARIANTS ON RANDOM EMBEDDINGS ============

@settings(max_examples=60, deadline=None)
@given(name=st.sampled_from(CATALOG), seed=st.integers(0, 2 ** 32 - 1))
def test_every_edge_traversed_twice(name, seed):
    g = named_graph(name)
    emb = random_embedding(g, np.random.default_rng(seed))
    fs = trace_faces(g, emb)

    assert fs.total_length == 2 * g.m
    traversals = Counter(e for w in fs.walks for e in w.edges)
    assert all(traversals[e] == 2 for e in range(g.m))
    assert count_classes(fs).total == g.m

    chi = euler_characteristic(g, fs)
    assert chi <= 2
    if is_orientable(g, emb):
        assert chi % 2 == 0


@settings(max_examples=30, deadline=None)
@given(name=st.sampled_from(CATALOG), seed=st.integers(0, 2 ** 32 - 1))
def test_tracing_is_deterministic_and_mirror_free(name, seed):
    g = named_graph(name)
    emb = random_embedding(g, np.random.default_rng(seed))
    fs = trace_faces(g, emb)
    assert fs == trace_faces(g, emb)
    keys = fs.face_multiset()
    assert len(set(keys)) == len(keys), "a face and its mirror were both kept"


def test_negating_a_vertex_star_is_orientable(k4, twisted_k4):
    assert not is_orientable(k4, twisted_k4)
    signature = tuple(-1 if e in k4.incidence[0] else 1 for e in range(k4.m))
    assert is_orientable(k4, Embedding(rotation=twisted_k4.rotation, signature=signature))


# ============ MODELS / VALIDATION ============

def test_rotation_is_stored_lowest_dart_first():
    emb = Embedding(rotation=((2, 0, 4), (5, 3, 1)), signature=(1, 1, 1))
    assert emb.rotation == ((0, 4, 2), (1, 5, 3))


def test_signature_must_be_signs():
    with pytest.raises(ValidationError):
        Embedding(rotation=((0, 2, 4), (1, 3, 5)), signature=(1, 0, 1))


def test_validate_embedding_names_the_vertex(k4, planar_k4):
    with pytest.raises(GraphInputError) as err:
        validate_embedding(k4, planar_k4.model_copy(update={"signature": (1,) * 5}))
    assert "signature" in str(err.value)

    bad = Embedding(rotation=((0, 2, 4), (1, 8, 6), (3, 7, 11), (5, 10, 9)), signature=(1,) * 6)
    with pytest.raises(GraphInputError) as err:
        validate_embedding(k4, bad)
    assert "vertex 2" in str(err.value)


def test_trace_state_ids():
    assert TraceState(7, -1).state_id == 15
    assert TraceState.from_id(15) == TraceState(7, -1)


def test_walk_key_ignores_start_and_direction():
    darts = (0, 6, 3, 0, 8, 5)
    mirror = tuple(d ^ 1 for d in reversed(darts))
    assert walk_key(darts) == walk_key(darts[2:] + darts[:2]) == walk_key(mirror)


@pytest.mark.parametrize("chi, orientable, label", [
    (2, True, "sphere"),
    (0, True, "torus"),
    (-2, True, "orientable genus 2"),
    (1, False, "projective plane"),
    (0, False, "Klein bottle"),
    (-1, False, "nonorientable genus 3"),
])
def test_surface_labels(chi, orientable, label):
    assert surface_label(chi, orientable) == label
