#!/usr/bin/env python3
"""
Facial diagram tests - construction, crossings, structural checks, twist claims, DOT
Run from the repository root: pytest tests/test_facial_diagram.py
"""
import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from tests.conftest import CATALOG
from src.core import facial_diagram
from src.core.embedding_core import classify_edges, planar_like, random_embedding, trace_faces
from src.core.graph_core import named_graph
from src.core.twist_ops import twist
from src.errors import GraphInputError
from src.models.diagram import DiagramProperty, FacialDiagram, FDNode, LinkKind
from src.models.embedding import EdgeClass


def _hand_diagram(darts):
    """One-walk diagram over the given darts; links are not needed by the corner checks."""
    nodes = tuple(FDNode(id=i, walk=0, position=i, edge=d >> 1, dart=d) for i, d in enumerate(darts))
    return FacialDiagram(nodes=nodes, links=(), walk_nodes=(tuple(range(len(darts))),))


# ============ CONSTRUCTION ============

def test_planar_k4_diagram(k4, planar_k4):
    fd = facial_diagram.diagram_of(k4, planar_k4)
    assert len(fd.nodes) == 2 * k4.m
    assert len(fd.links) == 2 * k4.m + k4.m
    assert set(facial_diagram.node_degrees(fd)) == {3}
    assert fd.signs() == {}
    assert facial_diagram.crossing_pairs(fd) == []
    kinds = {l.kind for l in fd.links}
    assert kinds == {LinkKind.FACIAL, LinkKind.REGULAR}


def test_twisted_k4_has_one_minus_link(k4, twisted_k4):
    fd = facial_diagram.diagram_of(k4, twisted_k4)
    assert fd.signs() == {0: facial_diagram.MINUS}
    assert facial_diagram.crossing_partners(fd, 0) == []


def test_theta_torus_links_all_cross(theta):
    fd = facial_diagram.diagram_of(theta, planar_like(theta))
    assert fd.signs() == {0: "+", 1: "+", 2: "+"}
    assert facial_diagram.crossing_pairs(fd) == [(0, 1), (0, 2), (1, 2)]
    assert facial_diagram.crossing_partners(fd, 1) == [0, 2]
    assert facial_diagram.saturated_vertices(fd, theta) == [0, 1]


def test_facial_links_carry_the_shared_vertex(k4, planar_k4):
    fd = facial_diagram.diagram_of(k4, planar_k4)
    for link in fd.links:
        if link.kind is LinkKind.FACIAL:
            assert k4.head(fd.nodes[link.source].dart) == link.vertex
            assert k4.tail(fd.nodes[link.target].dart) == link.vertex


# ============ STRUCTURAL PROPERTIES ============

def test_repeated_corner_is_reported(k4):
    fd = _hand_diagram((0, 3, 0, 3))
    found = facial_diagram.check_structural_property(fd, k4, DiagramProperty.REPEATED_CORNER)
    assert [v.positions for v in found] == [(0, 2), (1, 3)]


def test_reversed_corner_is_reported(k4):
    fd = _hand_diagram((0, 3, 2, 1))
    found = facial_diagram.check_structural_property(fd, k4, DiagramProperty.REVERSED_CORNER)
    assert len(found) == 1
    assert found[0].positions == (0, 2)
    assert found[0].claim == "reversed_corner"


def test_property_number_out_of_range(k4, planar_k4):
    fd = facial_diagram.diagram_of(k4, planar_k4)
    for k in (0, 6):
        with pytest.raises(GraphInputError):
            facial_diagram.check_structural_property(fd, k4, k)


@settings(max_examples=50, deadline=None)
@given(name=st.sampled_from(CATALOG), seed=st.integers(0, 2 ** 32 - 1))
def test_structural_properties_hold(name, seed):
    g = named_graph(name)
    fd = facial_diagram.diagram_of(g, random_embedding(g, np.random.default_rng(seed)))
    for prop in DiagramProperty:
        assert facial_diagram.check_structural_property(fd, g, prop) == [], prop.name


# ============ TWIST CLAIMS ============

def test_bad_twist_on_theta_flips_partners(theta):
    emb = planar_like(theta)
    assert facial_diagram.check_singular_twist(theta, emb, 0) == []
    after = classify_edges(trace_faces(theta, twist(emb, 0)))
    assert after[0] is EdgeClass.BAD_SINGULAR
    assert after[1] is EdgeClass.GOOD_SINGULAR and after[2] is EdgeClass.GOOD_SINGULAR


def test_regular_twist_merges(k4, planar_k4):
    assert facial_diagram.check_regular_twist(k4, planar_k4, 0) == []
    with pytest.raises(GraphInputError):
        facial_diagram.check_regular_twist(k4, twist(planar_k4, 0), 0)


def test_switch_claim(theta, k4, twisted_k4):
    assert facial_diagram.check_switch(k4, twisted_k4, 2) == []
    assert facial_diagram.check_switch(theta, planar_like(theta), 0) == []


@settings(max_examples=25, deadline=None)
@given(name=st.sampled_from(CATALOG), seed=st.integers(0, 2 ** 32 - 1))
def test_twist_claims_hold(name, seed):
    g = named_graph(name)
    emb = random_embedding(g, np.random.default_rng(seed))
    assert facial_diagram.check_twist_claims(g, emb) == []


def test_check_all_on_catalog(k4, planar_k4, twisted_k4):
    assert facial_diagram.check_all(k4, planar_k4) == []
    assert facial_diagram.check_all(k4, twisted_k4) == []


# ============ DOT ============

def test_dot_styles(theta, k4, planar_k4):
    planar = facial_diagram.to_dot(facial_diagram.diagram_of(k4, planar_k4))
    assert planar.startswith("graph facial_diagram {")
    assert planar.endswith("}\n")
    assert "style=dotted" in planar and "style=dashed" not in planar
    assert 'n0 [label="e0"];' in planar

    torus = facial_diagram.to_dot(facial_diagram.diagram_of(theta, planar_like(theta)))
    assert torus.count('style=dashed, label="+"') == 3
    assert "style=dotted" not in torus


def test_dot_minus_label_is_the_minus_sign(k4, twisted_k4):
    dot = facial_diagram.to_dot(facial_diagram.diagram_of(k4, twisted_k4))
    assert dot.count("label=\"\u2212\"") == 1
    assert "label=\"-\"" not in dot
