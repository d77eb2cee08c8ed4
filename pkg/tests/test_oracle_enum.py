#!/usr/bin/env python3
"""
Oracle tests - exhaustive sweeps, exact expectations, coverage and minimum-crossing checks
Run from the repository root: pytest tests/test_oracle_enum.py
"""
import io
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core import oracle_enum
from src.core.embedding_core import euler_characteristic, is_circular, planar_like, trace_faces
from src.core.graph_core import named_graph
from src.errors import CapExceededError


# ============ ENUMERATION ============

def test_index_encoding(k4):
    assert oracle_enum.configuration(k4, 0) == planar_like(k4)
    emb = oracle_enum.configuration(k4, 0b11 | (0b100001 << 4))
    assert emb.signature == (-1, 1, 1, 1, 1, -1)
    assert emb.rotation[0] == (0, 4, 2)
    assert emb.rotation[2] == planar_like(k4).rotation[2]


def test_k4_has_1024_configurations(k4):
    indices = [index for index, _, _ in oracle_enum.enumerate_embeddings(k4)]
    assert indices == list(range(1024))


def test_signature_sweep_keeps_the_rotation(k4):
    sweep = list(oracle_enum.enumerate_embeddings(k4, signatures_only=True))
    assert len(sweep) == 64
    assert [index for index, _, _ in sweep[:3]] == [0, 16, 32]
    assert {emb.rotation for _, emb, _ in sweep} == {planar_like(k4).rotation}


def test_shards_cover_the_sweep(k4):
    head = list(oracle_enum.enumerate_embeddings(k4, start=0, stop=10))
    tail = list(oracle_enum.enumerate_embeddings(k4, start=10, stop=12))
    assert [i for i, _, _ in head + tail] == list(range(12))


def test_cap_is_enforced(k33, petersen):
    with pytest.raises(CapExceededError):
        list(oracle_enum.enumerate_embeddings(k33, cap=10))
    with pytest.raises(CapExceededError):
        oracle_enum.summarize(petersen, signatures_only=True, cap=12)


# ============ MINIMA / EXPECTATIONS ============

def test_min_singular_k4_and_k33(k4, k33):
    for g in (k4, k33):
        best, witness = oracle_enum.min_singular(g)
        assert best == 0
        assert is_circular(trace_faces(g, witness))


def test_petersen_signature_sweep_finds_circular(petersen):
    best, witness = oracle_enum.min_singular(petersen, signatures_only=True)
    fs = trace_faces(petersen, witness)
    assert best == 0
    assert is_circular(fs)
    assert fs.face_count == 6
    assert [w.length for w in fs.walks] == [5] * 6
    assert euler_characteristic(petersen, fs) == 1


def test_exact_expectations_sum_to_m(theta, k4):
    for g in (theta, k4):
        bad, good, regular = oracle_enum.exact_expected_classes(g)
        assert bad + good + regular == g.m
        assert all(isinstance(x, Fraction) for x in (bad, good, regular))


def test_summary_on_theta(theta):
    rows = io.StringIO()
    summary = oracle_enum.summarize(theta, rows=rows)
    assert summary.total_configurations == 32
    assert summary.min_singular == 0
    assert summary.conjectured == 1
    assert sum(summary.deviations) == 0
    assert (summary.expected_bad, summary.expected_good, summary.expected_regular) == \
        oracle_enum.exact_expected_classes(theta)

    lines = rows.getvalue().splitlines()
    assert lines[0] == ",".join(oracle_enum.CONFIGURATION_CSV_COLUMNS)
    assert len(lines) == 33

    doc = summary.model_dump(mode="json")
    assert isinstance(doc["expected_bad"], str)


def test_summary_witness_has_the_most_faces(k4):
    summary = oracle_enum.summarize(k4)
    assert summary.min_singular == 0
    assert summary.witness_faces == 4
    assert summary.witness_euler_characteristic == 2


def test_summary_does_not_depend_on_workers(theta):
    single = oracle_enum.summarize(theta)
    sharded = oracle_enum.summarize(theta, workers=3)
    assert sharded == single


# ============ CLAIM CHECKS ============

@pytest.mark.parametrize("name", ["theta", "k4", "k33"])
def test_minimum_embeddings_are_crossing_free(name):
    report = oracle_enum.verify_minimum_crossing_free(named_graph(name))
    assert report.passed
    assert report.min_singular == 0
    assert report.minimum_embeddings_checked > 0


def test_crossing_check_reports_violations(theta):
    report = oracle_enum.verify_minimum_crossing_free(theta, configurations=[planar_like(theta)])
    assert not report.passed
    assert report.min_singular == 3
    assert report.violations == 1
    assert report.crossing_pairs == ((0, 1), (0, 2), (1, 2))
    assert report.first_violation == planar_like(theta)


def test_switch_coverage(theta, k4, k33):
    for g in (theta, k4, k33):
        report = oracle_enum.verify_switch_coverage(g)
        assert report.equal
        assert report.signature_configurations == 2 ** g.m
        assert report.full_configurations == 2 ** (g.n + g.m)
