#!/usr/bin/env python3
"""
Experiment tests - Monte Carlo reports, seeding, family sweeps, CSV output
Run from the repository root: pytest tests/test_experiments.py
"""
import io
import math
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core import experiments
from src.errors import GraphInputError
from src.models.reports import EXPERIMENT_CSV_COLUMNS


def test_report_is_consistent(k4):
    report = experiments.monte_carlo_classes(k4, 300, seed=1)
    assert report.mean_bad + report.mean_good + report.mean_regular == pytest.approx(k4.m)
    assert report.conjectured == 2
    assert report.ci99_regular == pytest.approx(experiments.Z99 * math.sqrt(report.var_regular / 300))
    assert experiments.Z99 == pytest.approx(2.5758, abs=1e-4)


def test_k4_means_match_exact_expectations(k4):
    report = experiments.monte_carlo_classes(k4, 2000, seed=2024)
    exact = (report.exact_bad, report.exact_good, report.exact_regular)
    means = (report.mean_bad, report.mean_good, report.mean_regular)
    variances = (report.var_bad, report.var_good, report.var_regular)
    for mean, var, value in zip(means, variances, exact):
        assert abs(mean - float(value)) <= 3 * math.sqrt(var / report.samples)


def test_same_seed_same_report(k4):
    assert experiments.monte_carlo_classes(k4, 50, seed=9) == experiments.monte_carlo_classes(k4, 50, seed=9)


def test_exact_values_attached_for_small_graphs(k4, petersen):
    report = experiments.monte_carlo_classes(k4, 20, seed=2)
    assert report.exact_bad is not None
    assert sum(experiments.exact_deviation(report)) == 0

    big = experiments.monte_carlo_classes(petersen, 20, seed=2)
    assert big.exact_bad is None
    assert experiments.exact_deviation(big) is None


def test_sample_matrix_shape_with_workers(theta):
    counts = experiments.sample_class_counts(theta, 7, seed=4, workers=2)
    assert counts.shape == (7, 3)
    assert (counts.sum(axis=1) == theta.m).all()
    again = experiments.sample_class_counts(theta, 7, seed=4, workers=2)
    assert (counts == again).all()


def test_bad_sample_sizes(k4):
    with pytest.raises(ValueError):
        experiments.monte_carlo_classes(k4, 0, seed=1)
    with pytest.raises(ValueError):
        experiments.sample_class_counts(k4, 10, seed=1, workers=0)


def test_experiment_csv(k4):
    out = io.StringIO()
    experiments.write_experiment_csv([experiments.monte_carlo_classes(k4, 10, seed=3)], out)
    header, row = out.getvalue().splitlines()
    assert header.split(",") == EXPERIMENT_CSV_COLUMNS
    assert row.startswith("k4,4,6,10,3,")


def test_family_sweep_rows():
    rows = experiments.sweep_families([6, 8], samples=4, seed=5)
    assert [row[0] for row in rows] == [6, 8]
    assert [row[1] for row in rows] == [9, 12]
    for row in rows:
        assert sum(row[4:7]) == pytest.approx(1.0)
        assert row[7] == pytest.approx(1 / 3)

    out = io.StringIO()
    experiments.write_sweep_csv(rows, out)
    assert out.getvalue().splitlines()[0].split(",") == experiments.SWEEP_CSV_COLUMNS


def test_family_sweep_rejects_odd_sizes():
    with pytest.raises(GraphInputError):
        experiments.sweep_families([7], samples=2, seed=0)
