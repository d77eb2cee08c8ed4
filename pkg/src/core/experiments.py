"""
Experiments - Monte Carlo class counts on random embeddings.

Seed splitting: ``np.random.SeedSequence(seed).spawn(workers)`` gives one child
per worker; worker i draws ``samples // workers`` embeddings, plus one when
``i < samples % workers``. Results are concatenated in worker order, so a run
is reproducible for a fixed (seed, samples, workers).
"""
import csv
import logging
import multiprocessing as mp
import time
from fractions import Fraction
from typing import IO, Iterable, List, Optional

import numpy as np
from scipy.stats import norm

from src import config
from src.core.embedding_core import count_classes, random_embedding, trace_faces
from src.core.graph_core import random_cubic
from src.core.oracle_enum import exact_expected_classes
from src.errors import GraphInputError
from src.models.graph import CubicGraph
from src.models.reports import EXPERIMENT_CSV_COLUMNS, ExperimentReport

logger = logging.getLogger(__name__)

Z99 = float(norm.ppf(0.995))

SWEEP_CSV_COLUMNS = [
    "n", "m", "samples", "seed",
    "bad_per_m", "good_per_m", "regular_per_m",
    "conjectured_per_m",
]


def _split(samples: int, workers: int) -> List[int]:
    base, extra = divmod(samples, workers)
    return [base + (1 if i < extra else 0) for i in range(workers)]


def _sample_counts(g: CubicGraph, samples: int, seed_seq: np.random.SeedSequence) -> np.ndarray:
    """(samples, 3) array of (bad, good, regular) per random embedding."""
    rng = np.random.default_rng(seed_seq)
    out = np.zeros((samples, 3), dtype=np.int64)
    for i in range(samples):
        counts = count_classes(trace_faces(g, random_embedding(g, rng)))
        out[i] = (counts.bad, counts.good, counts.regular)
    return out


def sample_class_counts(g: CubicGraph, samples: int, seed: int, workers: int = 1) -> np.ndarray:
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")

    children = np.random.SeedSequence(seed).spawn(workers)
    shares = _split(samples, workers)
    if workers == 1:
        return _sample_counts(g, shares[0], children[0])

    jobs = [(g, share, child) for share, child in zip(shares, children) if share]
    with mp.Pool(processes=workers) as pool:
        parts = pool.starmap(_sample_counts, jobs)
    return np.concatenate(parts, axis=0)


def monte_carlo_classes(g: CubicGraph, samples: int, seed: int, workers: int = 1,
                        exact: Optional[bool] = None) -> ExperimentReport:
    """Sample random embeddings and report class means, variances and 99% half-widths.

    Half-width is ``z * sqrt(var / samples)`` with ``z`` the 0.995 normal
    quantile and ``var`` the unbiased sample variance. Exact expectations are
    attached when the full sweep fits ``EXACT_ORACLE_CAP`` (or when forced).
    """
    started = time.perf_counter()
    counts = sample_class_counts(g, samples, seed, workers)

    sums = counts.sum(axis=1)
    if np.any(sums != g.m):
        bad_row = int(np.argmax(sums != g.m))
        raise AssertionError(f"sample {bad_row}: class counts sum to {int(sums[bad_row])}, expected m={g.m}")

    means = counts.mean(axis=0)
    var = counts.var(axis=0, ddof=1) if samples > 1 else np.zeros(3)
    half = Z99 * np.sqrt(var / samples)

    if exact is None:
        exact = g.n + g.m <= config.EXACT_ORACLE_CAP
    exact_values = exact_expected_classes(g) if exact else (None, None, None)

    logger.info(
        f"🎲 {g.name}: {samples} sample(s) in {time.perf_counter() - started:.1f}s, "
        f"means bad={means[0]:.4f} good={means[1]:.4f} regular={means[2]:.4f} (m/3 = {g.m / 3:.4f})"
    )
    return ExperimentReport(
        graph=g.name,
        n=g.n,
        m=g.m,
        samples=samples,
        seed=seed,
        workers=workers,
        mean_bad=float(means[0]),
        mean_good=float(means[1]),
        mean_regular=float(means[2]),
        var_bad=float(var[0]),
        var_good=float(var[1]),
        var_regular=float(var[2]),
        ci99_bad=float(half[0]),
        ci99_good=float(half[1]),
        ci99_regular=float(half[2]),
        conjectured=g.m / 3,
        exact_bad=exact_values[0],
        exact_good=exact_values[1],
        exact_regular=exact_values[2],
    )


def experiment_row(report: ExperimentReport) -> list:
    data = report.model_dump()
    return [data[column] for column in EXPERIMENT_CSV_COLUMNS]


def write_experiment_csv(reports: Iterable[ExperimentReport], out: IO[str]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(EXPERIMENT_CSV_COLUMNS)
    for report in reports:
        writer.writerow(experiment_row(report))


def sweep_families(n_list: Iterable[int], samples: int, seed: int) -> List[list]:
    """Per n: ``samples`` fresh random cubic graphs, one random embedding each; means normalized by m."""
    n_list = list(n_list)
    for n in n_list:
        if n < 4 or n % 2:
            raise GraphInputError(f"sweep sizes must be even and >= 4, got {n}")
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")

    rows = []
    for n, child in zip(n_list, np.random.SeedSequence(seed).spawn(len(n_list))):
        rng = np.random.default_rng(child)
        m = 3 * n // 2
        totals = np.zeros(3, dtype=np.int64)
        for _ in range(samples):
            g = random_cubic(n, rng)
            counts = count_classes(trace_faces(g, random_embedding(g, rng)))
            totals += (counts.bad, counts.good, counts.regular)
        normalized = totals / (samples * m)
        rows.append([n, m, samples, seed, *(float(x) for x in normalized), 1 / 3])
        logger.info(f"📈 n={n}: per-edge means {', '.join(f'{x:.4f}' for x in normalized)}")
    return rows


def write_sweep_csv(rows: Iterable[list], out: IO[str]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SWEEP_CSV_COLUMNS)
    writer.writerows(rows)


def exact_deviation(report: ExperimentReport) -> Optional[List[Fraction]]:
    """Exact expectation minus m/3 per class, when exact values are attached."""
    if report.exact_bad is None:
        return None
    c = Fraction(report.m, 3)
    return [report.exact_bad - c, report.exact_good - c, report.exact_regular - c]
