#!/usr/bin/env python3
"""
Acceptance Campaign Script

Runs the randomized property campaigns and the exhaustive oracle checks end to end,
timing each one and printing a summary. Exits 2 if any campaign reports a violation.

Run this from the repository root:
    python scripts/acceptance_campaign.py
    python scripts/acceptance_campaign.py --only faces oracle --seed 11
    python scripts/acceptance_campaign.py --scale 0.1     # smoke run, fewer samples
"""
import argparse
import math
import sys
import time
from collections import Counter
from pathlib import Path
from typing import Callable, Dict, List, Tuple

import numpy as np

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from src import config
from src.core import embedding_core, experiments, facial_diagram, oracle_enum, reduction_search
from src.core.graph_core import named_graph, random_cubic
from src.errors import ClaimFalsifiedError
from src.models.graph import CubicGraph

CATALOG = ["theta", "k4", "k33", "petersen"]

# (checked count, failure messages)
Outcome = Tuple[int, List[str]]


def graph_pool(rng: np.random.Generator) -> List[CubicGraph]:
    """Catalog graphs plus one random bridgeless cubic graph per n in 8..14."""
    pool = [named_graph(name) for name in CATALOG]
    pool.extend(random_cubic(n, rng) for n in (8, 10, 12, 14))
    return pool


def samples_from(pool: List[CubicGraph], count: int, rng: np.random.Generator):
    for _ in range(count):
        g = pool[int(rng.integers(len(pool)))]
        yield g, embedding_core.random_embedding(g, rng)


# ============ CAMPAIGNS ============

def campaign_faces(pool, count, rng) -> Outcome:
    failures = []
    for g, emb in samples_from(pool, count, rng):
        fs = embedding_core.trace_faces(g, emb)
        traversals = Counter(e for w in fs.walks for e in w.edges)
        chi = embedding_core.euler_characteristic(g, fs)
        if fs.total_length != 2 * g.m:
            failures.append(f"{g.name}: walk lengths sum to {fs.total_length}, expected {2 * g.m}")
        if any(traversals[e] != 2 for e in range(g.m)):
            failures.append(f"{g.name}: some edge is not traversed exactly twice")
        if chi > 2 or (embedding_core.is_orientable(g, emb) and chi % 2):
            failures.append(f"{g.name}: impossible Euler characteristic {chi}")
    return count, failures


def campaign_regular_twist(pool, count, rng) -> Outcome:
    failures, checked = [], 0
    for g, emb in samples_from(pool, count, rng):
        fs = embedding_core.trace_faces(g, emb)
        for e, cls in embedding_core.classify_edges(fs).items():
            if cls.is_singular:
                continue
            checked += 1
            failures.extend(f"{g.name}: {v.claim}: {v.detail}"
                            for v in facial_diagram.check_regular_twist(g, emb, e, fs))
    return checked, failures


def campaign_switch(pool, count, rng) -> Outcome:
    failures = []
    for g, emb in samples_from(pool, count, rng):
        v = int(rng.integers(g.n))
        failures.extend(f"{g.name}: {x.detail} at vertex {v}" for x in facial_diagram.check_switch(g, emb, v))
    for name in ("theta", "k4", "k33"):
        report = oracle_enum.verify_switch_coverage(named_graph(name))
        if not report.equal:
            failures.append(f"{name}: signature sweep reaches {report.signature_face_sets} "
                            f"of {report.full_face_sets} face sets")
    return count + 3, failures


def campaign_singular_twist(pool, count, rng) -> Outcome:
    failures, checked = [], 0
    for g, emb in samples_from(pool, count, rng):
        fs = embedding_core.trace_faces(g, emb)
        for e in embedding_core.singular_edges(fs):
            checked += 1
            failures.extend(f"{g.name}: {v.claim}: {v.detail}"
                            for v in facial_diagram.check_singular_twist(g, emb, e, fs))
    return checked, failures


def campaign_structural(pool, count, rng) -> Outcome:
    failures = []
    for g, emb in samples_from(pool, count, rng):
        fd = facial_diagram.diagram_of(g, emb)
        for k in range(1, 6):
            failures.extend(f"{g.name}: {v.claim}: {v.detail}"
                            for v in facial_diagram.check_structural_property(fd, g, k))
    return count, failures


def campaign_oracle(pool, count, rng) -> Outcome:
    failures = []
    for name, signatures_only in (("k4", False), ("k33", False), ("petersen", True)):
        g = named_graph(name)
        best, witness = oracle_enum.min_singular(g, signatures_only)
        fs = embedding_core.trace_faces(g, witness)
        chi = embedding_core.euler_characteristic(g, fs)
        print(f"   {name}: min singular {best}, witness {fs.face_count} faces, chi {chi}")
        if best != 0 or not embedding_core.is_circular(fs):
            failures.append(f"{name}: no circular witness (min singular {best})")
        elif name == "petersen" and (fs.face_count, chi) != (6, 1):
            failures.append(f"petersen: witness has {fs.face_count} faces and chi {chi}, expected 6 and 1")

    petersen = named_graph("petersen")
    outcome = reduction_search.search_circular_exhaustive(petersen)
    if (outcome.witness_faces, outcome.witness_euler_characteristic) != (6, 1):
        failures.append(f"petersen search: witness has {outcome.witness_faces} faces, "
                        f"chi {outcome.witness_euler_characteristic}")
    return 4, failures


def campaign_minimum_crossings(pool, count, rng) -> Outcome:
    failures, checked = [], 0
    for name in ("theta", "k4", "k33"):
        report = oracle_enum.verify_minimum_crossing_free(named_graph(name))
        checked += report.minimum_embeddings_checked
        if not report.passed:
            failures.append(f"{name}: {report.violations} minimum embedding(s) with crossings "
                            f"{list(report.crossing_pairs)}")
    return checked, failures


def campaign_greedy(pool, count, rng) -> Outcome:
    failures = []
    for g, emb in samples_from(pool, count, rng):
        try:
            _, sequence = reduction_search.greedy_reduce(g, emb)
        except ClaimFalsifiedError as e:
            failures.append(f"{g.name}: {e}")
            continue
        if sequence.final_counts.good:
            failures.append(f"{g.name}: {sequence.final_counts.good} '-' link(s) left")
        if any(step.after.bad > step.before.bad for step in sequence.steps):
            failures.append(f"{g.name}: a greedy step added '+' links")
        if sequence.final_counts.singular > sequence.initial_counts.bad:
            failures.append(f"{g.name}: final singular {sequence.final_counts.singular} "
                            f"exceeds initial '+' count {sequence.initial_counts.bad}")
    return count, failures


def campaign_matching(pool, count, rng) -> Outcome:
    failures = []
    graphs = [named_graph(name) for name in CATALOG]
    graphs.extend(random_cubic(int(rng.choice([4, 6, 8, 10, 12, 14, 16])), rng) for _ in range(count))
    for g in graphs:
        emb, matching = reduction_search.matching_bound_embedding(g)
        failures.extend(f"{g.name}: {v.claim}: {v.detail}"
                        for v in reduction_search.matching_bound_violations(g, emb, matching))
    return len(graphs), failures


def campaign_monte_carlo(pool, count, rng) -> Outcome:
    g = named_graph("k4")
    report = experiments.monte_carlo_classes(g, count, seed=int(rng.integers(2 ** 31)), exact=True)
    failures = []
    for cls in ("bad", "good", "regular"):
        mean = getattr(report, f"mean_{cls}")
        exact = float(getattr(report, f"exact_{cls}"))
        sigma = math.sqrt(getattr(report, f"var_{cls}") / count)
        if abs(mean - exact) > 3 * sigma:
            failures.append(f"k4 {cls}: mean {mean:.4f} is more than 3 sigma from exact {exact:.4f}")
    deviation = ", ".join(str(d) for d in experiments.exact_deviation(report))
    print(f"   k4 exact expectation - m/3 (bad, good, regular): {deviation}")
    return count, failures


# name -> (campaign, default count)
CAMPAIGNS: Dict[str, Tuple[Callable[..., Outcome], int]] = {
    "faces": (campaign_faces, 1000),
    "regular-twist": (campaign_regular_twist, 200),
    "switch": (campaign_switch, 200),
    "singular-twist": (campaign_singular_twist, 500),
    "structural": (campaign_structural, 1000),
    "oracle": (campaign_oracle, 1),
    "minimum-crossings": (campaign_minimum_crossings, 1),
    "greedy": (campaign_greedy, 500),
    "matching": (campaign_matching, 50),
    "monte-carlo": (campaign_monte_carlo, 100000),
}


def main():
    parser = argparse.ArgumentParser(description="Run the acceptance campaigns")
    parser.add_argument('--only', nargs='+', choices=list(CAMPAIGNS), help='Run only these campaigns')
    parser.add_argument('--seed', type=int, default=2024, help='Root seed for every campaign')
    parser.add_argument('--scale', type=float, default=1.0, help='Multiply every sample count by this')
    args = parser.parse_args()

    config.configure_logging("WARNING")

    print("=" * 80)
    print("🧪 ACCEPTANCE CAMPAIGN")
    print("=" * 80)
    print(f"Seed: {args.seed}   Scale: {args.scale}")
    print()

    names = args.only or list(CAMPAIGNS)
    seeds = np.random.SeedSequence(args.seed).spawn(len(CAMPAIGNS))
    seed_of = dict(zip(CAMPAIGNS, seeds))

    results = []
    total_start = time.time()
    for name in names:
        campaign, default_count = CAMPAIGNS[name]
        count = max(1, int(default_count * args.scale))
        rng = np.random.default_rng(seed_of[name])
        pool = graph_pool(rng)

        print(f"▶️  {name} ({count})")
        start = time.time()
        checked, failures = campaign(pool, count, rng)
        elapsed = time.time() - start

        status = "✅" if not failures else "❌"
        print(f"{status} {name}: {checked} checked, {len(failures)} failure(s), {elapsed:.1f}s")
        for message in failures[:10]:
            print(f"   - {message}")
        results.append((name, checked, len(failures), elapsed))

    print()
    print("=" * 80)
    print("📊 SUMMARY")
    print("=" * 80)
    for name, checked, failed, elapsed in results:
        print(f"  {'✅' if not failed else '❌'} {name:<20} {checked:>8} checked  {failed:>4} failed  {elapsed:>7.1f}s")
    print(f"  ⏱️  Total: {time.time() - total_start:.1f}s")

    return 2 if any(failed for _, _, failed, _ in results) else 0


if __name__ == "__main__":
    sys.exit(main())
