"""
Oracle Enum - brute-force sweeps over embedding space for small graphs.

Configuration index encoding (little-endian)::

    index = rotation_bits | (signature_bits << n)

Bit v < n reverses the incidence-order rotation at vertex v; bit n + e makes
edge e negative. Index order is the sweep order. Among configurations with the
minimum singular count, witnesses are the first one with the most faces.
"""
import csv
import logging
import multiprocessing as mp
import time
from fractions import Fraction
from typing import IO, Iterable, Iterator, List, NamedTuple, Optional, Set, Tuple

from src import config
from src.core.embedding_core import (
    count_classes,
    embedding_from_bits,
    euler_characteristic,
    max_circular_faces,
    trace_faces,
)
from src.core.facial_diagram import build_diagram, crossing_pairs
from src.errors import CapExceededError
from src.models.embedding import Embedding, FaceSet
from src.models.graph import CubicGraph
from src.models.reports import CoverageReport, EnumerationSummary, MinimumCrossingReport

logger = logging.getLogger(__name__)

CONFIGURATION_CSV_COLUMNS = ["index", "faces", "bad", "good", "regular", "crossings"]


def _sweep_bits(g: CubicGraph, signatures_only: bool, cap: Optional[int]) -> int:
    bits = g.m if signatures_only else g.n + g.m
    limit = (config.SEARCH_CAP if signatures_only else config.ENUMERATION_CAP) if cap is None else cap
    if bits > limit:
        kind = "signature" if signatures_only else "full"
        raise CapExceededError(f"{g.name}: {kind} sweep needs 2^{bits} configurations, cap is 2^{limit}")
    return bits


def configuration(g: CubicGraph, index: int) -> Embedding:
    """Embedding for a configuration index."""
    return embedding_from_bits(g, index & ((1 << g.n) - 1), index >> g.n)


def enumerate_embeddings(g: CubicGraph, signatures_only: bool = False, cap: int = None,
                         start: int = 0, stop: int = None) -> Iterator[Tuple[int, Embedding, FaceSet]]:
    """Yield ``(index, embedding, faces)`` for every configuration in index order.

    With ``signatures_only`` the rotation stays at incidence order and only the
    m signature bits vary; indices then carry zero rotation bits. ``start`` and
    ``stop`` select a shard of the sweep (positions, not indices).
    """
    bits = _sweep_bits(g, signatures_only, cap)
    stop = (1 << bits) if stop is None else stop
    shift = g.n if signatures_only else 0
    for position in range(start, stop):
        index = position << shift
        emb = configuration(g, index)
        yield index, emb, trace_faces(g, emb)


def min_singular(g: CubicGraph, signatures_only: bool = False, cap: int = None) -> Tuple[int, Embedding]:
    """Exact minimum singular count over the sweep and its witness.

    The witness is the first minimum configuration with the most faces. A
    circular witness ends the sweep early once it reaches ``max_circular_faces``.
    """
    best: Optional[int] = None
    witness: Optional[Embedding] = None
    witness_faces = 0
    ceiling = max_circular_faces(g)
    for _, emb, fs in enumerate_embeddings(g, signatures_only, cap):
        singular = count_classes(fs).singular
        if best is None or singular < best or (singular == best and fs.face_count > witness_faces):
            best, witness, witness_faces = singular, emb, fs.face_count
            if best == 0 and witness_faces >= ceiling:
                break
    return best, witness


def exact_expected_classes(g: CubicGraph, cap: int = None) -> Tuple[Fraction, Fraction, Fraction]:
    """Exact (E_bad, E_good, E_regular) over the uniform distribution on all (rotation, signature)."""
    bad = good = regular = total = 0
    for _, _, fs in enumerate_embeddings(g, cap=cap):
        counts = count_classes(fs)
        bad += counts.bad
        good += counts.good
        regular += counts.regular
        total += 1
    return Fraction(bad, total), Fraction(good, total), Fraction(regular, total)


class _ShardTotals(NamedTuple):
    bad: int
    good: int
    regular: int
    total: int
    circular: int
    best: int
    best_faces: int
    best_index: int
    rows: List[list]


def _sweep_shard(g: CubicGraph, signatures_only: bool, cap: Optional[int],
                 start: int, stop: int, with_rows: bool) -> _ShardTotals:
    bad = good = regular = total = circular = 0
    best = best_faces = best_index = None
    rows: List[list] = []
    for index, _, fs in enumerate_embeddings(g, signatures_only, cap, start, stop):
        counts = count_classes(fs)
        bad += counts.bad
        good += counts.good
        regular += counts.regular
        total += 1
        if counts.singular == 0:
            circular += 1
        if best is None or (counts.singular, -fs.face_count) < (best, -best_faces):
            best, best_faces, best_index = counts.singular, fs.face_count, index
        if with_rows:
            crossings = len(crossing_pairs(build_diagram(g, fs)))
            rows.append([index, fs.face_count, counts.bad, counts.good, counts.regular, crossings])
    return _ShardTotals(bad, good, regular, total, circular, best, best_faces, best_index, rows)


def summarize(g: CubicGraph, signatures_only: bool = False, cap: int = None,
              rows: Optional[IO[str]] = None, workers: int = 1) -> EnumerationSummary:
    """One sweep: minimum, witness, circular count and exact class expectations.

    With ``workers > 1`` the sweep is split into contiguous shards; sums are
    merged exactly and the witness is the smallest index among minimum
    configurations with the most faces, so the summary does not depend on
    the shard count. When ``rows`` is given, one CSV row per configuration
    is written to it.
    """
    bits = _sweep_bits(g, signatures_only, cap)
    size = 1 << bits
    workers = max(1, min(workers, size))
    bounds = [size * i // workers for i in range(workers + 1)]
    jobs = [(g, signatures_only, cap, bounds[i], bounds[i + 1], rows is not None) for i in range(workers)]

    started = time.perf_counter()
    if workers == 1:
        shards = [_sweep_shard(*jobs[0])]
    else:
        with mp.Pool(processes=workers) as pool:
            shards = pool.starmap(_sweep_shard, jobs)

    best, _, best_index = min((s.best, -s.best_faces, s.best_index) for s in shards)
    bad = sum(s.bad for s in shards)
    good = sum(s.good for s in shards)
    regular = sum(s.regular for s in shards)
    total = sum(s.total for s in shards)
    circular = sum(s.circular for s in shards)

    if rows is not None:
        writer = csv.writer(rows, lineterminator="\n")
        writer.writerow(CONFIGURATION_CSV_COLUMNS)
        for shard in shards:
            writer.writerows(shard.rows)

    witness = configuration(g, best_index)
    witness_fs = trace_faces(g, witness)
    logger.info(
        f"📊 {g.name}: {total} configuration(s) swept in {time.perf_counter() - started:.1f}s "
        f"({workers} worker(s)), min singular {best}, circular {circular}"
    )
    return EnumerationSummary(
        graph=g.name,
        n=g.n,
        m=g.m,
        total_configurations=total,
        signatures_only=signatures_only,
        min_singular=best,
        witness=witness,
        witness_faces=witness_fs.face_count,
        witness_euler_characteristic=euler_characteristic(g, witness_fs),
        circular_count=circular,
        expected_bad=Fraction(bad, total),
        expected_good=Fraction(good, total),
        expected_regular=Fraction(regular, total),
        conjectured=Fraction(g.m, 3),
    )


def _lowest_singular(faces: Iterable[FaceSet]) -> int:
    lowest = None
    for fs in faces:
        singular = count_classes(fs).singular
        if lowest is None or singular < lowest:
            lowest = singular
            if lowest == 0:
                break
    return lowest


def verify_minimum_crossing_free(g: CubicGraph, configurations: Optional[Iterable[Embedding]] = None,
                                 cap: int = None) -> MinimumCrossingReport:
    """Every embedding attaining the minimum singular count has a crossing-free diagram.

    ``configurations`` restricts the sweep to the given embeddings; by default
    the full enumeration is used. A failure is reported, not raised.
    """
    if configurations is None:
        minimum = _lowest_singular(fs for _, _, fs in enumerate_embeddings(g, cap=cap))
        sweep = ((emb, fs) for _, emb, fs in enumerate_embeddings(g, cap=cap))
    else:
        configurations = list(configurations)
        faces = [trace_faces(g, emb) for emb in configurations]
        minimum = min(count_classes(fs).singular for fs in faces)
        sweep = zip(configurations, faces)

    checked = violations = 0
    first_violation: Optional[Embedding] = None
    first_pairs: Tuple[Tuple[int, int], ...] = ()
    for emb, fs in sweep:
        if count_classes(fs).singular != minimum:
            continue
        checked += 1
        pairs = crossing_pairs(build_diagram(g, fs))
        if pairs:
            violations += 1
            if first_violation is None:
                first_violation, first_pairs = emb, tuple(pairs)

    if violations:
        logger.warning(f"⚠️  {g.name}: {violations} minimum embedding(s) have crossing links")
    return MinimumCrossingReport(
        graph=g.name,
        min_singular=minimum,
        minimum_embeddings_checked=checked,
        violations=violations,
        first_violation=first_violation,
        crossing_pairs=first_pairs,
    )


def verify_switch_coverage(g: CubicGraph, cap: int = None) -> CoverageReport:
    """Signature-only sweeps under one rotation reach every face multiset of the full sweep."""
    signature_sets: Set[tuple] = set()
    signature_total = 0
    for _, _, fs in enumerate_embeddings(g, signatures_only=True, cap=cap):
        signature_sets.add(fs.face_multiset())
        signature_total += 1

    full_sets: Set[tuple] = set()
    full_total = 0
    for _, _, fs in enumerate_embeddings(g, cap=cap):
        full_sets.add(fs.face_multiset())
        full_total += 1

    return CoverageReport(
        graph=g.name,
        signature_configurations=signature_total,
        full_configurations=full_total,
        signature_face_sets=len(signature_sets),
        full_face_sets=len(full_sets),
        equal=signature_sets == full_sets,
    )
