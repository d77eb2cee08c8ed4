"""
twistcdc command line - one subcommand per operation.

Usage:
    python cli.py faces --graph k4 --embedding planar.json
    python cli.py twist --graph k4 --embedding planar.json --edge 0
    python cli.py enumerate --graph k33 --workers 4
    python cli.py experiment --graph k4 --samples 100000 --seed 7
    python cli.py experiment --sizes 8 10 12 --samples 1000 --seed 7 --format csv

Exit codes: 0 success, 1 input or operational error, 2 a checked claim failed.
Machine-readable output goes to standard output (or --out); logs go to standard error.
"""
import argparse
import io
import logging
import sys
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np
from pydantic import ValidationError

from src import config
from src.core import (
    documents,
    embedding_core,
    experiments,
    facial_diagram,
    oracle_enum,
    reduction_search,
    twist_ops,
)
from src.errors import ClaimFalsifiedError, TracingError
from src.models.diagram import violations_document
from src.models.embedding import Embedding
from src.models.graph import CubicGraph
from src.models.run import OutputFormat, ReduceMode, RunConfig, Subcommand
from src.storage.report_store import report_store

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_FALSIFIED = 2


# ============ ARGUMENTS ============

class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; 2 is reserved for falsified claims here."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_common(p: argparse.ArgumentParser, embedding: bool = True) -> None:
    p.add_argument("--graph", help="catalog graph: theta, k4, k33, petersen, prism_K")
    p.add_argument("--graph-file", help="edge-list file ('n m' header, one 'u v' per edge)")
    if embedding:
        p.add_argument("--embedding", help="embedding JSON file; default: random with --seed, else standard")
    p.add_argument("--seed", type=int, help="root seed for anything random")
    p.add_argument("--out", help="write the output here instead of standard output")
    p.add_argument("--format", choices=[f.value for f in OutputFormat], default="json")
    p.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING (default from TWISTCDC_LOG_LEVEL)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="twistcdc",
        description="Signed embeddings of cubic graphs: faces, twists, facial diagrams, searches and oracles",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    _add_common(sub.add_parser("faces", help="trace facial walks"))
    _add_common(sub.add_parser("classify", help="regular / good / bad singular edges"))

    p = sub.add_parser("twist", help="twist one edge")
    _add_common(p)
    p.add_argument("--edge", type=int, required=True)

    _add_common(sub.add_parser("diagram", help="facial diagram as JSON or DOT"))

    p = sub.add_parser("reduce", help="greedy '-' link reduction or the '+' cascade")
    _add_common(p)
    p.add_argument("--mode", choices=[m.value for m in ReduceMode], default="greedy")
    p.add_argument("--budget", type=int, help=f"cascade '+' twists (default {config.CASCADE_BUDGET})")

    p = sub.add_parser("search", help="exhaustive signature search for a circular embedding")
    _add_common(p)
    p.add_argument("--cap", type=int, help=f"max edges swept (default {config.SEARCH_CAP})")

    _add_common(sub.add_parser("matching-bound", help="2-factor construction"), embedding=False)

    p = sub.add_parser("enumerate", help="exhaustive sweep of all embeddings")
    _add_common(p, embedding=False)
    p.add_argument("--cap", type=int, help=f"max n+m bits (default {config.ENUMERATION_CAP})")
    p.add_argument("--signatures-only", action="store_true", help="fix the rotation, sweep signatures")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--save", action="store_true", help="persist the summary in the report store")

    p = sub.add_parser("experiment", help="Monte Carlo class counts")
    _add_common(p, embedding=False)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--sizes", type=int, nargs="+", default=[], help="sweep random cubic graphs of these sizes")
    p.add_argument("--save", action="store_true", help="persist the report in the report store")

    p = sub.add_parser("check-properties", help="structural properties and twist claims")
    _add_common(p)
    p.add_argument("--samples", type=int, help="check this many random embeddings (needs --seed)")

    return parser


def to_run_config(args: argparse.Namespace) -> RunConfig:
    values = {k: v for k, v in vars(args).items() if k != "log_level" and v is not None}
    return RunConfig(**values)


# ============ INPUTS ============

def _graph(cfg: RunConfig) -> CubicGraph:
    return documents.load_graph(cfg.graph, cfg.graph_file)


def _embedding(g: CubicGraph, cfg: RunConfig) -> Embedding:
    source = cfg.embedding_source
    if source == "file":
        return documents.load_embedding(g, cfg.embedding)
    if source == "random":
        return embedding_core.random_embedding(g, np.random.default_rng(cfg.seed))
    return embedding_core.planar_like(g)


# ============ SUBCOMMANDS ============
# Each returns (output text, exit code).

def run_faces(cfg: RunConfig) -> Tuple[str, int]:
    g = _graph(cfg)
    emb = _embedding(g, cfg)
    fs = embedding_core.trace_faces(g, emb)
    doc = {
        "graph": g.name,
        "faces": fs.export(g),
        "alternating": [w.alternating(g) for w in fs.walks],
        **embedding_core.surface_summary(g, emb, fs),
    }
    return documents.dump_json(doc), EXIT_OK


def run_classify(cfg: RunConfig) -> Tuple[str, int]:
    g = _graph(cfg)
    fs = embedding_core.trace_faces(g, _embedding(g, cfg))
    classes = embedding_core.classify_edges(fs)
    doc = {
        "graph": g.name,
        "classes": {str(e): c.value for e, c in classes.items()},
        "counts": embedding_core.count_classes(fs).model_dump(),
        "circular": embedding_core.is_circular(fs),
    }
    return documents.dump_json(doc), EXIT_OK


def run_twist(cfg: RunConfig) -> Tuple[str, int]:
    g = _graph(cfg)
    twisted, record = twist_ops.twist_with_record(g, _embedding(g, cfg), cfg.edge)
    doc = {"embedding": twisted.to_document(), "record": record.model_dump(mode="json")}
    return documents.dump_json(doc), EXIT_OK


def run_diagram(cfg: RunConfig) -> Tuple[str, int]:
    g = _graph(cfg)
    fd = facial_diagram.diagram_of(g, _embedding(g, cfg))
    if cfg.format is OutputFormat.DOT:
        return facial_diagram.to_dot(fd), EXIT_OK
    doc = fd.to_document()
    doc["crossing_pairs"] = [list(p) for p in facial_diagram.crossing_pairs(fd)]
    doc["saturated_vertices"] = facial_diagram.saturated_vertices(fd, g)
    return documents.dump_json(doc), EXIT_OK


def run_reduce(cfg: RunConfig) -> Tuple[str, int]:
    g = _graph(cfg)
    emb = _embedding(g, cfg)
    if cfg.mode is ReduceMode.CASCADE:
        _, sequence = reduction_search.plus_cascade(g, emb, cfg.budget, np.random.default_rng(cfg.seed))
    else:
        _, sequence = reduction_search.greedy_reduce(g, emb)
    return documents.dump_json(sequence.model_dump(mode="json")), EXIT_OK


def run_search(cfg: RunConfig) -> Tuple[str, int]:
    g = _graph(cfg)
    rotation = _embedding(g, cfg).rotation
    outcome = reduction_search.search_circular_exhaustive(g, rotation, cfg.cap)
    return documents.dump_json(outcome.model_dump(mode="json")), EXIT_OK


def run_matching_bound(cfg: RunConfig) -> Tuple[str, int]:
    g = _graph(cfg)
    emb, matching = reduction_search.matching_bound_embedding(g)
    fs = embedding_core.trace_faces(g, emb)
    violations = reduction_search.matching_bound_violations(g, emb, matching)
    doc = {
        "graph": g.name,
        "embedding": emb.to_document(),
        "matching": list(matching.edges),
        "counts": embedding_core.count_classes(fs).model_dump(),
        "face_count": fs.face_count,
        "violations": violations_document(violations),
    }
    return documents.dump_json(doc), EXIT_FALSIFIED if violations else EXIT_OK


def run_enumerate(cfg: RunConfig) -> Tuple[str, int]:
    g = _graph(cfg)
    rows = io.StringIO() if cfg.format is OutputFormat.CSV else None
    summary = oracle_enum.summarize(g, cfg.signatures_only, cfg.cap, rows=rows, workers=cfg.workers)
    if cfg.save:
        report_store.save("enumeration", g.name, summary.model_dump(mode="json"),
                          {"signatures_only": cfg.signatures_only})
    if rows is not None:
        return rows.getvalue(), EXIT_OK
    return documents.dump_json(summary.model_dump(mode="json")), EXIT_OK


def run_experiment(cfg: RunConfig) -> Tuple[str, int]:
    if cfg.sizes:
        rows = experiments.sweep_families(cfg.sizes, cfg.samples, cfg.seed)
        out = io.StringIO()
        if cfg.format is OutputFormat.CSV:
            experiments.write_sweep_csv(rows, out)
            return out.getvalue(), EXIT_OK
        doc = [dict(zip(experiments.SWEEP_CSV_COLUMNS, row)) for row in rows]
        return documents.dump_json(doc), EXIT_OK

    g = _graph(cfg)
    report = experiments.monte_carlo_classes(g, cfg.samples, cfg.seed, cfg.workers)
    if cfg.save:
        report_store.save("experiment", g.name, report.model_dump(mode="json"),
                          {"samples": cfg.samples, "seed": cfg.seed, "workers": cfg.workers})
    if cfg.format is OutputFormat.CSV:
        out = io.StringIO()
        experiments.write_experiment_csv([report], out)
        return out.getvalue(), EXIT_OK
    doc = report.model_dump(mode="json")
    deviation = experiments.exact_deviation(report)
    doc["exact_deviation"] = None if deviation is None else [str(d) for d in deviation]
    doc["measured_deviation"] = list(report.deviations)
    return documents.dump_json(doc), EXIT_OK


def run_check_properties(cfg: RunConfig) -> Tuple[str, int]:
    g = _graph(cfg)
    if cfg.samples:
        rng = np.random.default_rng(cfg.seed)
        embeddings = [embedding_core.random_embedding(g, rng) for _ in range(cfg.samples)]
    else:
        embeddings = [_embedding(g, cfg)]

    found = []
    for i, emb in enumerate(embeddings):
        for v in facial_diagram.check_all(g, emb):
            found.append({"sample": i, **v.model_dump(mode="json", exclude_none=True)})
    if found:
        logger.error(f"❌ {g.name}: {len(found)} claim violation(s) - falsified on this input")
    doc = {"graph": g.name, "embeddings_checked": len(embeddings), "violations": found}
    return documents.dump_json(doc), EXIT_FALSIFIED if found else EXIT_OK


HANDLERS = {
    Subcommand.FACES: run_faces,
    Subcommand.CLASSIFY: run_classify,
    Subcommand.TWIST: run_twist,
    Subcommand.DIAGRAM: run_diagram,
    Subcommand.REDUCE: run_reduce,
    Subcommand.SEARCH: run_search,
    Subcommand.MATCHING_BOUND: run_matching_bound,
    Subcommand.ENUMERATE: run_enumerate,
    Subcommand.EXPERIMENT: run_experiment,
    Subcommand.CHECK_PROPERTIES: run_check_properties,
}


# ============ ENTRY POINT ============

def _validation_message(e: ValidationError) -> str:
    first = e.errors()[0]
    return first["msg"].removeprefix("Value error, ")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config.configure_logging(args.log_level)

    try:
        cfg = to_run_config(args)
        text, code = HANDLERS[cfg.subcommand](cfg)
    except ValidationError as e:
        logger.error(f"❌ {_validation_message(e)}")
        return EXIT_INPUT
    except ClaimFalsifiedError as e:
        logger.error(f"❌ claim falsified: {e}")
        sys.stdout.write(documents.dump_json({"violations": violations_document(e.violations)}))
        return EXIT_FALSIFIED
    except (ValueError, OSError, TracingError) as e:
        logger.error(f"❌ {e}")
        return EXIT_INPUT

    if cfg.out:
        Path(cfg.out).write_text(text)
        logger.info(f"📝 Wrote {cfg.out}")
    else:
        sys.stdout.write(text)
    return code
