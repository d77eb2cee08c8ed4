"""
Graph Core - cubic multigraphs: parsing, validation, catalog, random generation,
perfect matchings and 2-factors.

Edge-list text format (the only graph input format)::

    # comment lines start with '#'
    n m
    u v        <- m lines, 0-indexed vertex ids; edge id = line order

Catalog numbering (``named_graph``):

- ``theta``: 2 vertices, three parallel edges 0-1.
- ``k4``: edges 01, 02, 03, 12, 13, 23.
- ``k33``: parts {0,1,2} and {3,4,5}; edges (i, j) for i in 0..2, j in 3..5, row-major.
- ``petersen``: outer cycle 0-1-2-3-4, spokes i-(i+5), inner pentagram 5-7-9-6-8-5;
  edges 01, 12, 23, 34, 04, 05, 16, 27, 38, 49, 57, 79, 69, 68, 58.
- ``prism_k``: outer cycle i-(i+1 mod k), inner cycle k+i-k+(i+1 mod k), spokes i-(k+i).
"""
import logging
import re
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from src import config
from src.errors import GraphInputError
from src.models.graph import CubicGraph, FactorCycle, Matching

logger = logging.getLogger(__name__)

NAMED_GRAPHS = ("theta", "k4", "k33", "petersen", "prism_k")
_PRISM = re.compile(r"^prism_(\d+)$")


def to_multigraph(n: int, edges: Sequence[Tuple[int, int]]) -> nx.MultiGraph:
    """networkx view of an edge list; edge keys are the edge ids."""
    mg = nx.MultiGraph()
    mg.add_nodes_from(range(n))
    for e, (u, v) in enumerate(edges):
        mg.add_edge(u, v, key=e)
    return mg


def build_graph(n: int, edges: Sequence[Tuple[int, int]], name: str = "graph",
                rejections: int = 0) -> CubicGraph:
    """Validate an edge list and build the immutable CubicGraph."""
    if n <= 0 or n % 2:
        raise GraphInputError(f"vertex count must be positive and even, got n={n}")
    edges = [(int(u), int(v)) for u, v in edges]
    if 2 * len(edges) != 3 * n:
        raise GraphInputError(f"a cubic graph on {n} vertices has {3 * n // 2} edges, got {len(edges)}")

    incidence: List[List[int]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphInputError(f"edge {e} ({u} {v}): vertex {x} out of range 0..{n - 1}")
        if u == v:
            raise GraphInputError(f"edge {e} is a loop at vertex {u}")
        incidence[u].append(e)
        incidence[v].append(e)

    for v, inc in enumerate(incidence):
        if len(inc) != 3:
            raise GraphInputError(f"vertex {v} has degree {len(inc)}, expected 3 (non-cubic)")

    mg = to_multigraph(n, edges)
    connected = nx.is_connected(mg)
    bridgeless = not nx.has_bridges(mg)

    return CubicGraph(
        name=name,
        n=n,
        m=len(edges),
        edges=tuple(edges),
        incidence=tuple(tuple(inc) for inc in incidence),
        bridgeless=bridgeless,
        connected=connected,
        rejections=rejections,
    )


def parse_graph(text: str, name: str = "graph") -> CubicGraph:
    """Parse the edge-list document; every error names its line."""
    header: Optional[Tuple[int, int]] = None
    edges: List[Tuple[int, int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphInputError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphInputError(f"line {lineno}: expected two integers, got {line!r}")

        if header is None:
            header = (a, b)
            continue
        if len(edges) == header[1]:
            raise GraphInputError(
                f"line {lineno}: unexpected line {line!r} after {header[1]} edges (duplicate header?)"
            )
        if not edges and (a, b) == header:
            raise GraphInputError(f"line {lineno}: duplicate header {line!r}")
        for x in (a, b):
            if not 0 <= x < header[0]:
                raise GraphInputError(f"line {lineno}: vertex {x} out of range 0..{header[0] - 1}")
        edges.append((a, b))

    if header is None:
        raise GraphInputError("missing header line 'n m'")
    n, m = header
    if n % 2:
        raise GraphInputError(f"header: odd vertex count n={n}")
    if len(edges) != m:
        raise GraphInputError(f"header declares {m} edges, found {len(edges)}")
    return build_graph(n, edges, name=name)


def format_graph(g: CubicGraph) -> str:
    """Inverse of ``parse_graph``."""
    lines = [f"# {g.name}", f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def is_bridgeless(g: CubicGraph) -> bool:
    """Cached at construction (networkx bridge detection on the multigraph)."""
    return g.bridgeless


def girth(g: CubicGraph) -> int:
    """Length of a shortest cycle; 2 when ``g`` has parallel edges."""
    if len({tuple(sorted(e)) for e in g.edges}) < g.m:
        return 2
    return nx.girth(nx.Graph(to_multigraph(g.n, g.edges)))


def _prism_edges(k: int) -> List[Tuple[int, int]]:
    outer = [(i, (i + 1) % k) for i in range(k)]
    inner = [(k + i, k + (i + 1) % k) for i in range(k)]
    spokes = [(i, k + i) for i in range(k)]
    return [(min(u, v), max(u, v)) for u, v in outer + inner + spokes]


def named_graph(name: str) -> CubicGraph:
    """Catalog graph by name (see module docstring for numbering)."""
    key = name.strip().lower()
    if key == "theta":
        return build_graph(2, [(0, 1), (0, 1), (0, 1)], name="theta")
    if key == "k4":
        return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], name="k4")
    if key == "k33":
        return build_graph(6, [(i, j) for i in range(3) for j in range(3, 6)], name="k33")
    if key == "petersen":
        outer = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5, 7), (7, 9), (6, 9), (6, 8), (5, 8)]
        return build_graph(10, outer + spokes + inner, name="petersen")
    match = _PRISM.match(key)
    if match:
        k = int(match.group(1))
        if k < 3:
            raise GraphInputError(f"prism_k needs k >= 3, got {name!r}")
        return build_graph(2 * k, _prism_edges(k), name=f"prism_{k}")
    raise GraphInputError(f"unknown graph name {name!r}; known: {', '.join(NAMED_GRAPHS)}")


def random_cubic(n: int, rng: np.random.Generator, max_retries: int = None) -> CubicGraph:
    """Configuration-model cubic multigraph; loops rejected, retried until bridgeless and connected.

    Parallel edges are kept. Edges are sorted so equal pairings give equal numbering.
    """
    if n < 4 or n % 2:
        raise GraphInputError(f"random_cubic needs an even n >= 4, got {n}")
    max_retries = config.RANDOM_CUBIC_RETRIES if max_retries is None else max_retries

    rejections = 0
    for _ in range(max_retries):
        points = rng.permutation(3 * n) // 3
        pairs = points.reshape(-1, 2)
        if np.any(pairs[:, 0] == pairs[:, 1]):
            rejections += 1
            continue
        edges = sorted((int(min(u, v)), int(max(u, v))) for u, v in pairs)
        g = build_graph(n, edges, name=f"random_{n}", rejections=rejections)
        if g.bridgeless and g.connected:
            logger.debug(f"random_cubic n={n}: accepted after {rejections} rejections")
            return g
        rejections += 1

    raise GraphInputError(f"random_cubic n={n}: no bridgeless pairing after {max_retries} attempts")


def perfect_matching(g: CubicGraph) -> Matching:
    """Maximum-cardinality matching via networkx; parallel edges map to their lowest id.

    Deterministic for a fixed graph: the simple graph is built in ascending edge-id order.
    """
    simple = nx.Graph()
    simple.add_nodes_from(range(g.n))
    lowest: Dict[Tuple[int, int], int] = {}
    for e, (u, v) in enumerate(g.edges):
        pair = (min(u, v), max(u, v))
        if pair not in lowest:
            lowest[pair] = e
            simple.add_edge(*pair)

    matched = nx.max_weight_matching(simple, maxcardinality=True)
    chosen = sorted(lowest[(min(u, v), max(u, v))] for u, v in matched)
    if 2 * len(chosen) != g.n:
        raise GraphInputError(
            f"{g.name}: no perfect matching (found {len(chosen)} of {g.n // 2} edges); "
            f"graph has a bridge or is invalid"
        )
    return Matching(edges=tuple(chosen))


def two_factor_cycles(g: CubicGraph, matching: Matching) -> List[FactorCycle]:
    """Cycles of the complementary 2-factor.

    Each cycle starts at its smallest vertex and leaves along its lower-id factor edge.
    """
    matched = set(matching.edges)
    covered = [0] * g.n
    for e in matched:
        u, v = g.edges[e]
        covered[u] += 1
        covered[v] += 1
    if any(c != 1 for c in covered):
        bad = next(v for v, c in enumerate(covered) if c != 1)
        raise GraphInputError(f"matching is not perfect: vertex {bad} is covered {covered[bad]} times")

    factor_at = [[e for e in g.incidence[v] if e not in matched] for v in range(g.n)]
    seen = [False] * g.n
    cycles: List[FactorCycle] = []
    for start in range(g.n):
        if seen[start]:
            continue
        vertices, edges = [], []
        v, e = start, min(factor_at[start])
        while True:
            seen[v] = True
            vertices.append(v)
            edges.append(e)
            u, w = g.edges[e]
            v = w if u == v else u
            if v == start:
                break
            a, b = factor_at[v]
            e = b if a == e else a
        cycles.append(FactorCycle(vertices=tuple(vertices), edges=tuple(edges)))
    return cycles
