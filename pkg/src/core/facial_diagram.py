"""
Facial Diagram - the cubic graph of edge traversals, its signed singular links,
crossings, structural property checks and twist claims.

Nodes are numbered walk by walk, position by position. Every node carries two
facial links (to its walk neighbours) and one link to the other traversal of
its edge: singular when both traversals share a walk, regular otherwise.
"""
import logging
from collections import Counter
from typing import Dict, List, Optional, Tuple

from src.core.embedding_core import classify_edges, trace_faces
from src.core.twist_ops import local_rotation_flip, triple_twist, twist
from src.errors import GraphInputError
from src.models.diagram import (
    DiagramProperty,
    FacialDiagram,
    FDLink,
    FDNode,
    LinkKind,
    PropertyViolation,
)
from src.models.embedding import EdgeClass, Embedding, FaceSet
from src.models.graph import CubicGraph

logger = logging.getLogger(__name__)

PLUS, MINUS = "+", "\u2212"    # U+2212
SIGN_OF = {EdgeClass.BAD_SINGULAR: PLUS, EdgeClass.GOOD_SINGULAR: MINUS}

# Twist claims checked by ``check_twist_claims``
MERGE_ON_REGULAR_TWIST = "merge_on_regular_twist"
SINGULAR_GROWTH_ON_MERGE = "singular_growth_on_merge"
MERGED_EDGE_IS_GOOD = "merged_edge_is_good"
SIGNS_STABLE_ON_MERGE = "signs_stable_on_merge"
GOOD_TWIST_UNCROSSES = "good_twist_uncrosses"
BAD_TWIST_FLIPS_PARTNER = "bad_twist_flips_partner"
SWITCH_PRESERVES_FACES = "switch_preserves_faces"


# ============ CONSTRUCTION ============

def build_diagram(g: CubicGraph, fs: FaceSet) -> FacialDiagram:
    classes = classify_edges(fs)
    nodes: List[FDNode] = []
    walk_nodes: List[Tuple[int, ...]] = []
    node_of: Dict[Tuple[int, int], int] = {}

    for w, walk in enumerate(fs.walks):
        ids = []
        for p, state in enumerate(walk.states):
            node = FDNode(id=len(nodes), walk=w, position=p, edge=state.dart >> 1, dart=state.dart)
            node_of[(w, p)] = node.id
            nodes.append(node)
            ids.append(node.id)
        walk_nodes.append(tuple(ids))

    links: List[FDLink] = []
    for w, walk in enumerate(fs.walks):
        ids = walk_nodes[w]
        for p, state in enumerate(walk.states):
            q = (p + 1) % len(ids)
            links.append(FDLink(
                source=ids[p], target=ids[q], kind=LinkKind.FACIAL, vertex=g.head(state.dart)
            ))

    for e, (first, second) in enumerate(fs.edge_index):
        source = node_of[(first.walk, first.position)]
        target = node_of[(second.walk, second.position)]
        cls = classes[e]
        if cls.is_singular:
            links.append(FDLink(source=source, target=target, kind=LinkKind.SINGULAR, edge=e, sign=SIGN_OF[cls]))
        else:
            links.append(FDLink(source=source, target=target, kind=LinkKind.REGULAR, edge=e))

    return FacialDiagram(nodes=tuple(nodes), links=tuple(links), walk_nodes=tuple(walk_nodes))


def diagram_of(g: CubicGraph, emb: Embedding) -> FacialDiagram:
    return build_diagram(g, trace_faces(g, emb))


def node_degrees(fd: FacialDiagram) -> List[int]:
    degree = [0] * len(fd.nodes)
    for link in fd.links:
        degree[link.source] += 1
        degree[link.target] += 1
    return degree


# ============ CROSSINGS ============

def _singular_positions(fd: FacialDiagram) -> Dict[int, Tuple[int, int, int]]:
    """Edge -> (walk, first position, second position) for every singular link."""
    out = {}
    for link in fd.links:
        if link.kind is LinkKind.SINGULAR:
            a, b = fd.nodes[link.source], fd.nodes[link.target]
            out[link.edge] = (a.walk, min(a.position, b.position), max(a.position, b.position))
    return out


def crossing_pairs(fd: FacialDiagram) -> List[Tuple[int, int]]:
    """Singular links of one walk whose occurrences interleave cyclically."""
    spans = _singular_positions(fd)
    edges = sorted(spans)
    pairs = []
    for i, e1 in enumerate(edges):
        w1, p1, q1 = spans[e1]
        for e2 in edges[i + 1:]:
            w2, p2, q2 = spans[e2]
            if w1 != w2:
                continue
            inside = (p1 < p2 < q1) + (p1 < q2 < q1)
            if inside == 1:
                pairs.append((e1, e2))
    return pairs


def crossing_partners(fd: FacialDiagram, e: int) -> List[int]:
    partners = []
    for a, b in crossing_pairs(fd):
        if a == e:
            partners.append(b)
        elif b == e:
            partners.append(a)
    return sorted(partners)


# ============ STRUCTURAL PROPERTIES ============

def _walk_pairs(fd: FacialDiagram) -> List[List[Tuple[int, int]]]:
    """Consecutive dart pairs ``(d_p, d_{p+1})`` of every walk, cyclically."""
    pairs = []
    for ids in fd.walk_nodes:
        darts = [fd.nodes[i].dart for i in ids]
        t = len(darts)
        pairs.append([(darts[p], darts[(p + 1) % t]) for p in range(t)])
    return pairs


def _repeated_corner(fd: FacialDiagram) -> List[PropertyViolation]:
    violations = []
    for w, pairs in enumerate(_walk_pairs(fd)):
        first_seen: Dict[Tuple[int, int], int] = {}
        for p, pair in enumerate(pairs):
            if pair in first_seen:
                violations.append(PropertyViolation(
                    claim=DiagramProperty.REPEATED_CORNER.name.lower(),
                    walk=w,
                    positions=(first_seen[pair], p),
                    edges=(pair[0] >> 1, pair[1] >> 1),
                    detail=f"darts {pair[0]}->{pair[1]} occur twice",
                ))
            else:
                first_seen[pair] = p
    return violations


def _reversed_corner(fd: FacialDiagram) -> List[PropertyViolation]:
    violations = []
    for w, pairs in enumerate(_walk_pairs(fd)):
        where = {pair: p for p, pair in enumerate(pairs)}
        for p, (x, y) in enumerate(pairs):
            reverse = (y ^ 1, x ^ 1)
            q = where.get(reverse)
            if q is not None and p < q:
                violations.append(PropertyViolation(
                    claim=DiagramProperty.REVERSED_CORNER.name.lower(),
                    walk=w,
                    positions=(p, q),
                    edges=(x >> 1, y >> 1),
                    detail=f"darts {x}->{y} and their reversal {reverse[0]}->{reverse[1]} share a walk",
                ))
    return violations


def _pair_continuations(fd: FacialDiagram, g: CubicGraph, sign: str) -> List[PropertyViolation]:
    """Consecutive singular links of one sign at a vertex must be followed by the third edge.

    For darts x (into b) and y (out of b) with z the dart of the third edge leaving b:
    "−" links need (x, z) and (z^1, y) in the walk, "+" links need (y^1, z) and (z^1, x^1).
    Either orientation of the walk is accepted.
    """
    claim = (DiagramProperty.GOOD_PAIR_CONTINUATION if sign == MINUS
             else DiagramProperty.BAD_PAIR_CONTINUATION).name.lower()
    signs = fd.signs()
    violations = []
    for w, pairs in enumerate(_walk_pairs(fd)):
        present = set(pairs)
        for p, (x, y) in enumerate(pairs):
            e1, e2 = x >> 1, y >> 1
            if signs.get(e1) != sign or signs.get(e2) != sign or e1 == e2:
                continue
            b = g.head(x)
            z = g.dart_at(b, g.third_edge(b, e1, e2))
            if sign == MINUS:
                needed = [(x, z), (z ^ 1, y)]
            else:
                needed = [(y ^ 1, z), (z ^ 1, x ^ 1)]
            mirrored = [(after ^ 1, before ^ 1) for before, after in needed]
            if all(n in present for n in needed) or all(n in present for n in mirrored):
                continue
            violations.append(PropertyViolation(
                claim=claim,
                walk=w,
                positions=(p,),
                edges=(e1, e2, z >> 1),
                vertex=b,
                detail=f"missing continuation through edge {z >> 1} at vertex {b}",
            ))
    return violations


def saturated_vertices(fd: FacialDiagram, g: CubicGraph) -> List[int]:
    signs = fd.signs()
    return [v for v in range(g.n) if all(e in signs for e in g.incidence[v])]


def _saturated_parity(fd: FacialDiagram, g: CubicGraph) -> List[PropertyViolation]:
    signs = fd.signs()
    violations = []
    for v in saturated_vertices(fd, g):
        plus = sum(1 for e in g.incidence[v] if signs[e] == PLUS)
        if plus not in (1, 3):
            violations.append(PropertyViolation(
                claim=DiagramProperty.SATURATED_PARITY.name.lower(),
                vertex=v,
                edges=tuple(g.incidence[v]),
                detail=f"saturated vertex {v} carries {plus} '+' links",
            ))
    return violations


def check_structural_property(fd: FacialDiagram, g: CubicGraph, k: int) -> List[PropertyViolation]:
    """Run one structural check (1..5); empty list when it holds."""
    try:
        prop = DiagramProperty(k)
    except ValueError:
        raise GraphInputError(f"structural property must be 1..5, got {k}")

    if prop is DiagramProperty.REPEATED_CORNER:
        return _repeated_corner(fd)
    if prop is DiagramProperty.REVERSED_CORNER:
        return _reversed_corner(fd)
    if prop is DiagramProperty.GOOD_PAIR_CONTINUATION:
        return _pair_continuations(fd, g, MINUS)
    if prop is DiagramProperty.BAD_PAIR_CONTINUATION:
        return _pair_continuations(fd, g, PLUS)
    return _saturated_parity(fd, g)


# ============ TWIST CLAIMS ============

def _edge_multiset(fs: FaceSet, walk: int) -> Counter:
    return Counter(fs.walks[walk].edges)


def check_regular_twist(g: CubicGraph, emb: Embedding, e: int,
                        fs: FaceSet = None) -> List[PropertyViolation]:
    """Twisting a regular edge merges its two faces into one walk."""
    fs = fs or trace_faces(g, emb)
    first, second = fs.edge_index[e]
    if first.walk == second.walk:
        raise GraphInputError(f"edge {e} is singular, not regular")

    before = classify_edges(fs)
    after_fs = trace_faces(g, twist(emb, e))
    after = classify_edges(after_fs)
    violations: List[PropertyViolation] = []

    def fail(claim: str, detail: str) -> None:
        violations.append(PropertyViolation(claim=claim, edges=(e,), detail=detail))

    f1, f2 = first.walk, second.walk
    if after_fs.face_count != fs.face_count - 1:
        fail(MERGE_ON_REGULAR_TWIST, f"faces {fs.face_count} -> {after_fs.face_count}")
    else:
        merged = after_fs.edge_index[e][0].walk
        expected = _edge_multiset(fs, f1) + _edge_multiset(fs, f2)
        if _edge_multiset(after_fs, merged) != expected:
            fail(MERGE_ON_REGULAR_TWIST, f"merged walk {merged} does not hold both former faces")
        others_before = sorted(w.key() for i, w in enumerate(fs.walks) if i not in (f1, f2))
        others_after = sorted(w.key() for i, w in enumerate(after_fs.walks) if i != merged)
        if others_before != others_after:
            fail(MERGE_ON_REGULAR_TWIST, "faces away from the twisted edge changed")

    shared = set(fs.walks[f1].edges) & set(fs.walks[f2].edges)
    grown = sum(c.is_singular for c in after.values()) - sum(c.is_singular for c in before.values())
    if grown != len(shared):
        fail(SINGULAR_GROWTH_ON_MERGE, f"singular count grew by {grown}, shared edges {sorted(shared)}")

    if after[e] is not EdgeClass.GOOD_SINGULAR:
        fail(MERGED_EDGE_IS_GOOD, f"twisted edge became {after[e].value}")

    changed = [f for f, c in before.items() if c.is_singular and after[f] is not c]
    if changed:
        fail(SIGNS_STABLE_ON_MERGE, f"singular edges {changed} changed sign")
    return violations


def check_singular_twist(g: CubicGraph, emb: Embedding, e: int,
                         fs: FaceSet = None) -> List[PropertyViolation]:
    """Twisting a '-' link uncrosses it; twisting a '+' link flips its crossing partners."""
    fs = fs or trace_faces(g, emb)
    fd = build_diagram(g, fs)
    before = classify_edges(fs)
    if not before[e].is_singular:
        raise GraphInputError(f"edge {e} is regular, not singular")

    partners = crossing_partners(fd, e)
    after = classify_edges(trace_faces(g, twist(emb, e)))
    violations: List[PropertyViolation] = []

    if before[e] is EdgeClass.GOOD_SINGULAR:
        stuck = [f for f in [e] + partners if after[f] is not EdgeClass.REGULAR]
        if stuck:
            violations.append(PropertyViolation(
                claim=GOOD_TWIST_UNCROSSES, edges=(e, *partners),
                detail=f"edges {stuck} still singular after twisting '-' link {e}",
            ))
    elif partners:
        if after[e] is not EdgeClass.BAD_SINGULAR:
            violations.append(PropertyViolation(
                claim=BAD_TWIST_FLIPS_PARTNER, edges=(e,),
                detail=f"twisted '+' link {e} became {after[e].value}",
            ))
        flipped = {EdgeClass.GOOD_SINGULAR: EdgeClass.BAD_SINGULAR, EdgeClass.BAD_SINGULAR: EdgeClass.GOOD_SINGULAR}
        unflipped = [f for f in partners if after[f] is not flipped[before[f]]]
        if unflipped:
            violations.append(PropertyViolation(
                claim=BAD_TWIST_FLIPS_PARTNER, edges=(e, *partners),
                detail=f"crossing partners {unflipped} kept their sign",
            ))
    return violations


def check_switch(g: CubicGraph, emb: Embedding, v: int) -> List[PropertyViolation]:
    """A local rotation flip at v traces the same faces as twisting the edges at v."""
    flipped = trace_faces(g, local_rotation_flip(emb, v)).face_multiset()
    twisted = trace_faces(g, triple_twist(g, emb, v)).face_multiset()
    if flipped == twisted:
        return []
    return [PropertyViolation(
        claim=SWITCH_PRESERVES_FACES, vertex=v, edges=tuple(g.incidence[v]),
        detail="rotation flip and triple twist trace different faces",
    )]


def check_twist_claims(g: CubicGraph, emb: Embedding, edges: Optional[List[int]] = None,
                       vertices: Optional[List[int]] = None) -> List[PropertyViolation]:
    """Twist every listed edge (default: all) and flip every listed vertex (default: all)."""
    fs = trace_faces(g, emb)
    edges = range(g.m) if edges is None else edges
    vertices = range(g.n) if vertices is None else vertices
    violations: List[PropertyViolation] = []
    for e in edges:
        first, second = fs.edge_index[e]
        if first.walk != second.walk:
            violations.extend(check_regular_twist(g, emb, e, fs))
        else:
            violations.extend(check_singular_twist(g, emb, e, fs))
    for v in vertices:
        violations.extend(check_switch(g, emb, v))
    return violations


def check_all(g: CubicGraph, emb: Embedding) -> List[PropertyViolation]:
    """Every structural property plus every twist claim on one embedding."""
    fd = diagram_of(g, emb)
    violations: List[PropertyViolation] = []
    for prop in DiagramProperty:
        violations.extend(check_structural_property(fd, g, prop.value))
    violations.extend(check_twist_claims(g, emb))
    if violations:
        logger.warning(f"⚠️  {len(violations)} claim violation(s) on {g.name}")
    return violations


# ============ RENDERING ============

def to_dot(fd: FacialDiagram) -> str:
    """DOT text: facial links solid (vertex label), singular dashed (+/-), regular dotted."""
    lines = ["graph facial_diagram {", "  node [shape=circle];"]
    for node in fd.nodes:
        lines.append(f'  n{node.id} [label="e{node.edge}"];')
    for link in fd.links:
        if link.kind is LinkKind.FACIAL:
            attrs = f'style=solid, label="v{link.vertex}"'
        elif link.kind is LinkKind.SINGULAR:
            attrs = f'style=dashed, label="{link.sign}"'
        else:
            attrs = "style=dotted"
        lines.append(f"  n{link.source} -- n{link.target} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
