"""Facial diagram models."""
from enum import Enum, IntEnum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict


class LinkKind(str, Enum):
    FACIAL = "facial"
    SINGULAR = "singular"
    REGULAR = "regular"


class DiagramProperty(IntEnum):
    """Structural claims checked on a single facial diagram."""
    REPEATED_CORNER = 1          # a, e1, b, e2, c never occurs twice in a walk
    REVERSED_CORNER = 2          # ... nor together with c, e2, b, e1, a
    GOOD_PAIR_CONTINUATION = 3   # consecutive "−" links force the two listed continuations
    BAD_PAIR_CONTINUATION = 4    # consecutive "+" links force the two listed continuations
    SATURATED_PARITY = 5         # a saturated vertex carries 1 or 3 "+" links


class FDNode(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: int
    walk: int
    position: int
    edge: int
    dart: int


class FDLink(BaseModel):
    model_config = ConfigDict(frozen=True)

    source: int
    target: int
    kind: LinkKind
    vertex: Optional[int] = None    # facial links: the shared vertex of G
    edge: Optional[int] = None      # singular/regular links: the edge of G
    sign: Optional[str] = None      # singular links: "+" (bad) or "−" (good)


class FacialDiagram(BaseModel):
    model_config = ConfigDict(frozen=True)

    nodes: Tuple[FDNode, ...]
    links: Tuple[FDLink, ...]
    walk_nodes: Tuple[Tuple[int, ...], ...]     # node ids of each walk, in walk order

    def signs(self) -> Dict[int, str]:
        """Edge id -> sign for every singular link."""
        return {l.edge: l.sign for l in self.links if l.kind is LinkKind.SINGULAR}

    def to_document(self) -> dict:
        return {
            "nodes": [n.model_dump() for n in self.nodes],
            "links": [l.model_dump(mode="json", exclude_none=True) for l in self.links],
            "walks": [list(w) for w in self.walk_nodes],
        }


class PropertyViolation(BaseModel):
    """A failed claim with enough positional witness to debug it from a log."""
    model_config = ConfigDict(frozen=True)

    claim: str
    walk: Optional[int] = None
    positions: Tuple[int, ...] = ()
    edges: Tuple[int, ...] = ()
    vertex: Optional[int] = None
    detail: str = ""


def violations_document(violations: List[PropertyViolation]) -> List[dict]:
    return [v.model_dump(mode="json", exclude_none=True) for v in violations]
