"""Graph API Routes - catalog, parsing, matchings and 2-factors"""
import logging
from typing import List

from fastapi import APIRouter, HTTPException

from src.api.deps import GraphRequest, graph_from
from src.core import graph_core

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/api/graphs", tags=["graphs"])


@router.get("/catalog")
def list_catalog() -> List[str]:
    """Catalog names; prism_K takes any K >= 3."""
    return list(graph_core.NAMED_GRAPHS)


@router.get("/catalog/{name}")
def get_catalog_graph(name: str):
    try:
        return graph_core.named_graph(name).summary()
    except ValueError as e:
        raise HTTPException(status_code=404, detail=str(e))


@router.post("/parse")
def parse(request: GraphRequest):
    """Validate a posted edge list (or catalog name) and return its summary."""
    return graph_from(request).summary()


@router.post("/two-factor")
def two_factor(request: GraphRequest):
    """Perfect matching plus the cycles of its complementary 2-factor."""
    g = graph_from(request)
    try:
        matching = graph_core.perfect_matching(g)
        cycles = graph_core.two_factor_cycles(g, matching)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return {
        "graph": g.name,
        "matching": list(matching.edges),
        "cycles": [c.model_dump() for c in cycles],
    }
