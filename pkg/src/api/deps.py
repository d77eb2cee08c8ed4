"""Request models and input helpers shared by the API routers."""
import logging
from typing import Any, Dict, Optional

import numpy as np
from fastapi import HTTPException
from pydantic import BaseModel

from src.core import documents, embedding_core
from src.core.graph_core import named_graph, parse_graph
from src.errors import ClaimFalsifiedError
from src.models.diagram import violations_document
from src.models.embedding import Embedding
from src.models.graph import CubicGraph

logger = logging.getLogger(__name__)


class GraphRequest(BaseModel):
    graph: Optional[str] = None          # catalog name
    edge_list: Optional[str] = None      # edge-list document text


class EmbeddingRequest(GraphRequest):
    embedding: Optional[Dict[str, Any]] = None   # {"rotation": [...], "signature": [...]}
    seed: Optional[int] = None                   # random embedding when no document is given


def graph_from(req: GraphRequest) -> CubicGraph:
    """Resolve the request graph; input errors become 400."""
    try:
        if (req.graph is None) == (req.edge_list is None):
            raise ValueError("give exactly one of 'graph' or 'edge_list'")
        if req.graph is not None:
            return named_graph(req.graph)
        return parse_graph(req.edge_list, name="posted")
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))


def embedding_from(g: CubicGraph, req: EmbeddingRequest) -> Embedding:
    try:
        if req.embedding is not None:
            return documents.embedding_from_document(g, req.embedding)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    if req.seed is not None:
        return embedding_core.random_embedding(g, np.random.default_rng(req.seed))
    return embedding_core.planar_like(g)


def falsified(e: ClaimFalsifiedError) -> HTTPException:
    logger.error(f"❌ claim falsified: {e}")
    return HTTPException(
        status_code=422,
        detail={"message": str(e), "violations": violations_document(e.violations)},
    )
