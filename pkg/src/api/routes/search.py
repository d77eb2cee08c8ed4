"""Search API Routes - greedy reduction, '+' cascade, exhaustive search, matching bound"""
import logging
from typing import Optional

import numpy as np
from fastapi import APIRouter, HTTPException

from src.api.deps import EmbeddingRequest, GraphRequest, embedding_from, falsified, graph_from
from src.core import reduction_search
from src.errors import ClaimFalsifiedError
from src.models.diagram import violations_document

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/api/search", tags=["search"])


class CascadeRequest(EmbeddingRequest):
    budget: Optional[int] = None
    cascade_seed: int = 0


class ExhaustiveRequest(EmbeddingRequest):
    cap: Optional[int] = None


@router.post("/reduce")
def reduce(request: EmbeddingRequest):
    g = graph_from(request)
    try:
        _, sequence = reduction_search.greedy_reduce(g, embedding_from(g, request))
    except ClaimFalsifiedError as e:
        raise falsified(e)
    return sequence.model_dump(mode="json")


@router.post("/cascade")
def cascade(request: CascadeRequest):
    g = graph_from(request)
    try:
        _, sequence = reduction_search.plus_cascade(
            g, embedding_from(g, request), request.budget, np.random.default_rng(request.cascade_seed)
        )
    except ClaimFalsifiedError as e:
        raise falsified(e)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return sequence.model_dump(mode="json")


@router.post("/circular")
def circular(request: ExhaustiveRequest):
    """Exhaustive signature sweep under the request's rotation."""
    g = graph_from(request)
    rotation = embedding_from(g, request).rotation
    try:
        outcome = reduction_search.search_circular_exhaustive(g, rotation, request.cap)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return outcome.model_dump(mode="json")


@router.post("/matching-bound")
def matching_bound(request: GraphRequest):
    g = graph_from(request)
    try:
        emb, matching = reduction_search.matching_bound_embedding(g)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    violations = reduction_search.matching_bound_violations(g, emb, matching)
    if violations:
        raise HTTPException(status_code=422, detail={"violations": violations_document(violations)})
    return {"graph": g.name, "embedding": emb.to_document(), "matching": list(matching.edges)}
