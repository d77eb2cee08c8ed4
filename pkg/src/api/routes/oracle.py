"""Oracle API Routes - exhaustive sweeps over small graphs"""
import logging
from typing import Optional

from fastapi import APIRouter, HTTPException

from src.api.deps import GraphRequest, graph_from
from src.core import oracle_enum
from src.storage.report_store import report_store

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/api/oracle", tags=["oracle"])


class EnumerateRequest(GraphRequest):
    signatures_only: bool = False
    cap: Optional[int] = None
    save: bool = False


@router.post("/enumerate")
def enumerate_summary(request: EnumerateRequest):
    g = graph_from(request)
    try:
        summary = oracle_enum.summarize(g, request.signatures_only, request.cap)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    doc = summary.model_dump(mode="json")
    if request.save:
        stored = report_store.save("enumeration", g.name, doc, {"signatures_only": request.signatures_only})
        doc["report_id"] = stored.id
    return doc


@router.post("/minimum-crossings")
def minimum_crossings(request: EnumerateRequest):
    """Crossing check over every minimum-singular embedding."""
    g = graph_from(request)
    try:
        report = oracle_enum.verify_minimum_crossing_free(g, cap=request.cap)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return {**report.model_dump(mode="json"), "passed": report.passed}


@router.post("/switch-coverage")
def switch_coverage(request: EnumerateRequest):
    g = graph_from(request)
    try:
        return oracle_enum.verify_switch_coverage(g, cap=request.cap).model_dump()
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
