"""Experiment API Routes - Monte Carlo runs and stored reports"""
import logging
from typing import List

from fastapi import APIRouter, HTTPException
from pydantic import BaseModel

from src.api.deps import GraphRequest, graph_from
from src.core import experiments
from src.storage.report_store import report_store

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/api/experiments", tags=["experiments"])


class ExperimentRequest(GraphRequest):
    samples: int = 1000
    seed: int = 0
    save: bool = False


class SweepRequest(BaseModel):
    sizes: List[int]
    samples: int = 100
    seed: int = 0


@router.post("/monte-carlo")
def monte_carlo(request: ExperimentRequest):
    g = graph_from(request)
    try:
        report = experiments.monte_carlo_classes(g, request.samples, request.seed)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    doc = report.model_dump(mode="json")
    if request.save:
        stored = report_store.save("experiment", g.name, doc, {"samples": request.samples, "seed": request.seed})
        doc["report_id"] = stored.id
    return doc


@router.post("/sweep")
def sweep(request: SweepRequest):
    try:
        rows = experiments.sweep_families(request.sizes, request.samples, request.seed)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return [dict(zip(experiments.SWEEP_CSV_COLUMNS, row)) for row in rows]


@router.get("/reports/{kind}")
def list_reports(kind: str) -> List[str]:
    return report_store.list_reports(kind)


@router.get("/reports/{kind}/{report_id}")
def get_report(kind: str, report_id: str):
    stored = report_store.get(kind, report_id)
    if stored is None:
        raise HTTPException(status_code=404, detail=f"Report not found: {kind}/{report_id}")
    return stored.model_dump(mode="json")
