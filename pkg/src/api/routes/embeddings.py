"""Embedding API Routes - faces, classes, twists, diagrams and property checks"""
import logging

from fastapi import APIRouter, HTTPException, Response

from src.api.deps import EmbeddingRequest, embedding_from, graph_from
from src.core import embedding_core, facial_diagram, twist_ops
from src.models.diagram import violations_document

logger = logging.getLogger(__name__)

router = APIRouter(prefix="/api/embeddings", tags=["embeddings"])


class TwistRequest(EmbeddingRequest):
    edge: int


class DiagramRequest(EmbeddingRequest):
    format: str = "json"    # json | dot


@router.post("/faces")
def faces(request: EmbeddingRequest):
    g = graph_from(request)
    emb = embedding_from(g, request)
    fs = embedding_core.trace_faces(g, emb)
    return {
        "graph": g.name,
        "embedding": emb.to_document(),
        "faces": fs.export(g),
        **embedding_core.surface_summary(g, emb, fs),
    }


@router.post("/classify")
def classify(request: EmbeddingRequest):
    g = graph_from(request)
    fs = embedding_core.trace_faces(g, embedding_from(g, request))
    return {
        "classes": {str(e): c.value for e, c in embedding_core.classify_edges(fs).items()},
        "counts": embedding_core.count_classes(fs).model_dump(),
        "circular": embedding_core.is_circular(fs),
    }


@router.post("/twist")
def twist(request: TwistRequest):
    g = graph_from(request)
    try:
        twisted, record = twist_ops.twist_with_record(g, embedding_from(g, request), request.edge)
    except ValueError as e:
        raise HTTPException(status_code=400, detail=str(e))
    return {"embedding": twisted.to_document(), "record": record.model_dump(mode="json")}


@router.post("/diagram")
def diagram(request: DiagramRequest):
    g = graph_from(request)
    fd = facial_diagram.diagram_of(g, embedding_from(g, request))
    if request.format == "dot":
        return Response(content=facial_diagram.to_dot(fd), media_type="text/vnd.graphviz")
    if request.format != "json":
        raise HTTPException(status_code=400, detail=f"format must be 'json' or 'dot', got {request.format!r}")
    doc = fd.to_document()
    doc["crossing_pairs"] = [list(p) for p in facial_diagram.crossing_pairs(fd)]
    return doc


@router.post("/check")
def check_properties(request: EmbeddingRequest):
    """Structural properties and twist claims; 422 when any claim fails."""
    g = graph_from(request)
    emb = embedding_from(g, request)
    violations = facial_diagram.check_all(g, emb)
    if violations:
        raise HTTPException(status_code=422, detail={"violations": violations_document(violations)})
    return {"graph": g.name, "violations": []}
