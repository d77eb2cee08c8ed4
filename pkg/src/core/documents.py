"""Loading graphs and embeddings from the CLI/API inputs, and stable JSON output."""
import json
from pathlib import Path
from typing import Any, Optional

from pydantic import ValidationError

from src.core.embedding_core import validate_embedding
from src.core.graph_core import named_graph, parse_graph
from src.errors import GraphInputError
from src.models.embedding import Embedding
from src.models.graph import CubicGraph


def load_graph(name: Optional[str] = None, path: Optional[str] = None) -> CubicGraph:
    """Exactly one of a catalog name or an edge-list file."""
    if (name is None) == (path is None):
        raise GraphInputError("give exactly one graph source: a catalog name or an edge-list file")
    if name is not None:
        return named_graph(name)
    file = Path(path)
    return parse_graph(file.read_text(), name=file.stem)


def embedding_from_document(g: CubicGraph, data: Any) -> Embedding:
    if not isinstance(data, dict) or "rotation" not in data or "signature" not in data:
        raise GraphInputError("embedding document needs 'rotation' and 'signature' keys")
    try:
        emb = Embedding(rotation=data["rotation"], signature=data["signature"])
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise GraphInputError(f"embedding document: {where}: {first['msg']}")
    return validate_embedding(g, emb)


def load_embedding(g: CubicGraph, path: str) -> Embedding:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise GraphInputError(f"{path}: not valid JSON (line {e.lineno}: {e.msg})")
    return embedding_from_document(g, data)


def dump_json(data: Any) -> str:
    """Sorted, indented JSON so equal inputs give byte-identical output."""
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
