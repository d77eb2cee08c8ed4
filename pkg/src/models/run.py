"""Run configuration and stored-report models shared by the CLI, the API and the report store."""
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, model_validator


class Subcommand(str, Enum):
    FACES = "faces"
    CLASSIFY = "classify"
    TWIST = "twist"
    DIAGRAM = "diagram"
    REDUCE = "reduce"
    SEARCH = "search"
    MATCHING_BOUND = "matching-bound"
    ENUMERATE = "enumerate"
    EXPERIMENT = "experiment"
    CHECK_PROPERTIES = "check-properties"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    DOT = "dot"


class ReduceMode(str, Enum):
    GREEDY = "greedy"
    CASCADE = "cascade"


class RunConfig(BaseModel):
    subcommand: Subcommand
    graph: Optional[str] = None          # catalog name
    graph_file: Optional[str] = None     # edge-list file
    embedding: Optional[str] = None      # embedding JSON file; else random (with seed) or standard
    seed: Optional[int] = None
    samples: Optional[int] = None
    workers: int = 1
    format: OutputFormat = OutputFormat.JSON
    cap: Optional[int] = None
    budget: Optional[int] = None
    out: Optional[str] = None
    edge: Optional[int] = None
    mode: ReduceMode = ReduceMode.GREEDY
    signatures_only: bool = False
    sizes: List[int] = []
    save: bool = False

    @model_validator(mode="after")
    def _check_sources(self) -> "RunConfig":
        sweep = self.subcommand is Subcommand.EXPERIMENT and self.sizes
        if not sweep and (self.graph is None) == (self.graph_file is None):
            raise ValueError("give exactly one of --graph or --graph-file")
        if self.uses_randomness and self.seed is None:
            raise ValueError(f"{self.subcommand.value}: --seed is required when sampling")
        if self.workers < 1:
            raise ValueError(f"--workers must be >= 1, got {self.workers}")
        if self.subcommand is Subcommand.TWIST and self.edge is None:
            raise ValueError("twist: --edge is required")
        if self.budget is not None and self.budget < 0:
            raise ValueError(f"--budget must be >= 0, got {self.budget}")
        if self.sizes and (self.graph is not None or self.graph_file is not None):
            raise ValueError("give either --sizes or a graph, not both")
        return self

    @property
    def uses_randomness(self) -> bool:
        if self.subcommand is Subcommand.EXPERIMENT:
            return True
        if self.subcommand is Subcommand.REDUCE and self.mode is ReduceMode.CASCADE:
            return True
        if self.subcommand is Subcommand.CHECK_PROPERTIES and self.samples:
            return True
        return False

    @property
    def embedding_source(self) -> str:
        """'file', 'random' or 'standard' (incidence-order rotation, all signs +1)."""
        if self.embedding is not None:
            return "file"
        if self.seed is not None:
            return "random"
        return "standard"


class StoredReport(BaseModel):
    id: str                              # e.g. "2026-10-19_k4_experiment_7"
    kind: str                            # "experiment" | "enumeration" | ...
    graph: str
    created_at: datetime
    params: Dict[str, Any] = {}
    report: Dict[str, Any]
