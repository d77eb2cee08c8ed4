"""Report models: twist audit trails, search outcomes, oracle summaries, experiments."""
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, field_serializer

from src.models.embedding import ClassCounts, Embedding


class TwistRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    edge: int
    before: ClassCounts
    after: ClassCounts
    faces_before: int
    faces_after: int


class TwistSequence(BaseModel):
    model_config = ConfigDict(frozen=True)

    steps: Tuple[TwistRecord, ...]
    initial: Embedding
    final: Embedding
    initial_counts: ClassCounts
    final_counts: ClassCounts
    rounds: int = 0          # "+" twists performed by the cascade heuristic

    def replay(self) -> Embedding:
        """Re-apply every step to the initial embedding."""
        signature = list(self.initial.signature)
        for step in self.steps:
            signature[step.edge] = -signature[step.edge]
        return self.initial.model_copy(update={"signature": tuple(signature)})


class SearchStatus(str, Enum):
    CIRCULAR_FOUND = "circular_found"
    BUDGET_EXHAUSTED = "budget_exhausted"


class SearchOutcome(BaseModel):
    model_config = ConfigDict(frozen=True)

    status: SearchStatus
    witness: Optional[Embedding] = None
    witness_faces: Optional[int] = None
    witness_euler_characteristic: Optional[int] = None
    states_visited: int
    best_singular: int
    best_embedding: Optional[Embedding] = None


class _ExactModel(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class EnumerationSummary(_ExactModel):
    graph: str
    n: int
    m: int
    total_configurations: int
    signatures_only: bool = False
    min_singular: int
    witness: Embedding
    witness_faces: int
    witness_euler_characteristic: int
    circular_count: int
    expected_bad: Fraction
    expected_good: Fraction
    expected_regular: Fraction
    conjectured: Fraction

    @field_serializer("expected_bad", "expected_good", "expected_regular", "conjectured")
    def _exact(self, value: Fraction) -> str:
        return str(value)

    @property
    def deviations(self) -> Tuple[Fraction, Fraction, Fraction]:
        c = self.conjectured
        return (self.expected_bad - c, self.expected_good - c, self.expected_regular - c)


class MinimumCrossingReport(BaseModel):
    """Crossing check over every embedding attaining the minimum singular count."""
    model_config = ConfigDict(frozen=True)

    graph: str
    min_singular: int
    minimum_embeddings_checked: int
    violations: int
    first_violation: Optional[Embedding] = None
    crossing_pairs: Tuple[Tuple[int, int], ...] = ()

    @property
    def passed(self) -> bool:
        return self.violations == 0


class CoverageReport(BaseModel):
    """Face multisets reachable by signature-only sweeps vs full sweeps."""
    model_config = ConfigDict(frozen=True)

    graph: str
    signature_configurations: int
    full_configurations: int
    signature_face_sets: int
    full_face_sets: int
    equal: bool


class ExperimentReport(_ExactModel):
    graph: str
    n: int
    m: int
    samples: int
    seed: int
    workers: int = 1
    mean_bad: float
    mean_good: float
    mean_regular: float
    var_bad: float
    var_good: float
    var_regular: float
    ci99_bad: float
    ci99_good: float
    ci99_regular: float
    conjectured: float
    exact_bad: Optional[Fraction] = None
    exact_good: Optional[Fraction] = None
    exact_regular: Optional[Fraction] = None

    @field_serializer("exact_bad", "exact_good", "exact_regular")
    def _exact(self, value: Optional[Fraction]) -> Optional[str]:
        return None if value is None else str(value)

    @property
    def deviations(self) -> Tuple[float, float, float]:
        c = self.conjectured
        return (self.mean_bad - c, self.mean_good - c, self.mean_regular - c)


EXPERIMENT_CSV_COLUMNS: List[str] = [
    "graph", "n", "m", "samples", "seed",
    "mean_bad", "mean_good", "mean_regular",
    "var_bad", "var_good", "var_regular",
    "ci99_bad", "ci99_good", "ci99_regular",
    "conjectured",
]
