"""File-based report storage. One JSON file per report under {REPORTS_DIR}/{kind}/."""
import logging
from datetime import date, datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

from src import config
from src.models.run import StoredReport

logger = logging.getLogger(__name__)


class ReportStore:
    """Simple file-based store for experiment and enumeration reports."""

    def __init__(self, reports_dir: Path = None):
        self.reports_dir = Path(reports_dir or config.REPORTS_DIR)
        self.reports_dir.mkdir(parents=True, exist_ok=True)

    def _get_kind_dir(self, kind: str) -> Path:
        """Get/create the directory of one report kind."""
        kind_dir = self.reports_dir / kind
        kind_dir.mkdir(parents=True, exist_ok=True)
        return kind_dir

    def _make_id(self, kind: str, graph: str, seed: Optional[int] = None) -> str:
        """Generate report ID: {date}_{graph}_{kind}[_{seed}], suffixed when taken."""
        base = f"{date.today().isoformat()}_{graph}_{kind}"
        if seed is not None:
            base = f"{base}_{seed}"
        report_id, n = base, 1
        while (self._get_kind_dir(kind) / f"{report_id}.json").exists():
            n += 1
            report_id = f"{base}-{n}"
        return report_id

    def save(self, kind: str, graph: str, report: Dict[str, Any],
             params: Dict[str, Any] = None) -> StoredReport:
        """Save a report document; returns the stored record."""
        stored = StoredReport(
            id=self._make_id(kind, graph, (params or {}).get("seed")),
            kind=kind,
            graph=graph,
            created_at=datetime.now(),
            params=params or {},
            report=report,
        )
        file = self._get_kind_dir(kind) / f"{stored.id}.json"
        file.write_text(stored.model_dump_json(indent=2))
        logger.info(f"💾 Saved {kind} report {stored.id}")
        return stored

    def get(self, kind: str, report_id: str) -> Optional[StoredReport]:
        """Load a report from file."""
        file = self.reports_dir / kind / f"{report_id}.json"
        if file.exists():
            return StoredReport.model_validate_json(file.read_text())
        return None

    def list_reports(self, kind: str) -> List[str]:
        """List all report IDs of a kind, oldest name first."""
        kind_dir = self.reports_dir / kind
        if not kind_dir.is_dir():
            return []
        return sorted(f.stem for f in kind_dir.glob("*.json"))

    def list_kinds(self) -> List[str]:
        return sorted(d.name for d in self.reports_dir.iterdir() if d.is_dir())


# Global instance
report_store = ReportStore()
