#!/usr/bin/env python3
"""
Report store tests - saving, ids, listing and loading reports
Run from the repository root: pytest tests/test_report_store.py
"""
import sys
from datetime import date
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.storage.report_store import ReportStore


def test_save_and_get(tmp_path):
    store = ReportStore(tmp_path)
    stored = store.save("experiment", "k4", {"mean_bad": 1.5}, {"seed": 7, "samples": 100})

    assert stored.id == f"{date.today().isoformat()}_k4_experiment_7"
    assert (tmp_path / "experiment" / f"{stored.id}.json").exists()

    loaded = store.get("experiment", stored.id)
    assert loaded is not None
    assert loaded.report == {"mean_bad": 1.5}
    assert loaded.params["samples"] == 100


def test_ids_are_never_reused(tmp_path):
    store = ReportStore(tmp_path)
    first = store.save("enumeration", "theta", {"total_configurations": 32})
    second = store.save("enumeration", "theta", {"total_configurations": 32})
    assert second.id == f"{first.id}-2"
    assert store.list_reports("enumeration") == sorted([first.id, second.id])


def test_kinds_and_missing_reports(tmp_path):
    store = ReportStore(tmp_path)
    store.save("experiment", "k4", {})
    store.save("enumeration", "k4", {})
    assert store.list_kinds() == ["enumeration", "experiment"]
    assert store.get("experiment", "nope") is None


def test_reads_do_not_create_directories(tmp_path):
    store = ReportStore(tmp_path)
    assert store.list_reports("unknown") == []
    assert store.get("unknown", "nope") is None
    assert not (tmp_path / "unknown").exists()
    assert store.list_kinds() == []
