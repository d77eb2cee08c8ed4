#!/usr/bin/env python3
"""
API tests - every router through FastAPI's TestClient
Run from the repository root: pytest tests/test_api.py
"""
import sys
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

sys.path.insert(0, str(Path(__file__).parent.parent))

from tests.conftest import PLANAR_K4_ROTATION
from main import app
from src.api.routes import experiments as experiment_routes
from src.storage.report_store import ReportStore

client = TestClient(app)

PLANAR_K4 = {"rotation": [list(t) for t in PLANAR_K4_ROTATION], "signature": [1] * 6}
THETA_TORUS = {"rotation": [[0, 2, 4], [1, 3, 5]], "signature": [1, 1, 1]}


# ============ HEALTH ============

def test_root_and_health():
    assert client.get("/").json()["status"] == "online"
    health = client.get("/health").json()
    assert health["status"] == "healthy"


# ============ GRAPHS ============

def test_catalog():
    assert "petersen" in client.get("/api/graphs/catalog").json()
    assert client.get("/api/graphs/catalog/k4").json()["m"] == 6
    assert client.get("/api/graphs/catalog/cube").status_code == 404


def test_parse_edge_list():
    r = client.post("/api/graphs/parse", json={"edge_list": "2 3\n0 1\n0 1\n0 1\n"})
    assert r.status_code == 200
    assert r.json()["bridgeless"] is True

    r = client.post("/api/graphs/parse", json={"edge_list": "4 6\n0 1\n"})
    assert r.status_code == 400 and "found 1" in r.json()["detail"]
    assert client.post("/api/graphs/parse", json={"graph": "k4", "edge_list": "2 3"}).status_code == 400


def test_two_factor():
    doc = client.post("/api/graphs/two-factor", json={"graph": "theta"}).json()
    assert doc["matching"] == [0]
    assert doc["cycles"] == [{"vertices": [0, 1], "edges": [1, 2]}]


# ============ EMBEDDINGS ============

def test_faces_and_classify():
    doc = client.post("/api/embeddings/faces", json={"graph": "k4", "embedding": PLANAR_K4}).json()
    assert len(doc["faces"]) == 4 and doc["surface"] == "sphere"
    assert doc["face_count"] == 4 and doc["faces"][0][0].keys() == {"edge", "from", "to"}

    doc = client.post("/api/embeddings/classify", json={"graph": "k4", "seed": 5}).json()
    assert sum(doc["counts"].values()) == 6


def test_twist():
    r = client.post("/api/embeddings/twist", json={"graph": "k4", "embedding": PLANAR_K4, "edge": 0})
    assert r.status_code == 200
    assert r.json()["record"]["after"]["good"] == 1
    r = client.post("/api/embeddings/twist", json={"graph": "k4", "embedding": PLANAR_K4, "edge": 9})
    assert r.status_code == 400


def test_bad_embedding_document():
    bad = {"rotation": PLANAR_K4["rotation"], "signature": [1, 1, 1]}
    r = client.post("/api/embeddings/faces", json={"graph": "k4", "embedding": bad})
    assert r.status_code == 400


def test_diagram_formats():
    r = client.post("/api/embeddings/diagram", json={"graph": "theta", "format": "dot"})
    assert r.status_code == 200
    assert r.headers["content-type"].startswith("text/vnd.graphviz")
    assert r.text.startswith("graph facial_diagram {")

    doc = client.post("/api/embeddings/diagram", json={"graph": "theta"}).json()
    assert doc["crossing_pairs"] == [[0, 1], [0, 2], [1, 2]]
    assert client.post("/api/embeddings/diagram", json={"graph": "theta", "format": "svg"}).status_code == 400


def test_check_properties():
    r = client.post("/api/embeddings/check", json={"graph": "petersen", "seed": 11})
    assert r.status_code == 200 and r.json()["violations"] == []


# ============ SEARCH ============

def test_reduce_and_cascade():
    twisted = dict(PLANAR_K4, signature=[-1, 1, 1, 1, 1, 1])
    doc = client.post("/api/search/reduce", json={"graph": "k4", "embedding": twisted}).json()
    assert [s["edge"] for s in doc["steps"]] == [0]

    doc = client.post("/api/search/cascade",
                      json={"graph": "theta", "embedding": THETA_TORUS, "budget": 1}).json()
    assert doc["rounds"] == 1
    assert doc["final_counts"]["bad"] + doc["final_counts"]["good"] == 0


def test_circular_search_and_matching_bound():
    doc = client.post("/api/search/circular", json={"graph": "k33"}).json()
    assert doc["status"] == "circular_found"
    assert client.post("/api/search/circular", json={"graph": "petersen", "cap": 4}).status_code == 400

    doc = client.post("/api/search/matching-bound", json={"graph": "prism_5"}).json()
    assert len(doc["matching"]) == 5


# ============ ORACLE ============

def test_oracle_routes():
    doc = client.post("/api/oracle/enumerate", json={"graph": "theta"}).json()
    assert doc["total_configurations"] == 32 and doc["conjectured"] == "1"

    assert client.post("/api/oracle/minimum-crossings", json={"graph": "k4"}).json()["passed"] is True
    assert client.post("/api/oracle/switch-coverage", json={"graph": "theta"}).json()["equal"] is True
    assert client.post("/api/oracle/enumerate", json={"graph": "k33", "cap": 3}).status_code == 400


# ============ EXPERIMENTS ============

@pytest.fixture
def store(tmp_path, monkeypatch):
    store = ReportStore(tmp_path / "reports")
    monkeypatch.setattr(experiment_routes, "report_store", store)
    return store


def test_monte_carlo_saved_and_listed(store):
    r = client.post("/api/experiments/monte-carlo", json={"graph": "theta", "samples": 30, "seed": 4, "save": True})
    assert r.status_code == 200
    report_id = r.json()["report_id"]

    assert client.get("/api/experiments/reports/experiment").json() == [report_id]
    stored = client.get(f"/api/experiments/reports/experiment/{report_id}").json()
    assert stored["report"]["samples"] == 30
    assert stored["params"] == {"samples": 30, "seed": 4}
    assert client.get("/api/experiments/reports/experiment/missing").status_code == 404
    assert client.get("/api/experiments/reports/unknown").json() == []
    assert not (store.reports_dir / "unknown").exists()


def test_sweep_and_bad_input():
    rows = client.post("/api/experiments/sweep", json={"sizes": [6], "samples": 2, "seed": 1}).json()
    assert rows[0]["n"] == 6 and rows[0]["m"] == 9
    assert client.post("/api/experiments/sweep", json={"sizes": [5], "samples": 2}).status_code == 400
    assert client.post("/api/experiments/monte-carlo", json={"graph": "k4", "samples": 0}).status_code == 400
