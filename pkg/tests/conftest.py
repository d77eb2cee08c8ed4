"""Shared fixtures: catalog graphs and a hand-checked planar K4 embedding."""
import sys
from pathlib import Path

import pytest

# Add parent directory to path so we can import src
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.graph_core import named_graph
from src.models.embedding import Embedding

# K4 drawn in the plane: neighbours 0:(1,2,3), 1:(0,3,2), 2:(0,1,3), 3:(0,2,1)
PLANAR_K4_ROTATION = ((0, 2, 4), (1, 8, 6), (3, 7, 10), (5, 11, 9))

CATALOG = ["theta", "k4", "k33", "petersen", "prism_3"]


@pytest.fixture
def theta():
    return named_graph("theta")


@pytest.fixture
def k4():
    return named_graph("k4")


@pytest.fixture
def k33():
    return named_graph("k33")


@pytest.fixture
def petersen():
    return named_graph("petersen")


@pytest.fixture
def planar_k4():
    return Embedding(rotation=PLANAR_K4_ROTATION, signature=(1,) * 6)


@pytest.fixture
def twisted_k4(planar_k4):
    """Planar K4 with edge 0 twisted: one '-' link, three faces."""
    return planar_k4.model_copy(update={"signature": (-1, 1, 1, 1, 1, 1)})
