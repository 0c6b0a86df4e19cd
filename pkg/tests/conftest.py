import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from weighted_graph import Orientation, VertexWeightedGraph, complete_graph, path_graph  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full flip-relation sweep, deselect with -m \"not slow\"")


@pytest.fixture
def triangle():
    return complete_graph([1, 1, 1])


@pytest.fixture
def unit_edge():
    return path_graph([1, 1])


@pytest.fixture
def weighted_edge():
    """Single edge, weights (2, 1)."""
    return path_graph([2, 1])


@pytest.fixture
def p3():
    return path_graph([1, 1, 1])


@pytest.fixture
def oriented_p3(p3):
    """u -> v -> x: one source, one sink."""
    return Orientation(p3, [(0, 1), (1, 2)])


@pytest.fixture
def loop_graph():
    return VertexWeightedGraph({0: 2, 1: 1}, [(0, 0), (0, 1)])


@pytest.fixture
def fig1_pair():
    return path_graph([1, 2, 1, 3, 2]), path_graph([1, 3, 2, 1, 2])
