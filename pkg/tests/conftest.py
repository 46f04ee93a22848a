from fractions import Fraction
from pathlib import Path

import pytest

from rayleigh_ks.graphlab import WeightedGraph, edge_vectors
from rayleigh_ks.measures import SubsetDistribution, lambda_tree_distribution
from rayleigh_ks.stablepoly import VectorSystem

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures() -> Path:
    return FIXTURES


@pytest.fixture
def triangle() -> WeightedGraph:
    return WeightedGraph.from_edges([(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def k4() -> WeightedGraph:
    return WeightedGraph.from_edges([(a, b) for a in range(4) for b in range(a + 1, 4)])


@pytest.fixture
def pair_dist() -> SubsetDistribution:
    return SubsetDistribution.uniform(2, [[0], [1]])


@pytest.fixture
def pair_vs() -> VectorSystem:
    return VectorSystem.from_vectors([[1], [1]])


@pytest.fixture
def ust_triangle(triangle):
    return lambda_tree_distribution(triangle, [1, 1, 1]), edge_vectors(triangle).system


@pytest.fixture
def pairs_system() -> VectorSystem:
    return VectorSystem.scaled([[1, 0], [1, 0], [0, 1], [0, 1]], Fraction(1, 2))


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
