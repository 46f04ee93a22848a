from collections import Counter
from fractions import Fraction as F
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rayleigh_ks.errors import BudgetExceeded, EmptyCondition, InvalidDistribution, InvalidInput, NoBasis
from rayleigh_ks.graphlab import WeightedGraph, edge_vectors
from rayleigh_ks.measures import (
    ConditioningPath,
    SubsetDistribution,
    condition,
    determinantal_from_lambda,
    is_homogeneous,
    kernel_minor,
    lambda_tree_distribution,
    marginal,
    marginals,
    product_lift,
    sample,
)
from rayleigh_ks.stablepoly import VectorSystem


def test_validation():
    with pytest.raises(InvalidDistribution):
        SubsetDistribution.from_sets(2, [([0], F(-1, 2)), ([1], F(3, 2))])
    with pytest.raises(InvalidDistribution):
        SubsetDistribution.from_sets(2, [([0], F(1, 3))])
    with pytest.raises(InvalidDistribution):
        SubsetDistribution.from_sets(2, [([5], 1)])


def test_json_round_trip(pair_dist):
    assert SubsetDistribution.from_json(pair_dist.to_json()) == pair_dist


def test_marginal_examples(ust_triangle, pair_dist):
    mu, _ = ust_triangle
    assert [marginal(mu, i) for i in range(3)] == [F(2, 3)] * 3
    assert marginal(SubsetDistribution.point_mass(2, [0, 1]), 0) == 1
    assert marginal(pair_dist, 0) == F(1, 2)


def test_condition_examples(ust_triangle, pair_dist):
    mu, _ = ust_triangle
    c = condition(mu, 0, 1)
    assert set(c.sets()) == {(0, 1), (0, 2)}
    assert marginal(c, 1) == F(1, 2)
    assert condition(pair_dist, 0, 0) == SubsetDistribution.point_mass(2, [1])
    with pytest.raises(EmptyCondition):
        condition(SubsetDistribution.point_mass(2, [0, 1]), 0, 0)


def test_conditioning_path_order(ust_triangle):
    mu, _ = ust_triangle
    path = ConditioningPath().extend(0, 1).extend(1, 0)
    assert path.apply(mu) == SubsetDistribution.point_mass(3, [0, 2])
    with pytest.raises(InvalidInput):
        path.extend(0, 1)


def test_product_lift_examples():
    assert set(product_lift(1, 2).sets()) == {(0,), (1,)}
    lift = product_lift(2, 2)
    assert len(lift.support) == 4 and all(p == F(1, 4) for p in lift.support.values())
    assert marginals(lift) == [F(1, 2)] * 4
    lift3 = product_lift(2, 3)
    assert len(lift3.support) == 9 and marginals(lift3) == [F(1, 3)] * 6
    with pytest.raises(BudgetExceeded):
        product_lift(10, 2, budget=100)


def test_lambda_tree_examples(triangle):
    assert lambda_tree_distribution(triangle, [1, 1, 1]) == SubsetDistribution.uniform(3, [[0, 1], [0, 2], [1, 2]])
    path = WeightedGraph.from_edges([(0, 1), (1, 2)])
    assert lambda_tree_distribution(path, [5, 7]) == SubsetDistribution.point_mass(2, [0, 1])
    mu = lambda_tree_distribution(triangle, [2, 1, 1])
    assert (mu.prob([0, 1]), mu.prob([0, 2]), mu.prob([1, 2])) == (F(2, 5), F(2, 5), F(1, 5))
    with pytest.raises(NoBasis):
        lambda_tree_distribution(WeightedGraph(3, ((0, 1, 1),)), [1])


def test_determinantal_examples(triangle):
    ortho = VectorSystem.from_vectors([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert determinantal_from_lambda(ortho, [1, 1, 1]) == SubsetDistribution.point_mass(3, [0, 1, 2])
    line = VectorSystem.from_vectors([[1], [1]])
    assert determinantal_from_lambda(line, [1, 1]) == SubsetDistribution.uniform(2, [[0], [1]])
    incidence = VectorSystem.from_vectors([[-1, 0], [1, -1], [0, -1]])
    assert determinantal_from_lambda(incidence, [1, 1, 1]) == lambda_tree_distribution(triangle, [1, 1, 1])


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(1, 5), min_size=6, max_size=6))
def test_determinantal_inclusion_probabilities_are_kernel_minors(weights):
    """P[S in T] = det K_S for a determinantal measure (brute-force oracle)."""
    g = WeightedGraph.from_edges([(a, b) for a in range(4) for b in range(a + 1, 4)])
    vs = edge_vectors(g).system
    mu = determinantal_from_lambda(vs, weights)
    assert mu == lambda_tree_distribution(g, weights)
    for k in (1, 2):
        for s in combinations(range(6), k):
            assert mu.inclusion_prob(s) == kernel_minor(vs, weights, s)


def test_homogeneity_examples(ust_triangle):
    assert is_homogeneous(ust_triangle[0]) == (True, 2)
    assert is_homogeneous(SubsetDistribution.uniform(2, [[0], [0, 1]])) == (False, None)
    assert is_homogeneous(SubsetDistribution.point_mass(2, [])) == (True, 0)


def test_sampling_frequencies(ust_triangle):
    mu, _ = ust_triangle
    rng = np.random.default_rng(42)
    counts = Counter(sample(mu, rng) for _ in range(3000))
    assert set(counts) == {(0, 1), (0, 2), (1, 2)}
    assert all(900 <= c <= 1100 for c in counts.values())


def test_sampling_is_reproducible(pair_dist):
    for seed in range(10):
        a = [sample(pair_dist, np.random.default_rng(seed)) for _ in range(5)]
        b = [sample(pair_dist, np.random.default_rng(seed)) for _ in range(5)]
        assert a == b
    point = SubsetDistribution.point_mass(3, [0, 2])
    assert sample(point, np.random.default_rng(7)) == (0, 2)
