import math
from fractions import Fraction as F

import numpy as np
import pytest

from rayleigh_ks.errors import BoundaryOrInfeasible, InvalidInput
from rayleigh_ks.graphlab import spanning_trees
from rayleigh_ks.maxent import (
    BasisPolytopePoint,
    fit_lambda,
    interior_point,
    maxent_marginals,
    partition_function,
    relative_entropy,
)
from rayleigh_ks.measures import determinantal_from_lambda, lambda_tree_distribution, marginals
from rayleigh_ks.stablepoly import VectorSystem

INCIDENCE = VectorSystem.from_vectors([[-1, 0], [1, -1], [0, -1]])


def test_interior_point_examples(triangle, k4):
    x = interior_point([(0, 1)], 3, 0.1, all_bases=spanning_trees(triangle))
    assert max(x.x) <= 1.0 and abs(sum(x.x) - 2) < 1e-12
    x = interior_point([(0, 1, 5), (2, 3, 4)], 6, 0.01, all_bases=spanning_trees(k4))
    assert max(x.x) <= 0.5 + 0.01
    x0 = interior_point([(0, 1, 5), (2, 3, 4)], 6, 0.0, x1=[0.5] * 6)
    assert x0.x == (0.5,) * 6 and x0.boundary_risk
    with pytest.raises(InvalidInput):
        interior_point([(0, 1), (1, 2)], 3, 0.1, x1=[2 / 3] * 3)


def test_partition_function_examples():
    assert partition_function(VectorSystem.from_vectors([[1, 0], [0, 1]]), [2, 3]) == 6
    assert partition_function(INCIDENCE, [1, 1, 1]) == 3
    assert partition_function(INCIDENCE, [F(5)] * 3) == 3 * 25


def test_maxent_marginal_examples():
    assert np.allclose(maxent_marginals(VectorSystem.from_vectors([[1, 0], [0, 1]]), [1, 1]), [1, 1])
    assert np.allclose(maxent_marginals(INCIDENCE, [1, 1, 1]), [2 / 3] * 3)
    assert np.allclose(maxent_marginals(VectorSystem.from_vectors([[1], [1]]), [1, 3]), [0.25, 0.75])


def test_fit_symmetric_target():
    model = fit_lambda(INCIDENCE, BasisPolytopePoint((2 / 3,) * 3, 2))
    assert model.residual < 1e-8
    lam = np.array(model.lam)
    assert np.allclose(lam / lam[0], 1, rtol=1e-6)


def test_fit_asymmetric_target_matches_enumeration(triangle):
    target = [0.8, 0.6, 0.6]
    model = fit_lambda(INCIDENCE, target)
    assert model.residual < 1e-8
    mu = lambda_tree_distribution(triangle, [F(x) for x in model.lam])
    assert np.allclose([float(p) for p in marginals(mu)], target, atol=1e-8)
    assert mu == determinantal_from_lambda(INCIDENCE, [F(x) for x in model.lam])
    # objective decreases monotonically
    assert all(b <= a + 1e-12 for a, b in zip(model.objective_trace, model.objective_trace[1:]))


def test_fit_boundary_target():
    with pytest.raises(BoundaryOrInfeasible):
        fit_lambda(INCIDENCE, [1.0, 0.5, 0.5])


def test_fit_wrong_sum():
    with pytest.raises((BoundaryOrInfeasible, InvalidInput)):
        fit_lambda(INCIDENCE, [0.5, 0.5, 0.5])


def test_polytope_point_validation():
    with pytest.raises(InvalidInput):
        BasisPolytopePoint((1.2, 0.8, 0.0), 2)


def test_relative_entropy():
    assert relative_entropy({1: 0.5, 2: 0.5}, {1: 0.5, 2: 0.5}) == 0
    assert relative_entropy({1: 1.0}, {1: 0.5, 2: 0.5}) == pytest.approx(math.log(2))
