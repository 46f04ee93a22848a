import math
import random
from fractions import Fraction as F

import pytest

from rayleigh_ks.barrier import (
    above_roots_probe,
    barrier_polynomial,
    bound_report,
    d_phi,
    monotone_convex_check,
    phi_psi,
    probe,
    ratio_lemma_check,
    ratio_lemma_values,
    replay,
    shift_lemma_check,
)
from rayleigh_ks.errors import AtRoot, DegenerateDirection, HypothesisNotMet
from rayleigh_ks.instances import random_stable_poly
from rayleigh_ks.measures import marginals
from rayleigh_ks.stablepoly import MPoly

Z1 = MPoly.linear([1, 0])
Z2 = MPoly.linear([0, 1])


def test_phi_psi_examples():
    z1z2z3 = MPoly.linear([1, 0, 0]) * MPoly.linear([0, 1, 0]) * MPoly.linear([0, 0, 1])
    assert phi_psi(z1z2z3, [2, 2, 2], 0) == (F(1, 2), 0)
    s = (Z1 + Z2) * (Z1 + Z2)
    assert phi_psi(s, [1, 1], 0) == (1, F(1, 2))
    with pytest.raises(AtRoot):
        phi_psi(Z1 * Z2, [0, 1], 0)


def test_phi_on_ust_triangle_start(ust_triangle):
    mu, vs = ust_triangle
    p = barrier_polynomial(mu, vs)
    t = F(3, 2)
    phi, _ = phi_psi(p, [t] * 3, 0)
    assert phi == (marginals(mu)[0] + vs.sq_norms()[0]) / t


def test_above_roots_examples():
    assert above_roots_probe(Z1 * Z2, [1, 1])
    assert not above_roots_probe(Z1 * Z2, [-1, -1])
    assert above_roots_probe((Z1 + MPoly.constant(2, -1)) * (Z2 + MPoly.constant(2, -2)), [2, 3])


def test_shift_lemma_examples():
    rep = shift_lemma_check(Z1 * Z2, [3, 3], 0, F(3, 4))
    assert rep.hypothesis <= 1 and rep.ok
    with pytest.raises(HypothesisNotMet):
        shift_lemma_check(Z1 * Z2, [1, 1], 0, F(1, 2))


def test_ratio_lemma_examples():
    s = (Z1 + Z2) * (Z1 + Z2)
    assert ratio_lemma_check(s, [2, 2], 0, 1)
    lhs, rhs = ratio_lemma_values(Z1 * Z2, [2, 3], 1, 1)
    assert lhs == 0 and rhs > 0
    with pytest.raises(DegenerateDirection):
        ratio_lemma_values(Z1 * Z2, [2, 3], 0, 1)


def test_ratio_lemma_random_determinants():
    rng = random.Random(11)
    for _ in range(10):
        a = [[F(rng.randint(0, 3)) for _ in range(2)] for _ in range(2)]
        # PSD: A^T A and I + B^T B
        A = [[sum(a[k][i] * a[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
        b = [[F(rng.randint(-2, 2)) for _ in range(2)] for _ in range(2)]
        B = [[sum(b[k][i] * b[k][j] for k in range(2)) + (i == j) for j in range(2)] for i in range(2)]
        entries = [[Z1 * A[r][c] + Z2 * B[r][c] for c in range(2)] for r in range(2)]
        p = entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0]
        try:
            assert ratio_lemma_check(p, [3, 3], 0, 1)
        except DegenerateDirection:
            pass


@pytest.mark.parametrize(
    "e1, e2, eps, t, xroot, eig",
    [
        (0.1, 0.1, 0.2, math.sqrt(0.44), 2 * math.sqrt(0.44), 0.88),
        (0, 0, 0, 0, 0, 0),
        (0.5, 0.5, 1, math.sqrt(3), 2 * math.sqrt(3), 6),
    ],
)
def test_bound_report_examples(e1, e2, eps, t, xroot, eig):
    rep = bound_report(e1, e2)
    assert rep.eps == pytest.approx(eps)
    assert rep.t == pytest.approx(t) and rep.delta == rep.t
    assert rep.x_root_bound == pytest.approx(xroot) and rep.eigen_bound == pytest.approx(eig)
    if eps:
        assert abs(2 / rep.delta * rep.phi + rep.phi**2 - 1) < 1e-12


def test_lemma_properties_on_random_stable_polys():
    rng = random.Random(3)
    for _ in range(15):
        p, z = random_stable_poly(rng)
        assert above_roots_probe(p, z)
        pr = probe(p, z)
        for phi, psi in zip(pr.phi, pr.psi):
            assert phi >= 0 and psi <= phi * phi
        for i in range(p.m):
            for j in range(p.m):
                mono, convex = monotone_convex_check(p, z, i, j, F(1, 2))
                assert mono and convex
                assert d_phi(p, z, i, j) == d_phi(p, z, j, i)


def test_replay_on_ust_triangle(ust_triangle):
    mu, vs = ust_triangle
    rep = replay(mu, vs)
    assert rep.phi_ok and rep.above_ok and rep.ok
    assert rep.final_point >= rep.mixed_root
    assert len(rep.steps) == 4 and all(s["ok"] for s in rep.steps)
