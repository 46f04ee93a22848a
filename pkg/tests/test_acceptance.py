"""Acceptance criteria 1 to 9, each with its stated tolerance and time limit.

Every criterion records one PASS/FAIL line; the lines are printed in the
pytest terminal summary, or directly when this file is run as a script.
"""

import json
import math
import random
import time
from contextlib import contextmanager
from fractions import Fraction as F
from itertools import product
from pathlib import Path

import numpy as np
import pytest

from rayleigh_ks.barrier import (
    above_roots_probe,
    monotone_convex_check,
    probe,
    ratio_lemma_values,
    replay,
    shift_lemma_check,
)
from rayleigh_ks.charpoly import descend, ksr_partition, main_certificate, subset_poly, verify_identity
from rayleigh_ks.cli import main as cli_main
from rayleigh_ks.errors import BoundaryOrInfeasible, DegenerateDirection, HypothesisNotMet
from rayleigh_ks.graphlab import (
    WeightedGraph,
    disjoint_spanning_trees,
    edge_vectors,
    effective_resistances,
    spectral_thinness,
)
from rayleigh_ks.instances import instances, random_connected_graph, random_stable_poly
from rayleigh_ks.maxent import fit_lambda
from rayleigh_ks.measures import lambda_tree_distribution, marginals
from rayleigh_ks.stablepoly import VectorSystem
from rayleigh_ks.stablepoly.univariate import is_real_rooted, max_real_root

RESULTS: list[str] = []
FIXTURES = Path(__file__).parent / "fixtures"
SLACK = F(1, 10**10)
SEED = 2024


@contextmanager
def criterion(number: int, title: str, limit: float, prior: float = 0.0):
    start = time.perf_counter() - prior
    ok = False
    try:
        yield
        ok = True
    finally:
        secs = time.perf_counter() - start
        within = secs < limit
        status = "PASS" if ok and within else "FAIL"
        RESULTS.append(f"criterion {number} {status}: {title} ({secs:.2f}s, limit {limit:g}s)")
    assert within, f"criterion {number} took {secs:.2f}s, limit {limit}s"


@pytest.fixture(scope="module")
def corpus():
    return instances(SEED, 50)


@pytest.fixture(scope="module")
def identities(corpus):
    start = time.perf_counter()
    out = [verify_identity(inst.dist, inst.vs) for inst in corpus]
    return out, time.perf_counter() - start


def test_criterion_1_operator_identity(corpus, identities):
    results, secs = identities
    with criterion(1, "three routes to the mixed polynomial agree exactly on 50 instances", 30, prior=secs):
        kinds = {inst.kind for inst in corpus}
        assert kinds == {"ust", "lift", "point"}
        assert all(inst.dist.m <= 6 and inst.vs.d <= 3 for inst in corpus)
        for res in results:
            assert res["enum"] == res["operator"] == res["closed_form"]


def test_criterion_2_real_rootedness(identities):
    with criterion(2, "every mixed polynomial passes the Sturm real-rootedness test", 5):
        for res in identities[0]:
            assert is_real_rooted(res["enum"])


def test_criterion_3_descent_soundness(corpus):
    with criterion(3, "descent finds a supported set below the root of the whole family", 60):
        for inst in corpus:
            cert = descend(inst.dist, inst.vs)
            assert inst.dist.prob(cert.set) > 0
            assert all(step.decomposition_exact for step in cert.steps)
            q_root = max_real_root(subset_poly(inst.vs, cert.set))
            assert q_root <= cert.mixed_root + 1e-9


def test_criterion_4_main_bound():
    with criterion(4, "spectral norm and mixed root respect the eps bounds", 10):
        cases = [inst for inst in instances(SEED + 1, 20, isotropic=True)]
        k4 = WeightedGraph.from_edges([(a, b) for a in range(4) for b in range(a + 1, 4)])
        tri = WeightedGraph.from_edges([(0, 1), (1, 2), (0, 2)])
        extra = [(lambda_tree_distribution(g, [1] * g.m), edge_vectors(g).system) for g in (tri, k4)]
        for dist, vs in [(c.dist, c.vs) for c in cases] + extra:
            cert = main_certificate(dist, vs)
            eps = cert.eps1 + cert.eps2
            assert cert.spectral_norm <= 4 * eps + 2 * eps * eps + 1e-9
            assert cert.mixed_root <= 2 * math.sqrt(2 * eps + eps * eps) + 1e-9


def test_criterion_5_ksr_pairs():
    with criterion(5, "KS_r partition of the pairs fixture is optimal with norms 1/2", 5):
        vs = VectorSystem.scaled([[1, 0], [1, 0], [0, 1], [0, 1]], F(1, 2))
        res = ksr_partition(vs, 2)
        assert sorted(i for part in res.parts for i in part) == [0, 1, 2, 3]
        assert all(abs(n - 0.5) < 1e-9 for n in res.norms)
        best = min(
            max(vs.spectral_norm([i for i in range(4) if a[i] == j]) for j in range(2))
            for a in product(range(2), repeat=4)
        )
        assert abs(max(res.norms) - best) < 1e-9


def test_criterion_6_maxent():
    with criterion(6, "max-entropy fits converge and the boundary target is rejected", 5):
        tri = WeightedGraph.from_edges([(0, 1), (1, 2), (0, 2)])
        vs = VectorSystem.from_vectors([[-1, 0], [1, -1], [0, -1]])
        model = fit_lambda(vs, [F(2, 3)] * 3)
        assert model.residual < 1e-8
        lam = np.array(model.lam) / model.lam[0]
        assert np.allclose(lam, 1, rtol=1e-6)
        target = [0.8, 0.6, 0.6]
        model = fit_lambda(vs, target)
        assert model.residual < 1e-8
        mu = lambda_tree_distribution(tri, [F(x) for x in model.lam])
        assert np.allclose([float(p) for p in marginals(mu)], target, atol=1e-8)
        with pytest.raises(BoundaryOrInfeasible):
            fit_lambda(vs, [1.0, 0.5, 0.5])


def test_criterion_7_graph_numerics():
    with criterion(7, "resistances, Foster sums, thinness values and tree packing", 10):
        tri = WeightedGraph.from_edges([(0, 1), (1, 2), (0, 2)])
        k4 = WeightedGraph.from_edges([(a, b) for a in range(4) for b in range(a + 1, 4)])
        assert all(abs(r - 2 / 3) < 1e-10 for r in effective_resistances(tri))
        assert all(abs(r - 1 / 2) < 1e-10 for r in effective_resistances(k4))
        rng = random.Random(SEED)
        for _ in range(20):
            g = random_connected_graph(rng, 8, 16)
            assert g.n <= 8
            total = sum(float(w) * r for (_, _, w), r in zip(g.edges, effective_resistances(g)))
            assert abs(total - (g.n - 1)) < 1e-9
        idx = {(u, v): e for e, (u, v, _) in enumerate(k4.edges)}
        star = [idx[0, 1], idx[0, 2], idx[0, 3]]
        path = [idx[0, 1], idx[1, 2], idx[2, 3]]
        assert abs(spectral_thinness(k4, star) - 1.0) < 1e-9
        assert abs(spectral_thinness(k4, path) - (2 + math.sqrt(2)) / 4) < 1e-9
        assert disjoint_spanning_trees(k4, 2).found == 2


def test_criterion_8_barrier_lemmas():
    with criterion(8, "barrier lemmas on 30 stable polynomials and the full replay", 30):
        rng = random.Random(SEED)
        shifts = 0
        for n in range(30):
            p, z = random_stable_poly(rng)
            assert above_roots_probe(p, z, seed=n)
            pr = probe(p, z, seed=n)
            for phi, psi in zip(pr.phi, pr.psi):
                assert psi <= phi * phi + SLACK
            for i in range(p.m):
                for j in range(p.m):
                    mono, convex = monotone_convex_check(p, z, i, j, F(1, 2))
                    assert mono and convex
                    try:
                        lhs, rhs = ratio_lemma_values(p, z, i, j)
                    except DegenerateDirection:
                        continue
                    assert lhs <= rhs + SLACK
                for delta in (F(1), F(4), F(16)):
                    try:
                        rep = shift_lemma_check(p, z, i, delta, probes=32, seed=n)
                    except HypothesisNotMet:
                        continue
                    shifts += 1
                    assert rep.ok
        assert shifts > 0
        tri = WeightedGraph.from_edges([(0, 1), (1, 2), (0, 2)])
        rep = replay(lambda_tree_distribution(tri, [1, 1, 1]), edge_vectors(tri).system)
        assert rep.phi_ok and rep.above_ok
        assert rep.final_point >= rep.mixed_root


CLI_RUNS = [
    ["verify-identity", "--random", "--trials", "5", "--seed", "11"],
    ["descend", "--dist", "pair.json", "--vectors", "pair.vec"],
    ["certificate", "--dist", "ust_triangle.json", "--vectors", "triangle_incidence.vec", "--whiten"],
    ["thintree", "k4.el", "--seed", "3", "--D", "k4_d.mat"],
    ["thintree", "k4.el", "--seed", "3", "--budget", "3", "--samples", "40"],
    ["resistance", "k4.el"],
    ["ksr", "pairs.vec", "--r", "2"],
    ["maxent", "--graph", "triangle.el", "--target", "0.8,0.6,0.6"],
    ["sample", "--dist", "ust_triangle.json", "--count", "25", "--seed", "9"],
]


def test_criterion_9_determinism(tmp_path):
    with criterion(9, "repeated CLI runs with the same seed give byte-identical JSON", 5):
        for n, argv in enumerate(CLI_RUNS):
            argv = [str(FIXTURES / a) if (FIXTURES / a).is_file() else a for a in argv]
            blobs = []
            for rep in range(2):
                out = tmp_path / f"{n}-{rep}.json"
                assert cli_main(argv + ["--out", str(out)]) == 0
                blobs.append(out.read_bytes())
            assert blobs[0] == blobs[1]
            json.loads(blobs[0])


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
