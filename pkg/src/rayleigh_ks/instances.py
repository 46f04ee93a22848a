"""Seeded random instances for property runs and the acceptance suite."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import NoBasis
from .graphlab import WeightedGraph
from .measures import SubsetDistribution, lambda_tree_distribution, product_lift
from .stablepoly import linalg as la
from .stablepoly.multivariate import MPoly, det_poly
from .stablepoly.vectors import VectorSystem

LIFT_SHAPES = ((2, 2), (3, 2), (2, 3))


@dataclass
class Instance:
    kind: str
    dist: SubsetDistribution
    vs: VectorSystem


def random_rational(rng: random.Random, span: int = 3, den: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_vectors(rng: random.Random, m: int, d: int, spanning: bool = False) -> VectorSystem:
    for _ in range(100):
        vs = VectorSystem.from_vectors([[random_rational(rng) for _ in range(d)] for _ in range(m)], d)
        if not spanning or vs.spans():
            return vs
    raise NoBasis("could not draw a spanning system")


def random_connected_graph(rng: random.Random, n_max: int = 5, m_max: int = 6) -> WeightedGraph:
    n = rng.randint(2, n_max)
    while True:
        order = list(range(n))
        rng.shuffle(order)
        edges = [(order[rng.randrange(i)], order[i]) for i in range(1, n)]
        extra = rng.randint(0, m_max - len(edges))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for _ in range(extra):
            edges.append(rng.choice(pairs))
        g = WeightedGraph.from_edges(edges, n)
        if g.is_connected():
            return g


def random_distribution(rng: random.Random, max_m: int = 6) -> tuple[str, SubsetDistribution]:
    kind = rng.choice(("ust", "lift", "point"))
    if kind == "ust":
        g = random_connected_graph(rng, 5, max_m)
        return kind, lambda_tree_distribution(g, [1] * g.m)
    if kind == "lift":
        m0, r = rng.choice(LIFT_SHAPES)
        return kind, product_lift(m0, r)
    m = rng.randint(1, max_m)
    k = rng.randint(1, m)
    return kind, SubsetDistribution.point_mass(m, rng.sample(range(m), k))


def random_instance(rng: random.Random, max_m: int = 6, max_d: int = 3) -> Instance:
    kind, dist = random_distribution(rng, max_m)
    d = rng.randint(1, max_d)
    return Instance(kind, dist, random_vectors(rng, dist.m, d))


def random_isotropic_instance(rng: random.Random, max_m: int = 6, max_d: int = 3) -> Instance:
    """Same distributions, vectors whitened into exact isotropic position."""
    kind, dist = random_distribution(rng, max_m)
    d = rng.randint(1, min(max_d, dist.m))
    return Instance(kind, dist, random_vectors(rng, dist.m, d, spanning=True).whiten())


def instances(seed: int, count: int, isotropic: bool = False) -> list[Instance]:
    rng = random.Random(seed)
    make = random_isotropic_instance if isotropic else random_instance
    return [make(rng) for _ in range(count)]


def random_stable_poly(rng: random.Random, m: int | None = None) -> tuple[MPoly, list[Fraction]]:
    """A real stable polynomial with a point above its roots.

    Either a product of linear forms with nonnegative coefficients, or
    det(sum_i z_i A_i) with A_i PSD and A_0 positive definite.
    """
    m = m or rng.randint(2, 3)
    if rng.random() < 0.5:
        p = MPoly.constant(m, 1)
        offsets = []
        for _ in range(rng.randint(1, 3)):
            coeffs = [Fraction(rng.randint(0, 3), rng.randint(1, 2)) for _ in range(m)]
            if not any(coeffs):
                coeffs[rng.randrange(m)] = Fraction(1)
            const = random_rational(rng)
            p = p * MPoly.linear(coeffs, const)
            offsets.append((coeffs, const))
        # a diagonal point where every form is positive
        s = Fraction(1)
        while any(sum(a * s for a in c) + k <= 0 for c, k in offsets):
            s *= 2
        return p, [s + Fraction(rng.randint(0, 4), 4) for _ in range(m)]
    k = rng.randint(2, 3)
    mats = []
    for i in range(m):
        vecs = [[random_rational(rng) for _ in range(k)] for _ in range(rng.randint(1, k))]
        a = la.zeros(k, k)
        for v in vecs:
            a = la.madd(a, la.outer(v, v))
        if i == 0:
            a = la.madd(a, la.identity(k))
        mats.append(a)
    entries = [[MPoly.linear([mats[i][r][c] for i in range(m)]) for c in range(k)] for r in range(k)]
    return det_poly(entries), [Fraction(rng.randint(1, 8), 2) for _ in range(m)]
