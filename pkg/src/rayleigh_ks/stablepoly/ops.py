"""Polynomial pipeline operations: generating polynomials, the diagonal shift,
the Cauchy-Binet determinant expansion, products, the 1 - d^2/dz_i^2 operator
and restriction to z = 0."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from ..errors import InvalidDistribution, InvalidInput, UnsupportedDegree
from . import linalg as la
from .multivariate import MultiAffinePoly, ZXPoly, elements_of, mask_of
from .univariate import UnivariatePoly
from .vectors import VectorSystem


def generating_poly(dist) -> MultiAffinePoly:
    """g(z) = sum_S mu(S) z^S for an explicit-support distribution."""
    total = Fraction(0)
    for mask, p in dist.support.items():
        if p < 0:
            raise InvalidDistribution(f"negative probability on {elements_of(mask)}")
        total += p
    if total != 1:
        raise InvalidDistribution(f"probabilities sum to {total}, not 1")
    return MultiAffinePoly(dist.m, dict(dist.support))


def shift_diagonal(p: MultiAffinePoly) -> ZXPoly:
    """g(z_1 + x, ..., z_m + x), expanded."""
    m = p.m
    acc: dict[tuple[int, ...], UnivariatePoly] = {}
    for mask, c in p.terms.items():
        elems = elements_of(mask)
        k = len(elems)
        for size in range(k + 1):
            xpow = UnivariatePoly.monomial(k - size, c)
            for keep in combinations(elems, size):
                e = [0] * m
                for i in keep:
                    e[i] = 1
                key = tuple(e)
                acc[key] = acc[key] + xpow if key in acc else xpow
    return ZXPoly(m, acc)


def cauchy_binet_expand(vs: VectorSystem) -> ZXPoly:
    """det(xI + sum_i z_i v_i v_i^T) = sum_k x^{d-k} sum_{|S|=k} z^S sigma_k(sum_{i in S} v_i v_i^T)."""
    m, d = vs.m, vs.d
    g = vs.gram()
    acc: dict[tuple[int, ...], UnivariatePoly] = {}
    for k in range(min(d, m) + 1):
        for s in combinations(range(m), k):
            sigma = la.det(la.submatrix(g, list(s))) if k else Fraction(1)
            if sigma:
                e = [0] * m
                for i in s:
                    e[i] = 1
                acc[tuple(e)] = UnivariatePoly.monomial(d - k, sigma)
    return ZXPoly(m, acc)


def zx_mul(p: ZXPoly, q: ZXPoly) -> ZXPoly:
    """Exact product of two multi-affine ZXPolys (result per-variable degree <= 2)."""
    if p.m != q.m:
        raise InvalidInput("variable count mismatch")
    if not (p.is_multi_affine() and q.is_multi_affine()):
        raise UnsupportedDegree("zx_mul needs multi-affine factors")
    acc: dict[tuple[int, ...], UnivariatePoly] = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            prod = c1 * c2
            acc[e] = acc[e] + prod if e in acc else prod
    return ZXPoly(p.m, acc)


def apply_one_minus_dzz(p: ZXPoly, i: int) -> ZXPoly:
    """p - d^2 p / dz_i^2."""
    if not 0 <= i < p.m:
        raise InvalidInput(f"variable index {i} out of range")
    acc: dict[tuple[int, ...], UnivariatePoly] = dict(p.terms)
    for e, c in p.terms.items():
        if e[i] == 2:
            ne = list(e)
            ne[i] = 0
            key = tuple(ne)
            term = c * -2
            acc[key] = acc[key] + term if key in acc else term
    return ZXPoly(p.m, acc)


def restrict_zero(p: ZXPoly) -> UnivariatePoly:
    return p.coefficient((0,) * p.m)


def char_poly_x2(matrix) -> UnivariatePoly:
    """det(x^2 I - M) for a square rational matrix."""
    a = la.as_matrix(matrix)
    if not la.is_square(a):
        raise InvalidInput("char_poly_x2 needs a square matrix")
    return UnivariatePoly(la.char_poly_coeffs(a)).compose_square()


def stability_falsifier(p: MultiAffinePoly, samples: int = 200, seed: int = 0) -> bool:
    """False if the multi-affine Rayleigh difference d_i p d_j p - p d_i d_j p
    goes negative at a sampled real point (then p is certainly not real stable).

    The origin and the all-ones point are always probed before random ones.
    """
    if not p.terms:
        raise InvalidInput("stability_falsifier needs a nonzero polynomial")
    m = p.m
    rng = random.Random(seed)
    points = [[Fraction(0)] * m, [Fraction(1)] * m]
    for _ in range(samples):
        points.append([Fraction(rng.randint(-40, 40), rng.randint(1, 8)) for _ in range(m)])
    pairs = [(i, j) for i in range(m) for j in range(i + 1, m)]
    partials = {}
    for i, j in pairs:
        di, dj = p.diff(i), p.diff(j)
        partials[(i, j)] = (di, dj, di.diff(j))
    for z in points:
        val = p.evaluate(z)
        for i, j in pairs:
            di, dj, dij = partials[(i, j)]
            if di.evaluate(z) * dj.evaluate(z) - val * dij.evaluate(z) < 0:
                return False
    return True


def mask_exps(mask: int, m: int) -> tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(m))


__all__ = [
    "generating_poly",
    "shift_diagonal",
    "cauchy_binet_expand",
    "zx_mul",
    "apply_one_minus_dzz",
    "restrict_zero",
    "char_poly_x2",
    "stability_falsifier",
    "mask_of",
]
