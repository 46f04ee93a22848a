"""Maximum-entropy weights for determinantal measures on bases.

Given a target point x of the basis polytope, find lambda > 0 such that the
measure mu_lambda(T) ~ det(sum_{i in T} lambda_i v_i v_i^T) has marginals x.
The dual objective in gamma = log lambda is

    f(gamma) = log det B(e^gamma) - <gamma, x>,   B(lam) = sum_i lam_i v_i v_i^T

whose gradient is (leverage scores - x).  It is convex and flat along the
all-ones direction (sum x = d), so iterates are kept centred.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import BoundaryOrInfeasible, InvalidInput, NumericalFailure, RankDeficient
from .stablepoly import linalg as la
from .stablepoly.vectors import VectorSystem

DRIFT_LIMIT = 50.0
ARMIJO = 0.3
SHRINK = 0.5


@dataclass(frozen=True)
class BasisPolytopePoint:
    x: tuple[float, ...]
    d: int
    boundary_risk: bool = False

    def __post_init__(self):
        if any(v < -1e-12 or v > 1 + 1e-12 for v in self.x):
            raise InvalidInput("basis polytope coordinates must lie in [0, 1]")
        if abs(sum(self.x) - self.d) > 1e-9:
            raise InvalidInput(f"coordinates sum to {sum(self.x)}, expected the basis size {self.d}")

    @property
    def max_coord(self) -> float:
        return max(self.x)


@dataclass
class MaxEntModel:
    gamma: list[float]
    lam: list[float]
    target: list[float]
    residual: float
    iterations: int
    objective_trace: list[float] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "gamma": self.gamma,
            "lambda": self.lam,
            "target": self.target,
            "residual": self.residual,
            "iterations": self.iterations,
        }


def interior_point(
    bases: Sequence[Sequence[int]],
    m: int,
    eps: float,
    all_bases: Sequence[Sequence[int]] | None = None,
    x1: Sequence[float] | None = None,
) -> BasisPolytopePoint:
    """(1 - eps) * average of k disjoint bases + eps * x1.

    x1 defaults to the barycentre of ``all_bases``; callers that know the
    barycentre in closed form (uniform spanning-tree marginals) may pass it.
    """
    if not bases:
        raise InvalidInput("at least one basis is required")
    if not 0 <= eps <= 1:
        raise InvalidInput("eps must lie in [0, 1]")
    seen: set[int] = set()
    for b in bases:
        if seen & set(b):
            raise InvalidInput("bases are not disjoint")
        seen |= set(b)
    d = len(bases[0])
    k = len(bases)
    x0 = np.zeros(m)
    for b in bases:
        x0[list(b)] += 1.0 / k
    if x1 is None:
        if all_bases is None:
            raise InvalidInput("need all_bases or x1 to perturb into the interior")
        x1 = np.zeros(m)
        for b in all_bases:
            x1[list(b)] += 1.0 / len(all_bases)
    x = (1 - eps) * x0 + eps * np.asarray(x1, dtype=float)
    return BasisPolytopePoint(tuple(float(v) for v in x), d, boundary_risk=(eps == 0))


def _coords(vs: VectorSystem) -> np.ndarray:
    return np.array([[float(v) for v in c] for c in vs.coords], dtype=float)


def partition_function(vs: VectorSystem, lam: Sequence):
    """det(sum_i lam_i v_i v_i^T); exact when lam is rational, float otherwise."""
    if any((not isinstance(v, (int, Fraction))) for v in lam):
        c = _coords(vs)
        b = c.T @ (np.asarray(lam, dtype=float)[:, None] * c)
        val = float(np.linalg.det(b) * np.linalg.det(la.to_float(vs.metric_matrix())))
        if abs(val) < 1e-300:
            raise RankDeficient("B(lambda) is singular")
        return val
    if any(v <= 0 for v in lam):
        raise InvalidInput("weights must be positive")
    val = la.det(vs.frame(range(vs.m), list(lam)))
    if val == 0:
        raise RankDeficient("B(lambda) is singular")
    return val


def _leverage(c: np.ndarray, lam: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    b = c.T @ (lam[:, None] * c)
    try:
        binv = np.linalg.inv(b)
    except np.linalg.LinAlgError as exc:
        raise RankDeficient("B(lambda) is singular") from exc
    if not np.all(np.isfinite(binv)) or np.linalg.cond(b) > 1e15:
        raise RankDeficient("B(lambda) is numerically singular")
    k = c @ binv @ c.T
    return lam * np.diag(k), k


def maxent_marginals(vs: VectorSystem, lam: Sequence[float]) -> np.ndarray:
    """Leverage scores lam_i v_i^T B(lam)^{-1} v_i (the metric cancels)."""
    lam = np.asarray([float(v) for v in lam])
    if np.any(lam <= 0):
        raise InvalidInput("weights must be positive")
    lev, _ = _leverage(_coords(vs), lam)
    return lev


def _objective(c: np.ndarray, gamma: np.ndarray, x: np.ndarray) -> float:
    b = c.T @ (np.exp(gamma)[:, None] * c)
    sign, logdet = np.linalg.slogdet(b)
    if sign <= 0:
        return math.inf
    return float(logdet - gamma @ x)


def _residual(c: np.ndarray, gamma: np.ndarray, x: np.ndarray) -> float:
    try:
        lev, _ = _leverage(c, np.exp(gamma))
    except RankDeficient:
        return math.inf
    return float(np.max(np.abs(lev - x)))


def _facet_check(c: np.ndarray, x: np.ndarray, d: int) -> None:
    if abs(x.sum() - d) > 1e-9:
        raise BoundaryOrInfeasible(f"target sums to {x.sum()}, but bases have size {d}")
    lev, _ = _leverage(c, np.ones(len(x)))
    for i, (xi, li) in enumerate(zip(x, lev)):
        loop = not np.any(c[i])
        coloop = abs(li - 1) < 1e-12
        if (xi >= 1 - 1e-12 and not coloop) or (xi <= 1e-12 and not loop) or xi < 0 or xi > 1:
            raise BoundaryOrInfeasible(f"target coordinate {i} = {xi} lies on a facet of the basis polytope")


def fit_lambda(vs: VectorSystem, target, tol: float = 1e-8, max_iter: int = 200) -> MaxEntModel:
    """Damped Newton on the dual with Armijo backtracking."""
    x = np.asarray(target.x if isinstance(target, BasisPolytopePoint) else target, dtype=float)
    if len(x) != vs.m:
        raise InvalidInput("target length must match the number of vectors")
    c = _coords(vs)
    d = vs.d
    _facet_check(c, x, d)
    gamma = np.zeros(vs.m)
    trace = [_objective(c, gamma, x)]
    iterations = 0
    while True:
        lam = np.exp(gamma)
        lev, k = _leverage(c, lam)
        grad = lev - x
        residual = float(np.max(np.abs(grad)))
        if residual <= tol:
            break
        if iterations >= max_iter:
            if np.max(np.abs(gamma)) > DRIFT_LIMIT / 2:
                raise BoundaryOrInfeasible("iteration cap hit with dual variables drifting")
            raise NumericalFailure(f"max-entropy fit stalled at residual {residual:.3e}")
        iterations += 1
        scaled = np.sqrt(lam)
        hess = np.diag(lev) - (scaled[:, None] * k * scaled[None, :]) ** 2
        step, *_ = np.linalg.lstsq(hess, -grad, rcond=1e-12)
        slope = float(grad @ step)
        if not np.all(np.isfinite(step)) or slope >= 0:
            # singular or indefinite Newton system: plain gradient step
            step, slope = -grad, -float(grad @ grad)
        t = 1.0
        f0 = trace[-1]
        while True:
            cand = gamma + t * step
            cand -= cand.mean()
            fc = _objective(c, cand, x)
            if fc <= f0 + ARMIJO * t * slope:
                break
            # near the optimum f changes below double precision; fall back to the gradient norm
            if fc <= f0 + 1e-12 * (1 + abs(f0)) and _residual(c, cand, x) < residual:
                break
            t *= SHRINK
            if t < 1e-16:
                raise NumericalFailure(f"line search failed at residual {residual:.3e}")
        gamma = cand
        trace.append(fc)
        if np.max(np.abs(gamma)) > DRIFT_LIMIT:
            raise BoundaryOrInfeasible("dual variables diverge; target is not in the relative interior")
    lam = np.exp(gamma - gamma.mean())
    return MaxEntModel(
        gamma=[float(g + 1.0 / d) for g in np.log(lam)],
        lam=[float(v) for v in lam],
        target=[float(v) for v in x],
        residual=residual,
        iterations=iterations,
        objective_trace=trace,
    )


def relative_entropy(p: dict, q: dict) -> float:
    """sum_T p(T) log(p(T)/q(T)) over dict-keyed distributions."""
    total = 0.0
    for k, pv in p.items():
        pv = float(pv)
        if pv > 0:
            total += pv * math.log(pv / float(q[k]))
    return total
