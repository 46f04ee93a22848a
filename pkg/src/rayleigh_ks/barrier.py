"""Barrier functions and the above-roots machinery.

For a polynomial p and a point z with p(z) != 0,

    Phi^i_p(z) = d_i p(z) / p(z),     Psi^i_p(z) = d_i^2 p(z) / p(z).

All values are computed from exact univariate or bivariate restrictions, so a
rational polynomial at a rational point yields rational answers.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    AtRoot,
    DegenerateDirection,
    HypothesisNotMet,
    InternalConsistency,
    InvalidInput,
    PreconditionViolation,
)
from .stablepoly.multivariate import MPoly, MultiAffinePoly
from .stablepoly.univariate import UnivariatePoly

SLACK = Fraction(1, 10**10)
RAY_MAGNITUDES = (Fraction(1, 2), Fraction(2), Fraction(10))


def _mpoly(p) -> MPoly:
    if isinstance(p, MPoly):
        return p
    if isinstance(p, MultiAffinePoly):
        return p.to_mpoly()
    raise InvalidInput(f"unsupported polynomial type {type(p).__name__}")


def _point(z: Sequence) -> list[Fraction]:
    return [v if isinstance(v, Fraction) else Fraction(v) for v in z]


@dataclass
class BarrierProbe:
    point: list[float]
    phi: list[Fraction]
    psi: list[Fraction]
    above_roots: bool

    def to_json(self, ok: bool | None = None) -> dict:
        out = {
            "point": [float(v) for v in self.point],
            "phi": [float(v) for v in self.phi],
            "psi": [float(v) for v in self.psi],
        }
        out["ok"] = self.above_roots if ok is None else ok
        return out


@dataclass(frozen=True)
class BoundReport:
    eps1: float
    eps2: float
    eps: float
    t: float
    delta: float
    x_root_bound: float
    eigen_bound: float

    @property
    def phi(self) -> float:
        return self.eps / self.t if self.t else 0.0


def bound_report(eps1: float, eps2: float) -> BoundReport:
    """t = delta = sqrt(2e + e^2) with e = eps1 + eps2; x-root bound t + delta, eigenvalue bound 4e + 2e^2."""
    if eps1 < 0 or eps2 < 0:
        raise InvalidInput("epsilons must be nonnegative")
    eps = eps1 + eps2
    t = math.sqrt(2 * eps + eps * eps)
    rep = BoundReport(eps1, eps2, eps, t, t, 2 * t, 4 * eps + 2 * eps * eps)
    if eps > 0:
        phi = eps / t
        if abs((2 / t) * phi + phi * phi - 1) > 1e-12:
            raise InternalConsistency("barrier schedule invariant failed")
    return rep


def phi_psi(p, z: Sequence, i: int) -> tuple[Fraction, Fraction]:
    p = _mpoly(p)
    if not 0 <= i < p.m:
        raise InvalidInput(f"direction {i} out of range")
    z = _point(z)
    q = p.restrict(z, i)
    val = q.eval(z[i])
    if val == 0:
        raise AtRoot(f"p vanishes at {[float(v) for v in z]}")
    return q.derivative().eval(z[i]) / val, q.derivative(2).eval(z[i]) / val


def d_phi(p, z: Sequence, i: int, j: int) -> Fraction:
    """d/dz_j of Phi^i_p at z: (p_ij p - p_i p_j) / p^2."""
    p = _mpoly(p)
    z = _point(z)
    val = p.evaluate(z)
    if val == 0:
        raise AtRoot("p vanishes at the point")
    pi, pj, pij = p.diff(i).evaluate(z), p.diff(j).evaluate(z), p.diff(i).diff(j).evaluate(z)
    return (pij * val - pi * pj) / (val * val)


def above_roots_probe(p, z: Sequence, probes: int = 200, seed: int = 0) -> bool:
    """One-sided: False certifies z is not above the roots; True means no probe found a violation."""
    p = _mpoly(p)
    z = _point(z)
    if p.evaluate(z) <= 0:
        return False
    for i in range(p.m):
        for mag in RAY_MAGNITUDES:
            w = list(z)
            w[i] += mag
            if p.evaluate(w) <= 0:
                return False
    rng = random.Random(seed)
    for _ in range(probes):
        w = [zi + Fraction(rng.randint(0, 64), rng.choice((1, 4, 16))) for zi in z]
        if p.evaluate(w) <= 0:
            return False
    return True


def probe(p, z: Sequence, probes: int = 200, seed: int = 0) -> BarrierProbe:
    p = _mpoly(p)
    above = above_roots_probe(p, z, probes, seed)
    pairs = [phi_psi(p, z, i) for i in range(p.m)]
    return BarrierProbe([float(v) for v in z], [a for a, _ in pairs], [b for _, b in pairs], above)


@dataclass
class ShiftReport:
    hypothesis: Fraction
    phi_before: list[Fraction]
    phi_after: list[Fraction]
    above_roots_after: bool

    @property
    def ok(self) -> bool:
        monotone = all(a <= b + SLACK for a, b in zip(self.phi_after, self.phi_before))
        return monotone and self.above_roots_after


def shift_lemma_check(p, z: Sequence, j: int, delta, probes: int = 200, seed: int = 0) -> ShiftReport:
    """If (2/delta) Phi^j + (Phi^j)^2 <= 1, then p - d_j^2 p has Phi^i at z + delta e_j no larger than Phi^i_p(z)."""
    p = _mpoly(p)
    z = _point(z)
    delta = Fraction(delta)
    if delta <= 0:
        raise InvalidInput("delta must be positive")
    if not above_roots_probe(p, z, probes, seed):
        raise PreconditionViolation("starting point is not above the roots")
    phi_j, _ = phi_psi(p, z, j)
    hyp = 2 / delta * phi_j + phi_j * phi_j
    if hyp > 1:
        raise HypothesisNotMet(f"(2/delta) Phi + Phi^2 = {float(hyp):.6g} > 1")
    q = p.one_minus_dzz(j)
    w = list(z)
    w[j] += delta
    before = [phi_psi(p, z, i)[0] for i in range(p.m)]
    after = [phi_psi(q, w, i)[0] for i in range(p.m)]
    return ShiftReport(hyp, before, after, above_roots_probe(q, w, probes, seed))


def ratio_lemma_values(p, z: Sequence, i: int, j: int) -> tuple[Fraction, Fraction]:
    """(d_i Psi^j / d_i Phi^j, 2 Phi^j) at z."""
    p = _mpoly(p)
    z = _point(z)
    if i == j:
        q = p.restrict(z, i)
        x = z[i]
        v, d1, d2, d3 = (q.derivative(k).eval(x) for k in range(4))
        pi = pj = d1
        pij = pjj = d2
        pijj = d3
    else:
        r = p.restrict2(z, i, j)
        pt = [z[i], z[j]]
        v = r.evaluate(pt)
        pi, pj = r.diff(0).evaluate(pt), r.diff(1).evaluate(pt)
        pij = r.diff(0).diff(1).evaluate(pt)
        pjj = r.diff(1, 2).evaluate(pt)
        pijj = r.diff(0).diff(1, 2).evaluate(pt)
    if v == 0:
        raise AtRoot("p vanishes at the point")
    den = pij * v - pj * pi
    if den == 0:
        raise DegenerateDirection(f"d_{i} Phi^{j} vanishes")
    return (pijj * v - pjj * pi) / den, 2 * pj / v


def ratio_lemma_check(p, z: Sequence, i: int, j: int) -> bool:
    lhs, rhs = ratio_lemma_values(p, z, i, j)
    return lhs <= rhs + SLACK


def monotone_convex_check(p, z: Sequence, i: int, j: int, delta) -> tuple[bool, bool]:
    """Phi^i(z + delta e_j) <= Phi^i(z), and Phi^i(z + delta e_j) <= Phi^i(z) + delta * d_j Phi^i(z + delta e_j)."""
    z = _point(z)
    delta = Fraction(delta)
    w = list(z)
    w[j] += delta
    before = phi_psi(p, z, i)[0]
    after = phi_psi(p, w, i)[0]
    slope = d_phi(p, w, i, j)
    return after <= before + SLACK, after <= before + delta * slope + SLACK


def diagonal(p: MPoly) -> UnivariatePoly:
    """x -> p(x, ..., x)."""
    acc: dict[int, Fraction] = {}
    for e, c in p.terms.items():
        k = sum(e)
        acc[k] = acc.get(k, Fraction(0)) + c
    deg = max(acc, default=0)
    return UnivariatePoly([acc.get(k, Fraction(0)) for k in range(deg + 1)])


def barrier_polynomial(dist, vs) -> MPoly:
    """g_mu(y) * det(sum_i y_i v_i v_i^T), built from the same pieces as the operator pipeline."""
    from .stablepoly.ops import cauchy_binet_expand, generating_poly

    if dist.m != vs.m:
        raise InvalidInput("distribution and vector system sizes differ")
    return generating_poly(dist).to_mpoly() * cauchy_binet_expand(vs).at_x(0)


@dataclass
class ReplayReport:
    bounds: BoundReport
    steps: list[dict] = field(default_factory=list)
    final_point: float = 0.0
    mixed_root: float = 0.0
    phi_ok: bool = True
    above_ok: bool = True

    @property
    def ok(self) -> bool:
        return self.phi_ok and self.above_ok and self.final_point + 1e-10 >= self.mixed_root

    def to_json(self) -> dict:
        return {
            "eps": self.bounds.eps,
            "t": self.bounds.t,
            "delta": self.bounds.delta,
            "steps": self.steps,
            "final_point": self.final_point,
            "mixed_root": self.mixed_root,
            "ok": self.ok,
        }


def replay(dist, vs, probes: int = 64, seed: int = 0) -> ReplayReport:
    """Start at t*1, apply 1 - d^2/dy_k^2 and shift y_k by delta for each k in order."""
    from .charpoly import mixed_enum
    from .measures import is_homogeneous, marginals
    from .stablepoly.univariate import max_real_root

    if vs.isotropy_defect() > 1e-10:
        raise PreconditionViolation("the replay needs vectors in isotropic position")
    homog, d_mu = is_homogeneous(dist)
    if not homog:
        raise PreconditionViolation("the replay needs a homogeneous distribution")
    eps1 = float(max(marginals(dist), default=0))
    eps2 = float(vs.eps2)
    rep = bound_report(eps1, eps2)
    if rep.t == 0:
        raise InvalidInput("epsilon is zero; nothing to replay")
    t = Fraction(rep.t)
    delta = Fraction(rep.delta)
    cap = Fraction(rep.eps) / t + SLACK
    p = barrier_polynomial(dist, vs)
    z = [t] * p.m
    out = ReplayReport(rep)

    def record(poly: MPoly, point: list[Fraction], step: int) -> None:
        pr = probe(poly, point, probes, seed + step)
        phi_ok = all(v <= cap for v in pr.phi)
        out.phi_ok &= phi_ok
        out.above_ok &= pr.above_roots
        out.steps.append(pr.to_json(ok=phi_ok and pr.above_roots))

    record(p, z, 0)
    for k in range(p.m):
        p = p.one_minus_dzz(k)
        z[k] += delta
        record(p, z, k + 1)
    final = diagonal(p)
    enum = mixed_enum(dist, vs)
    # the diagonal of the fully reduced polynomial is x^{d_mu - d} times the mixed polynomial
    if final.shift_degree(max(0, vs.d - d_mu)) != enum.poly.shift_degree(max(0, d_mu - vs.d)):
        raise InternalConsistency("replay polynomial differs from the mixed characteristic polynomial")
    out.final_point = float(t + delta)
    out.mixed_root = enum.max_root if enum.max_root is not None else max_real_root(final)
    return out
