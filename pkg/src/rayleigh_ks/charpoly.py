"""Mixed characteristic polynomials and interlacing-family descent.

The mixed characteristic polynomial of a homogeneous measure mu and vectors
v_1..v_m is  E_{S~mu} det(x^2 I - 2 sum_{i in S} v_i v_i^T).  It is computed
three independent ways (enumeration, the differential-operator pipeline, the
sigma_k closed form) and the three are required to agree exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .barrier import bound_report
from .errors import InternalConsistency, InvalidInput, NumericalFailure, PreconditionViolation
from .measures import DEFAULT_BUDGET, SubsetDistribution, is_homogeneous, marginals, product_lift
from .stablepoly import linalg as la
from .stablepoly.multivariate import elements_of, mask_of
from .stablepoly.ops import (
    apply_one_minus_dzz,
    cauchy_binet_expand,
    generating_poly,
    restrict_zero,
    shift_diagonal,
    zx_mul,
)
from .stablepoly.univariate import (
    UnivariatePoly,
    compare_largest_roots,
    is_real_rooted,
    largest_root_interval,
    max_real_root,
)
from .stablepoly.vectors import VectorSystem

ROOT_TOL = 1e-12
OPERATOR_CHECK_LIMIT = 10


@dataclass(frozen=True)
class MixedCharPoly:
    poly: UnivariatePoly
    d_mu: int
    d: int
    real_rooted: bool
    max_root: float | None

    @classmethod
    def build(cls, poly: UnivariatePoly, d_mu: int, d: int) -> "MixedCharPoly":
        rr = is_real_rooted(poly)
        return cls(poly, d_mu, d, rr, max_real_root(poly, ROOT_TOL) if rr else None)


@dataclass
class DescentStep:
    element: int
    bit: int
    forced: bool
    parent_root: float
    child_root: float
    decomposition_exact: bool = True


@dataclass
class SubsetCertificate:
    set: tuple[int, ...]
    spectral_norm: float
    mixed_root: float
    bound: float
    eps1: float
    eps2: float
    barrier_bound: float
    subset_root: float = 0.0
    steps: list[DescentStep] = field(default_factory=list)

    @property
    def bound_holds(self) -> bool:
        return self.spectral_norm <= self.bound + 1e-9

    @property
    def barrier_holds(self) -> bool:
        return self.mixed_root <= self.barrier_bound + 1e-9

    def to_json(self) -> dict:
        return {
            "set": list(self.set),
            "spectral_norm": self.spectral_norm,
            "mixed_root": self.mixed_root,
            "bound": self.bound,
            "eps1": self.eps1,
            "eps2": self.eps2,
            "barrier_bound": self.barrier_bound,
        }


def _check_inputs(dist: SubsetDistribution, vs: VectorSystem) -> int:
    homog, d_mu = is_homogeneous(dist)
    if not homog:
        raise PreconditionViolation("mixed characteristic polynomials need a homogeneous distribution")
    if dist.m != vs.m:
        raise InvalidInput(f"distribution has {dist.m} elements but there are {vs.m} vectors")
    return d_mu


def subset_poly(vs: VectorSystem, subset: Sequence[int]) -> UnivariatePoly:
    """det(x^2 I - 2 sum_{i in S} v_i v_i^T)."""
    return vs.char_poly(subset, 2).compose_square()


def mixed_enum(dist: SubsetDistribution, vs: VectorSystem) -> MixedCharPoly:
    d_mu = _check_inputs(dist, vs)
    total = UnivariatePoly()
    for mask, p in dist.support.items():
        total = total + subset_poly(vs, elements_of(mask)) * p
    return MixedCharPoly.build(total, d_mu, vs.d)


def operator_side(dist: SubsetDistribution, vs: VectorSystem) -> UnivariatePoly:
    """prod_i (1 - d^2/dz_i^2) [g(x1 + z) det(xI + sum z_i v_i v_i^T)] at z = 0."""
    p = zx_mul(shift_diagonal(generating_poly(dist)), cauchy_binet_expand(vs))
    for i in range(dist.m):
        p = apply_one_minus_dzz(p, i)
    return restrict_zero(p)


def _align(enum_side: UnivariatePoly, other: UnivariatePoly, d_mu: int, d: int) -> bool:
    return enum_side.shift_degree(max(0, d_mu - d)) == other.shift_degree(max(0, d - d_mu))


def mixed_operator(dist: SubsetDistribution, vs: VectorSystem, check: bool = True) -> MixedCharPoly:
    d_mu = _check_inputs(dist, vs)
    rhs = operator_side(dist, vs)
    poly = rhs.shift_degree(d - d_mu) if (d := vs.d) >= d_mu else rhs.shift_degree(-(d_mu - d))
    if check:
        enum = mixed_enum(dist, vs).poly
        if not _align(enum, rhs, d_mu, d):
            raise InternalConsistency("operator identity failed: enumeration and operator sides differ")
    return MixedCharPoly.build(poly, d_mu, d)


def closed_form_side(dist: SubsetDistribution, vs: VectorSystem) -> UnivariatePoly:
    """sum_k (-1)^k 2^k x^{d_mu+d-2k} sum_{|S|=k} P[S in T] sigma_k(sum_S v v^T)."""
    d_mu = _check_inputs(dist, vs)
    d = vs.d
    g = vs.gram()
    total = UnivariatePoly()
    for k in range(0, min(d, d_mu) + 1):
        coeff = Fraction(0)
        for s in combinations(range(vs.m), k):
            incl = dist.inclusion_prob(s) if k else Fraction(1)
            if incl:
                coeff += incl * (la.det(la.submatrix(g, list(s))) if k else 1)
        total = total + UnivariatePoly.monomial(d_mu + d - 2 * k, (-2) ** k * coeff)
    return total


def mixed_closed_form(dist: SubsetDistribution, vs: VectorSystem) -> MixedCharPoly:
    d_mu = _check_inputs(dist, vs)
    d = vs.d
    cf = closed_form_side(dist, vs)
    poly = cf.shift_degree(d - d_mu)
    return MixedCharPoly.build(poly, d_mu, d)


def verify_identity(dist: SubsetDistribution, vs: VectorSystem) -> dict:
    """All three routes, aligned; raises InternalConsistency on any mismatch."""
    d_mu = _check_inputs(dist, vs)
    d = vs.d
    enum = mixed_enum(dist, vs)
    op = operator_side(dist, vs)
    cf = closed_form_side(dist, vs)
    ok_op = _align(enum.poly, op, d_mu, d)
    ok_cf = _align(enum.poly, cf, d_mu, d)
    if not (ok_op and ok_cf):
        raise InternalConsistency(
            f"identity mismatch (operator {'ok' if ok_op else 'FAILED'}, closed form {'ok' if ok_cf else 'FAILED'})"
        )
    return {
        "enum": enum.poly,
        "operator": op.shift_degree(d - d_mu) if d >= d_mu else op.shift_degree(-(d_mu - d)),
        "closed_form": cf.shift_degree(d - d_mu),
        "real_rooted": enum.real_rooted,
        "max_root": enum.max_root,
    }


def _root_float(p: UnivariatePoly, tol: float) -> float:
    iv = largest_root_interval(p, width=Fraction(tol))
    if iv is None:
        return -math.inf
    return float((iv[0] + iv[1]) / 2)


def _epsilons(dist: SubsetDistribution, vs: VectorSystem) -> tuple[Fraction, Fraction]:
    return max(marginals(dist), default=Fraction(0)), vs.eps2


def descend(dist: SubsetDistribution, vs: VectorSystem, tol: float = 1e-9, cross_check: bool = True) -> SubsetCertificate:
    """Walk the conditioning tree element by element, keeping a child whose largest
    root does not exceed its parent's (bit 0 wins ties)."""
    d_mu = _check_inputs(dist, vs)
    family = {mask: subset_poly(vs, elements_of(mask)) * p for mask, p in dist.support.items()}
    parent = sum(family.values(), UnivariatePoly())
    if cross_check and dist.m <= OPERATOR_CHECK_LIMIT:
        if not _align(parent, operator_side(dist, vs), d_mu, vs.d):
            raise InternalConsistency("operator identity failed at the root of the descent")
    root_poly = parent
    root_value = _root_float(root_poly, ROOT_TOL)
    steps: list[DescentStep] = []
    for i in range(dist.m):
        bit_i = 1 << i
        with_i = {k: q for k, q in family.items() if k & bit_i}
        without_i = {k: q for k, q in family.items() if not k & bit_i}
        parent_root = _root_float(parent, ROOT_TOL)
        if not with_i or not without_i:
            bit = 1 if with_i else 0
            steps.append(DescentStep(i, bit, True, parent_root, parent_root))
            continue
        f0 = sum(without_i.values(), UnivariatePoly())
        f1 = sum(with_i.values(), UnivariatePoly())
        exact = f0 + f1 == parent
        if not exact:
            raise InternalConsistency(f"branch decomposition failed at element {i}")
        if compare_largest_roots(f0, parent) <= 0:
            bit, child = 0, f0
        elif compare_largest_roots(f1, parent) <= 0:
            bit, child = 1, f1
        else:
            r0, r1 = _root_float(f0, ROOT_TOL), _root_float(f1, ROOT_TOL)
            if min(r0, r1) > parent_root + tol:
                raise NumericalFailure(f"neither branch at element {i} keeps the largest root (tol {tol})")
            bit, child = (0, f0) if r0 <= r1 else (1, f1)
        steps.append(DescentStep(i, bit, False, parent_root, _root_float(child, ROOT_TOL), exact))
        family = with_i if bit else without_i
        parent = child
    (mask,) = family.keys()
    chosen = tuple(elements_of(mask))
    q_root = _root_float(family[mask], ROOT_TOL)
    if q_root > root_value + tol:
        raise NumericalFailure("descent ended above the largest root of the mixed polynomial")
    eps1, eps2 = _epsilons(dist, vs)
    rep = bound_report(float(eps1), float(eps2))
    return SubsetCertificate(
        set=chosen,
        spectral_norm=vs.spectral_norm(chosen) if chosen else 0.0,
        mixed_root=root_value,
        bound=rep.eigen_bound,
        eps1=float(eps1),
        eps2=float(eps2),
        barrier_bound=rep.x_root_bound,
        subset_root=q_root,
        steps=steps,
    )


def main_certificate(dist: SubsetDistribution, vs: VectorSystem, tol: float = 1e-9) -> SubsetCertificate:
    """Descent plus the bound checks: norm <= 4e + 2e^2 and mixed root <= 2 sqrt(2e + e^2)."""
    _check_inputs(dist, vs)
    defect = vs.isotropy_defect()
    if defect > 1e-10:
        raise PreconditionViolation(f"vectors are not in isotropic position (defect {defect:.3e})")
    cert = descend(dist, vs, tol)
    if cert.spectral_norm > cert.bound + tol or cert.mixed_root > cert.barrier_bound + tol:
        raise NumericalFailure(
            f"bound violated: norm {cert.spectral_norm} vs {cert.bound}, root {cert.mixed_root} vs {cert.barrier_bound}"
        )
    return cert


@dataclass
class KSRPartition:
    parts: list[list[int]]
    norms: list[float]
    bound: float
    eps: float
    certificate: SubsetCertificate

    def to_json(self) -> dict:
        return {"parts": self.parts, "norms": self.norms, "bound": self.bound, "eps": self.eps}


def ksr_partition(vs: VectorSystem, r: int, tol: float = 1e-9, budget: int = DEFAULT_BUDGET) -> KSRPartition:
    """r-partition with every part of norm <= 4(1/r + eps) + 2(1/r + eps)^2, via the lifted descent."""
    if r < 2:
        raise InvalidInput("r must be at least 2")
    defect = vs.isotropy_defect()
    if defect > 1e-10:
        raise PreconditionViolation(f"vectors are not in isotropic position (defect {defect:.3e})")
    dist = product_lift(vs.m, r, budget)
    lifted = vs.lift(r)
    cert = descend(dist, lifted, tol)
    parts: list[list[int]] = [[] for _ in range(r)]
    for e in cert.set:
        i, j = divmod(e, r)
        parts[j].append(i)
    if sorted(i for p in parts for i in p) != list(range(vs.m)):
        raise InternalConsistency("lifted set does not assign every vector exactly once")
    eps = float(vs.eps2)
    a = 1 / r + eps
    bound = 4 * a + 2 * a * a
    norms = [vs.spectral_norm(p) if p else 0.0 for p in parts]
    if max(norms) > bound + tol:
        raise NumericalFailure(f"partition norm {max(norms)} exceeds {bound}")
    return KSRPartition(parts, norms, bound, eps, cert)
