"""Explicit-support probability measures on subsets of a finite ground set."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import BudgetExceeded, EmptyCondition, InternalConsistency, InvalidDistribution, InvalidInput, NoBasis
from .stablepoly import linalg as la
from .stablepoly.multivariate import elements_of, mask_of, popcount
from .stablepoly.ops import generating_poly
from .stablepoly.vectors import VectorSystem

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class SubsetDistribution:
    """Probability measure with explicit support; subsets are bitmasks over range(m)."""

    m: int
    support: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if self.m > 64:
            raise InvalidInput("ground sets above 64 elements are not supported")
        clean = {}
        total = Fraction(0)
        for mask, p in self.support.items():
            p = la.to_fraction(p)
            if p < 0:
                raise InvalidDistribution(f"negative probability {p} on {elements_of(mask)}")
            if mask >> self.m:
                raise InvalidDistribution(f"set {elements_of(mask)} is outside the ground set of size {self.m}")
            total += p
            if p:
                clean[mask] = p
        if total != 1:
            raise InvalidDistribution(f"probabilities sum to {total}, not 1")
        object.__setattr__(self, "support", dict(sorted(clean.items())))

    @classmethod
    def from_sets(cls, m: int, pairs: Iterable[tuple[Iterable[int], object]]) -> "SubsetDistribution":
        sup: dict[int, Fraction] = {}
        for s, p in pairs:
            k = mask_of(s)
            sup[k] = sup.get(k, Fraction(0)) + la.to_fraction(p)
        return cls(m, sup)

    @classmethod
    def uniform(cls, m: int, sets: Sequence[Iterable[int]]) -> "SubsetDistribution":
        return cls.from_sets(m, [(s, Fraction(1, len(sets))) for s in sets])

    @classmethod
    def point_mass(cls, m: int, s: Iterable[int]) -> "SubsetDistribution":
        return cls(m, {mask_of(s): Fraction(1)})

    def sets(self) -> list[tuple[int, ...]]:
        return [tuple(elements_of(k)) for k in self.support]

    def prob(self, s: Iterable[int]) -> Fraction:
        return self.support.get(mask_of(s), Fraction(0))

    @property
    def degree(self) -> int | None:
        return is_homogeneous(self)[1]

    def inclusion_prob(self, s: Iterable[int]) -> Fraction:
        k = mask_of(s)
        return sum((p for mask, p in self.support.items() if mask & k == k), Fraction(0))

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "support": [{"set": elements_of(k), "p": str(p)} for k, p in self.support.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SubsetDistribution":
        try:
            return cls.from_sets(int(data["m"]), [(e["set"], Fraction(str(e["p"]))) for e in data["support"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidDistribution(f"malformed distribution JSON: {exc}") from exc


@dataclass(frozen=True)
class ConditioningPath:
    assignments: tuple[tuple[int, int], ...] = ()

    def extend(self, element: int, bit: int) -> "ConditioningPath":
        if self.assignments and element <= self.assignments[-1][0]:
            raise InvalidInput("conditioning path must be ordered by element index")
        return ConditioningPath(self.assignments + ((element, bit),))

    def apply(self, dist: SubsetDistribution) -> SubsetDistribution:
        for element, bit in self.assignments:
            dist = condition(dist, element, bit)
        return dist


def marginal(dist: SubsetDistribution, i: int) -> Fraction:
    """P[i in S], computed as a direct sum and as d g / d z_i at the all-ones point."""
    if not 0 <= i < dist.m:
        raise InvalidInput(f"element {i} out of range for m={dist.m}")
    bit = 1 << i
    direct = sum((p for k, p in dist.support.items() if k & bit), Fraction(0))
    via_poly = generating_poly(dist).diff(i).evaluate([1] * dist.m)
    if direct != via_poly:
        raise InternalConsistency("marginal disagrees with the generating-polynomial derivative")
    return direct


def marginals(dist: SubsetDistribution) -> list[Fraction]:
    out = [Fraction(0)] * dist.m
    for k, p in dist.support.items():
        for i in elements_of(k):
            out[i] += p
    return out


def condition(dist: SubsetDistribution, i: int, bit: int) -> SubsetDistribution:
    """Restrict to sets containing (bit=1) or avoiding (bit=0) element i, renormalized."""
    if not 0 <= i < dist.m:
        raise InvalidInput(f"element {i} out of range for m={dist.m}")
    if bit not in (0, 1):
        raise InvalidInput("bit must be 0 or 1")
    flag = 1 << i
    kept = {k: p for k, p in dist.support.items() if bool(k & flag) == bool(bit)}
    mass = sum(kept.values(), Fraction(0))
    if not mass:
        raise EmptyCondition(f"no support set with element {i} {'in' if bit else 'out'}")
    return SubsetDistribution(dist.m, {k: p / mass for k, p in kept.items()})


def branch_mass(dist: SubsetDistribution, i: int, bit: int) -> Fraction:
    flag = 1 << i
    return sum((p for k, p in dist.support.items() if bool(k & flag) == bool(bit)), Fraction(0))


def is_homogeneous(dist: SubsetDistribution) -> tuple[bool, int | None]:
    sizes = {popcount(k) for k in dist.support}
    if len(sizes) == 1:
        return True, sizes.pop()
    return False, None


def product_lift(m: int, r: int, budget: int = DEFAULT_BUDGET) -> SubsetDistribution:
    """Uniform choice of one copy (i, j) for every i; element (i, j) has index i * r + j."""
    if m < 0 or r < 1:
        raise InvalidInput("product_lift needs m >= 0 and r >= 1")
    if r**m > budget:
        raise BudgetExceeded(f"r^m = {r**m} support sets exceed the budget {budget}")
    if m * r > 64:
        raise InvalidInput("lifted ground set above 64 elements")
    p = Fraction(1, r**m)
    support = {}
    for choice in product(range(r), repeat=m):
        support[mask_of(i * r + j for i, j in enumerate(choice))] = p
    return SubsetDistribution(m * r, support)


def lambda_tree_distribution(graph, lam: Sequence, budget: int = DEFAULT_BUDGET) -> SubsetDistribution:
    """mu(T) proportional to prod_{e in T} lambda_e over spanning trees; ground set = edge indices."""
    from .graphlab import count_spanning_trees_exact, spanning_trees

    lam = [la.to_fraction(x) for x in lam]
    if len(lam) != len(graph.edges):
        raise InvalidInput("one weight per edge is required")
    if any(x <= 0 for x in lam):
        raise InvalidInput("weights must be positive")
    if not graph.is_connected():
        raise NoBasis("graph is disconnected; it has no spanning tree")
    weights = {}
    total = Fraction(0)
    for tree in spanning_trees(graph, budget=budget):
        w = Fraction(1)
        for e in tree:
            w *= lam[e]
        weights[mask_of(tree)] = w
        total += w
    if total != count_spanning_trees_exact(graph, lam):
        raise InternalConsistency("weighted tree sum disagrees with the matrix-tree determinant")
    return SubsetDistribution(len(graph.edges), {k: w / total for k, w in weights.items()})


def determinantal_from_lambda(vs: VectorSystem, lam: Sequence, budget: int = DEFAULT_BUDGET) -> SubsetDistribution:
    """mu(T) = prod_T lambda * det(sum_T v v^T) / det(sum_i lambda_i v_i v_i^T) on bases T."""
    from math import comb

    lam = [la.to_fraction(x) for x in lam]
    if len(lam) != vs.m:
        raise InvalidInput("one weight per vector is required")
    if any(x <= 0 for x in lam):
        raise InvalidInput("weights must be positive")
    if comb(vs.m, vs.d) > budget:
        raise BudgetExceeded(f"C({vs.m},{vs.d}) candidate bases exceed the budget {budget}")
    g = vs.gram()
    weights = {}
    total = Fraction(0)
    from itertools import combinations

    for t in combinations(range(vs.m), vs.d):
        dt = la.det(la.submatrix(g, list(t)))
        if dt:
            w = dt
            for i in t:
                w *= lam[i]
            weights[mask_of(t)] = w
            total += w
    if not total:
        raise NoBasis("vectors do not span the ambient space")
    normalizer = la.det(vs.frame(range(vs.m), lam))
    if normalizer != total:
        raise InternalConsistency("Cauchy-Binet normalization failed")
    return SubsetDistribution(vs.m, {k: w / total for k, w in weights.items()})


def kernel_minor(vs: VectorSystem, lam: Sequence, subset: Sequence[int]) -> Fraction:
    """det M_{T,T} for M(i,j) = sqrt(l_i l_j) <B^{-1/2} v_i, B^{-1/2} v_j>, B = sum l_i v_i v_i^T."""
    lam = [la.to_fraction(x) for x in lam]
    b = vs.coord_sum(range(vs.m), lam)
    binv = la.inverse(b)
    sub = [[la.dot(vs.coords[i], la.matvec(binv, vs.coords[j])) for j in subset] for i in subset]
    out = la.det(sub) if subset else Fraction(1)
    for i in subset:
        out *= lam[i]
    return out


def sample(dist: SubsetDistribution, rng: np.random.Generator) -> tuple[int, ...]:
    """Inverse-CDF draw over the support (in mask order), exact comparisons."""
    denom = 1 << 53
    u = Fraction(int(rng.integers(0, denom)), denom)
    acc = Fraction(0)
    last = None
    for mask, p in dist.support.items():
        acc += p
        last = mask
        if u < acc:
            return tuple(elements_of(mask))
    return tuple(elements_of(last))
