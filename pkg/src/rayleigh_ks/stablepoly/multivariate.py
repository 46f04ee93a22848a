"""Multivariate polynomial types.

``MultiAffinePoly``  subset-indexed (bitmask) rational coefficients.
``ZXPoly``           z-monomials (per-variable degree <= 2) with coefficients in Q[x].
``MPoly``            general sparse polynomial in y_1..y_m over Q, for barrier work.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from ..errors import InvalidInput, UnsupportedDegree
from .linalg import to_fraction
from .univariate import UnivariatePoly

Exps = tuple[int, ...]


def mask_of(elements: Iterable[int]) -> int:
    out = 0
    for e in elements:
        out |= 1 << e
    return out


def elements_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class MultiAffinePoly:
    """sum_S c_S z^S with S encoded as a bitmask."""

    m: int
    terms: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for mask, c in self.terms.items():
            if mask >> self.m:
                raise InvalidInput(f"monomial {elements_of(mask)} outside {self.m} variables")
            c = to_fraction(c)
            if c:
                clean[mask] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def from_sets(cls, m: int, pairs: Iterable[tuple[Iterable[int], object]]) -> "MultiAffinePoly":
        terms: dict[int, Fraction] = {}
        for s, c in pairs:
            k = mask_of(s)
            terms[k] = terms.get(k, Fraction(0)) + to_fraction(c)
        return cls(m, terms)

    def coeff(self, elements: Iterable[int]) -> Fraction:
        return self.terms.get(mask_of(elements), Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiAffinePoly) and self.m == other.m and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __add__(self, other: "MultiAffinePoly") -> "MultiAffinePoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return MultiAffinePoly(max(self.m, other.m), out)

    def scale(self, c) -> "MultiAffinePoly":
        c = to_fraction(c)
        return MultiAffinePoly(self.m, {k: v * c for k, v in self.terms.items()})

    def evaluate(self, z: Sequence) -> Fraction:
        z = [to_fraction(v) for v in z]
        total = Fraction(0)
        for mask, c in self.terms.items():
            t = c
            for i in elements_of(mask):
                t *= z[i]
            total += t
        return total

    def diff(self, i: int) -> "MultiAffinePoly":
        bit = 1 << i
        return MultiAffinePoly(self.m, {k ^ bit: c for k, c in self.terms.items() if k & bit})

    def substitute(self, i: int, value) -> "MultiAffinePoly":
        """Fix z_i = value."""
        value = to_fraction(value)
        bit = 1 << i
        out: dict[int, Fraction] = {}
        for k, c in self.terms.items():
            if k & bit:
                if value:
                    out[k ^ bit] = out.get(k ^ bit, Fraction(0)) + c * value
            else:
                out[k] = out.get(k, Fraction(0)) + c
        return MultiAffinePoly(self.m, out)

    def multiply_variable(self, i: int) -> "MultiAffinePoly":
        bit = 1 << i
        if any(k & bit for k in self.terms):
            raise UnsupportedDegree("z_i * p would leave the multi-affine class")
        return MultiAffinePoly(self.m, {k | bit: c for k, c in self.terms.items()})

    def degrees(self) -> set[int]:
        return {popcount(k) for k in self.terms}

    def to_mpoly(self) -> "MPoly":
        return MPoly(self.m, {tuple((k >> i) & 1 for i in range(self.m)): c for k, c in self.terms.items()})

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "terms": [
                {"exps": [(k >> i) & 1 for i in range(self.m)], "coeffs": [str(c)]}
                for k, c in sorted(self.terms.items())
            ],
        }


def _check_exps(exps: Exps, m: int, cap: int | None) -> None:
    if len(exps) != m:
        raise InvalidInput(f"exponent vector of length {len(exps)} in a {m}-variable ring")
    if cap is not None and any(e > cap for e in exps):
        raise UnsupportedDegree(f"per-variable degree above {cap}: {exps}")


@dataclass(frozen=True)
class ZXPoly:
    """Polynomial in z_1..z_m with coefficients in Q[x]; per-variable z-degree <= 2."""

    m: int
    terms: Mapping[Exps, UnivariatePoly] = field(default_factory=dict)

    MAX_DEGREE = 2

    def __post_init__(self):
        clean = {}
        for exps, c in self.terms.items():
            exps = tuple(exps)
            _check_exps(exps, self.m, self.MAX_DEGREE)
            if not isinstance(c, UnivariatePoly):
                c = UnivariatePoly([c])
            if not c.is_zero():
                clean[exps] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def constant(cls, m: int, c) -> "ZXPoly":
        return cls(m, {(0,) * m: c if isinstance(c, UnivariatePoly) else UnivariatePoly([c])})

    @classmethod
    def variable(cls, m: int, i: int) -> "ZXPoly":
        e = [0] * m
        e[i] = 1
        return cls(m, {tuple(e): UnivariatePoly([1])})

    @classmethod
    def x(cls, m: int) -> "ZXPoly":
        return cls(m, {(0,) * m: UnivariatePoly.x()})

    def __eq__(self, other) -> bool:
        return isinstance(other, ZXPoly) and self.m == other.m and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __add__(self, other: "ZXPoly") -> "ZXPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return ZXPoly(self.m, out)

    def __sub__(self, other: "ZXPoly") -> "ZXPoly":
        return self + other.scale(-1)

    def scale(self, c) -> "ZXPoly":
        return ZXPoly(self.m, {e: p * c for e, p in self.terms.items()})

    def is_multi_affine(self) -> bool:
        return all(e <= 1 for exps in self.terms for e in exps)

    def max_degree(self) -> int:
        return max((max(exps, default=0) for exps in self.terms), default=0)

    def evaluate(self, z: Sequence, x):
        """Numeric value at (z, x); exact when inputs are rational."""
        z = [to_fraction(v) for v in z]
        xv = to_fraction(x)
        total = Fraction(0)
        for exps, c in self.terms.items():
            t = c.eval(xv)
            for zi, e in zip(z, exps):
                if e:
                    t *= zi**e
            total += t
        return total

    def coefficient(self, exps: Sequence[int]) -> UnivariatePoly:
        return self.terms.get(tuple(exps), UnivariatePoly())

    def at_x(self, xval) -> "MPoly":
        xv = to_fraction(xval)
        return MPoly(self.m, {e: c.eval(xv) for e, c in self.terms.items()})

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "terms": [{"exps": list(e), "coeffs": c.to_json()} for e, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "ZXPoly":
        return cls(int(data["m"]), {tuple(t["exps"]): UnivariatePoly.from_json(t["coeffs"]) for t in data["terms"]})


@dataclass(frozen=True)
class MPoly:
    """Sparse polynomial over Q in m variables, no degree cap."""

    m: int
    terms: Mapping[Exps, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[Exps, Fraction] = {}
        for exps, c in self.terms.items():
            exps = tuple(exps)
            _check_exps(exps, self.m, None)
            c = to_fraction(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    @classmethod
    def constant(cls, m: int, c) -> "MPoly":
        return cls(m, {(0,) * m: c})

    @classmethod
    def linear(cls, coeffs: Sequence, const=0) -> "MPoly":
        m = len(coeffs)
        terms: dict[Exps, Fraction] = {(0,) * m: to_fraction(const)}
        for i, a in enumerate(coeffs):
            e = [0] * m
            e[i] = 1
            terms[tuple(e)] = to_fraction(a)
        return cls(m, terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, MPoly) and self.m == other.m and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __add__(self, other: "MPoly") -> "MPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MPoly(self.m, out)

    def __neg__(self) -> "MPoly":
        return MPoly(self.m, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MPoly") -> "MPoly":
        return self + (-other)

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            c = to_fraction(other)
            return MPoly(self.m, {e: v * c for e, v in self.terms.items()})
        out: dict[Exps, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MPoly(self.m, out)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def diff(self, i: int, k: int = 1) -> "MPoly":
        out: dict[Exps, Fraction] = {}
        for e, c in self.terms.items():
            if e[i] >= k:
                f = 1
                for j in range(k):
                    f *= e[i] - j
                ne = list(e)
                ne[i] -= k
                out[tuple(ne)] = out.get(tuple(ne), Fraction(0)) + c * f
        return MPoly(self.m, out)

    def partial(self, indices: Sequence[int]) -> "MPoly":
        p = self
        for i in indices:
            p = p.diff(i)
        return p

    def one_minus_dzz(self, i: int) -> "MPoly":
        return self - self.diff(i, 2)

    def evaluate(self, z: Sequence):
        exact = all(isinstance(v, (int, Fraction)) for v in z)
        if exact:
            total = Fraction(0)
            for e, c in self.terms.items():
                t = c
                for zi, k in zip(z, e):
                    if k:
                        t *= Fraction(zi) ** k
                total += t
            return total
        total = 0.0
        for e, c in self.terms.items():
            t = float(c)
            for zi, k in zip(z, e):
                if k:
                    t *= float(zi) ** k
            total += t
        return total

    def restrict(self, z: Sequence, i: int) -> UnivariatePoly:
        """Univariate restriction t -> p(z_1..z_{i-1}, t, z_{i+1}..)."""
        z = [to_fraction(v) for v in z]
        deg = max((e[i] for e in self.terms), default=0)
        coeffs = [Fraction(0)] * (deg + 1)
        for e, c in self.terms.items():
            t = c
            for j, (zj, k) in enumerate(zip(z, e)):
                if j != i and k:
                    t *= zj**k
            coeffs[e[i]] += t
        return UnivariatePoly(coeffs)

    def restrict2(self, z: Sequence, i: int, j: int) -> "MPoly":
        """Bivariate restriction in (z_i, z_j), other coordinates fixed."""
        z = [to_fraction(v) for v in z]
        out: dict[Exps, Fraction] = {}
        for e, c in self.terms.items():
            t = c
            for k, (zk, ek) in enumerate(zip(z, e)):
                if k not in (i, j) and ek:
                    t *= zk**ek
            key = (e[i], e[j])
            out[key] = out.get(key, Fraction(0)) + t
        return MPoly(2, out)

    def max_degree(self) -> int:
        return max((max(e, default=0) for e in self.terms), default=0)

    def to_json(self) -> dict:
        return {"m": self.m, "terms": [{"exps": list(e), "coeffs": [str(c)]} for e, c in sorted(self.terms.items())]}


def det_poly(matrix: Sequence[Sequence[MPoly]]) -> MPoly:
    """Determinant of a small matrix of polynomials by Laplace expansion."""
    n = len(matrix)
    if n == 0:
        raise InvalidInput("empty matrix")
    m = matrix[0][0].m
    if n == 1:
        return matrix[0][0]
    total = MPoly(m)
    for c in range(n):
        minor = [row[:c] + row[c + 1 :] for row in matrix[1:]]
        term = matrix[0][c] * det_poly(minor)
        total = total + (term if c % 2 == 0 else -term)
    return total


def subsets_up_to(m: int, k: int):
    for size in range(k + 1):
        yield from combinations(range(m), size)
