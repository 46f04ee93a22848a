"""Univariate polynomials with exact rational coefficients.

Root questions (real-rootedness, largest root, root ordering) are answered
with Sturm sequences over ``Fraction``; floats only appear when a caller
asks for a numeric root value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import DegreeMismatch, InvalidInput, PreconditionViolation, UndefinedInput
from .linalg import to_fraction


def _trim(coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class UnivariatePoly:
    """Dense polynomial, coefficients in ascending degree."""

    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim([to_fraction(c) for c in coeffs]))

    @classmethod
    def x(cls) -> "UnivariatePoly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "UnivariatePoly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "UnivariatePoly":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "UnivariatePoly":
        p = cls([lead])
        for r in roots:
            p = p * cls([-to_fraction(r), 1])
        return p

    # -- basic structure -------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __repr__(self) -> str:
        return f"UnivariatePoly({self.to_string()})"

    def to_string(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        s0, b0 = parts[0]
        out = ("-" if s0 == "-" else "") + b0
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other) -> "UnivariatePoly":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePoly([self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "UnivariatePoly":
        return UnivariatePoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "UnivariatePoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "UnivariatePoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "UnivariatePoly":
        if not isinstance(other, UnivariatePoly):
            c = to_fraction(other)
            return UnivariatePoly([c * a for a in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UnivariatePoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UnivariatePoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UnivariatePoly":
        out = UnivariatePoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, UnivariatePoly):
            return self.coeffs == other.coeffs
        try:
            return self.coeffs == UnivariatePoly([other]).coeffs
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x):
        return self.eval(x)

    def eval(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + (c if not isinstance(acc, float) else float(c))
        return acc

    def derivative(self, k: int = 1) -> "UnivariatePoly":
        p = self
        for _ in range(k):
            p = UnivariatePoly([i * c for i, c in enumerate(p.coeffs)][1:])
        return p

    def compose_square(self) -> "UnivariatePoly":
        """p(x^2)."""
        out = []
        for c in self.coeffs:
            out.extend([c, Fraction(0)])
        return UnivariatePoly(out)

    def shift_degree(self, k: int) -> "UnivariatePoly":
        """Multiply by x^k (k >= 0) or divide exactly by x^-k."""
        if k >= 0:
            return UnivariatePoly([0] * k + list(self.coeffs))
        if any(self.coeff(i) for i in range(-k)):
            raise InvalidInput("polynomial is not divisible by the requested power of x")
        return UnivariatePoly(self.coeffs[-k:])

    def divmod(self, other: "UnivariatePoly") -> tuple["UnivariatePoly", "UnivariatePoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        lc = other.lead
        if len(rem) - 1 < dd:
            return UnivariatePoly(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            c = rem[k + dd] / lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return UnivariatePoly(quot), UnivariatePoly(rem[:dd])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "UnivariatePoly":
        return self * (1 / self.lead) if self.coeffs else self

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "UnivariatePoly":
        return cls([Fraction(s) for s in data])


def _coerce(x) -> UnivariatePoly:
    return x if isinstance(x, UnivariatePoly) else UnivariatePoly([x])


def gcd(a: UnivariatePoly, b: UnivariatePoly) -> UnivariatePoly:
    while not b.is_zero():
        a, b = b, (a % b).monic()
    return a.monic()


def square_free(p: UnivariatePoly) -> UnivariatePoly:
    """p / gcd(p, p'), i.e. the product of the distinct irreducible factors."""
    if p.degree <= 0:
        return p
    g = gcd(p, p.derivative())
    return (p // g).monic() if g.degree > 0 else p.monic()


def square_free_decomposition(p: UnivariatePoly) -> list[UnivariatePoly]:
    """Yun's algorithm: monic a_1, a_2, ... with p = lead * prod a_k^k."""
    if p.degree <= 0:
        return []
    f = p.monic()
    a = gcd(f, f.derivative())
    b = f // a
    c = f.derivative() // a
    d = c - b.derivative()
    out = []
    while b.degree > 0:
        g = gcd(b, d)
        out.append(g)
        b = b // g
        c = d // g
        d = c - b.derivative()
    return out


# -- Sturm machinery -------------------------------------------------------


def sturm_sequence(p: UnivariatePoly) -> list[UnivariatePoly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        # positive rescaling keeps the sign pattern and tames coefficient growth
        r = -r * (1 / abs(r.lead))
        seq.append(r)
    return [s for s in seq if not s.is_zero()]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Iterable[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _var_at(seq: list[UnivariatePoly], x: Fraction) -> int:
    return _variations(_sign(s.eval(x)) for s in seq)


def _var_at_inf(seq: list[UnivariatePoly], positive: bool) -> int:
    if positive:
        return _variations(_sign(s.lead) for s in seq)
    return _variations(_sign(s.lead) * (-1 if s.degree % 2 else 1) for s in seq)


class SturmCounter:
    """Counts distinct real roots of a polynomial in half-open intervals."""

    def __init__(self, p: UnivariatePoly):
        if p.is_zero():
            raise UndefinedInput("zero polynomial has no root structure")
        self.poly = square_free(p)
        self.seq = sturm_sequence(self.poly)

    def count(self, a=None, b=None) -> int:
        """Number of distinct roots in (a, b]; ``None`` means -inf / +inf."""
        va = _var_at_inf(self.seq, False) if a is None else _var_at(self.seq, to_fraction(a))
        vb = _var_at_inf(self.seq, True) if b is None else _var_at(self.seq, to_fraction(b))
        return va - vb


def cauchy_bound(p: UnivariatePoly) -> Fraction:
    lc = abs(p.lead)
    return 1 + max((abs(c) / lc for c in p.coeffs[:-1]), default=Fraction(0))


def is_real_rooted(p: UnivariatePoly) -> bool:
    if p.is_zero():
        raise UndefinedInput("real-rootedness of the zero polynomial is undefined")
    sc = SturmCounter(p)
    return sc.count() == sc.poly.degree


def isolate_roots(p: UnivariatePoly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals (a, b], ascending, each holding exactly one distinct real root."""
    sc = SturmCounter(p)
    if sc.poly.degree <= 0:
        return []
    bound = cauchy_bound(sc.poly)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(-bound, bound, sc.count(-bound, bound))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        stack.append((a, mid, sc.count(a, mid)))
        stack.append((mid, b, sc.count(mid, b)))
    out.sort()
    return out


def _refine(sc: SturmCounter, a: Fraction, b: Fraction) -> tuple[Fraction, Fraction]:
    mid = (a + b) / 2
    return (a, mid) if sc.count(a, mid) else (mid, b)


def _largest_interval(sc: SturmCounter):
    if sc.count() == 0:
        return None
    bound = cauchy_bound(sc.poly)
    a, b = -bound, bound
    while sc.count(a, b) > 1:
        mid = (a + b) / 2
        if sc.count(mid, b):
            a = mid
        else:
            b = mid
    return a, b


def max_real_root(p: UnivariatePoly, tol=1e-12) -> float:
    """Largest real root within ``tol``; requires a real-rooted input."""
    if p.is_zero():
        raise UndefinedInput("zero polynomial")
    if not is_real_rooted(p):
        raise PreconditionViolation("max_real_root needs a real-rooted polynomial")
    sc = SturmCounter(p)
    iv = _largest_interval(sc)
    if iv is None:
        raise PreconditionViolation("polynomial has no real roots")
    a, b = iv
    tol = to_fraction(tol)
    while b - a > tol:
        a, b = _refine(sc, a, b)
    return float((a + b) / 2)


def largest_root_interval(p: UnivariatePoly, width=None):
    sc = SturmCounter(p)
    iv = _largest_interval(sc)
    if iv is None or width is None:
        return iv
    a, b = iv
    width = to_fraction(width)
    while b - a > width:
        a, b = _refine(sc, a, b)
    return a, b


def compare_largest_roots(f: UnivariatePoly, g: UnivariatePoly) -> int:
    """Exact sign of maxroot(f) - maxroot(g); a polynomial without real roots has -inf."""
    sf, sg = SturmCounter(f), SturmCounter(g)
    i_f, i_g = _largest_interval(sf), _largest_interval(sg)
    if i_f is None or i_g is None:
        if i_f is None and i_g is None:
            return 0
        return -1 if i_f is None else 1
    shared = gcd(sf.poly, sg.poly)
    common = SturmCounter(shared) if shared.degree > 0 else None
    (af, bf), (ag, bg) = i_f, i_g
    while True:
        if bf <= ag:
            return -1
        if bg <= af:
            return 1
        lo, hi = max(af, ag), min(bf, bg)
        if common is not None and common.count(lo, hi) > 0:
            # the shared root in the overlap is the unique root of f in (af,bf] and of g in (ag,bg]
            return 0
        af, bf = _refine(sf, af, bf)
        ag, bg = _refine(sg, ag, bg)


def root_structure(polys: Sequence[UnivariatePoly]):
    """Distinct real roots of all inputs, ascending, with multiplicity per input.

    Returns a list of ``(interval, [mult_0, mult_1, ...])``.
    """
    prod = UnivariatePoly([1])
    for p in polys:
        if p.is_zero():
            raise UndefinedInput("zero polynomial")
        prod = prod * p
    intervals = isolate_roots(prod)
    decomps = [square_free_decomposition(p) for p in polys]
    counters = [[SturmCounter(a) if a.degree > 0 else None for a in dec] for dec in decomps]
    out = []
    for a, b in intervals:
        mults = []
        for cs in counters:
            m = 0
            for k, c in enumerate(cs, start=1):
                if c is not None and c.count(a, b) > 0:
                    m = k
                    break
            mults.append(m)
        out.append(((a, b), mults))
    return out


def sorted_roots(p: UnivariatePoly, tol=1e-12) -> list[float]:
    """Real roots with multiplicity, ascending, as floats."""
    out = []
    sc = SturmCounter(p)
    for (a, b), (m,) in root_structure([p]):
        tol_f = to_fraction(tol)
        while b - a > tol_f:
            a, b = _refine(sc, a, b)
        out.extend([float((a + b) / 2)] * m)
    return out


def is_interlacing(g: UnivariatePoly, f: UnivariatePoly) -> bool:
    """True iff g's roots interlace f's: b1 <= a1 <= b2 <= ... <= a_{n-1} <= b_n."""
    if g.degree != f.degree - 1:
        raise DegreeMismatch(f"interlacing needs deg g = deg f - 1 (got {g.degree}, {f.degree})")
    if g.lead <= 0 or f.lead <= 0:
        raise PreconditionViolation("interlacing needs positive leading coefficients")
    if not (is_real_rooted(f) and (g.degree == 0 or is_real_rooted(g))):
        raise PreconditionViolation("interlacing needs real-rooted inputs")
    if g.degree == 0:
        return True
    ranks_f: list[int] = []
    ranks_g: list[int] = []
    for rank_, (_, (mf, mg)) in enumerate(root_structure([f, g])):
        ranks_f.extend([rank_] * mf)
        ranks_g.extend([rank_] * mg)
    return all(ranks_f[i] <= ranks_g[i] <= ranks_f[i + 1] for i in range(len(ranks_g)))


def common_interlacing_test(polys: Sequence[UnivariatePoly], grid: int = 64) -> bool:
    """Sampled falsifier: False if some convex combination is not real-rooted.

    Checks every pairwise combination at lambda = j/grid and the barycentre.
    A True answer is only the absence of a counterexample.
    """
    if not polys:
        raise InvalidInput("common_interlacing_test needs at least one polynomial")
    deg = polys[0].degree
    for p in polys:
        if p.degree != deg:
            raise DegreeMismatch("common interlacing needs equal degrees")
        if p.lead <= 0:
            raise PreconditionViolation("common interlacing needs positive leading coefficients")
        if not is_real_rooted(p):
            return False
    distinct = list(dict.fromkeys(polys))
    for i in range(len(distinct)):
        for j in range(i + 1, len(distinct)):
            for k in range(1, grid):
                lam = Fraction(k, grid)
                if not is_real_rooted(distinct[i] * lam + distinct[j] * (1 - lam)):
                    return False
    if len(distinct) > 2:
        bary = sum(distinct, UnivariatePoly()) * Fraction(1, len(distinct))
        if not is_real_rooted(bary):
            return False
    return True
