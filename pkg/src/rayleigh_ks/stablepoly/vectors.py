"""Vector systems with exact inner products.

A system stores rational coordinates ``c_i`` in Q^d together with a rational
positive definite metric ``H``, so that <v_i, v_j> = c_i^T H c_j.  Plain
rational vectors use H = I.  Whitened systems and graph edge vectors
(``L^{+/2} b_e``) have irrational coordinates but rational Gram matrices;
the metric absorbs the square roots.

Every spectral quantity of ``sum_{i in S} v_i v_i^T`` is then a quantity of
the rational matrix ``A_S H`` with ``A_S = sum_{i in S} c_i c_i^T``, which is
similar to the symmetric operator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from ..errors import InvalidInput, NoBasis
from . import linalg as la


@dataclass(frozen=True)
class VectorSystem:
    d: int
    coords: tuple[tuple[Fraction, ...], ...]
    metric: tuple[tuple[Fraction, ...], ...]

    # -- construction ----------------------------------------------------
    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence], d: int | None = None) -> "VectorSystem":
        vecs = [tuple(la.to_fraction(x) for x in v) for v in vectors]
        if d is None:
            if not vecs:
                raise InvalidInput("cannot infer the dimension of an empty system")
            d = len(vecs[0])
        if any(len(v) != d for v in vecs):
            raise InvalidInput(f"all vectors must have dimension {d}")
        return cls(d, tuple(vecs), tuple(map(tuple, la.identity(d))))

    @classmethod
    def scaled(cls, vectors: Sequence[Sequence], squared_scale) -> "VectorSystem":
        """Vectors sqrt(s) * c_i with a common rational s (e.g. e1/sqrt(2))."""
        base = cls.from_vectors(vectors)
        s = la.to_fraction(squared_scale)
        if s <= 0:
            raise InvalidInput("scale must be positive")
        return cls(base.d, base.coords, tuple(tuple(s * x for x in row) for row in base.metric))

    @classmethod
    def from_gram(cls, gram: Sequence[Sequence], d: int | None = None) -> "VectorSystem":
        """Realize a rational PSD Gram matrix in the rational basis of a maximal independent subset."""
        g = la.as_matrix(gram)
        m = len(g)
        basis = la.independent_rows(g)
        r = len(basis)
        d = r if d is None else d
        if r > d:
            raise InvalidInput(f"Gram matrix has rank {r} > dimension {d}")
        h = la.submatrix(g, basis)
        hinv = la.inverse(h)
        cols = [[g[b][i] for b in basis] for i in range(m)]
        coords = [la.matvec(hinv, col) + [Fraction(0)] * (d - r) for col in cols]
        metric = la.identity(d)
        for a in range(r):
            for b in range(r):
                metric[a][b] = h[a][b]
        vs = cls(d, tuple(map(tuple, coords)), tuple(map(tuple, metric)))
        if vs.gram() != g:
            raise InvalidInput("Gram matrix is not positive semidefinite of the claimed rank")
        return vs

    # -- basic accessors -------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.coords)

    def metric_matrix(self) -> la.Matrix:
        return [list(r) for r in self.metric]

    def inner(self, i: int, j: int) -> Fraction:
        hc = la.matvec(self.metric_matrix(), self.coords[j])
        return la.dot(self.coords[i], hc)

    def gram(self) -> la.Matrix:
        h = self.metric_matrix()
        hc = [la.matvec(h, c) for c in self.coords]
        return [[la.dot(ci, hcj) for hcj in hc] for ci in self.coords]

    def sq_norms(self) -> list[Fraction]:
        return [self.inner(i, i) for i in range(self.m)]

    @property
    def eps2(self) -> Fraction:
        return max(self.sq_norms(), default=Fraction(0))

    def coord_sum(self, subset: Iterable[int], weights: Sequence | None = None) -> la.Matrix:
        """A_S = sum_{i in S} w_i c_i c_i^T."""
        a = la.zeros(self.d, self.d)
        for i in subset:
            c = self.coords[i]
            w = Fraction(1) if weights is None else la.to_fraction(weights[i])
            for r in range(self.d):
                if c[r]:
                    wr = w * c[r]
                    row = a[r]
                    for s in range(self.d):
                        row[s] += wr * c[s]
        return a

    def frame(self, subset: Iterable[int] | None = None, weights=None) -> la.Matrix:
        """Matrix similar to sum_{i in S} w_i v_i v_i^T (it is A_S H)."""
        subset = range(self.m) if subset is None else subset
        return la.matmul(self.coord_sum(subset, weights), self.metric_matrix())

    def is_isotropic(self) -> bool:
        return self.frame() == la.identity(self.d)

    def isotropy_defect(self) -> float:
        f = self.frame()
        ident = la.identity(self.d)
        return max((abs(float(f[i][j] - ident[i][j])) for i in range(self.d) for j in range(self.d)), default=0.0)

    def subset_det(self, subset: Sequence[int]) -> Fraction:
        """det of the Gram matrix of the subset = sigma_|S|(sum_{i in S} v_i v_i^T)."""
        if not subset:
            return Fraction(1)
        g = self.gram()
        return la.det(la.submatrix(g, list(subset)))

    def char_poly(self, subset: Iterable[int], scale=1):
        """det(xI - scale * sum_{i in S} v_i v_i^T), exact."""
        from .univariate import UnivariatePoly

        f = la.mscale(self.frame(subset), la.to_fraction(scale))
        return UnivariatePoly(la.char_poly_coeffs(f))

    def spectral_norm(self, subset: Iterable[int]) -> float:
        """Largest eigenvalue of sum_{i in S} v_i v_i^T, via a symmetric eigensolver."""
        a = la.to_float(self.coord_sum(list(subset)))
        chol = np.linalg.cholesky(la.to_float(self.metric_matrix()))
        sym = chol.T @ a @ chol
        return float(np.linalg.eigvalsh((sym + sym.T) / 2)[-1]) if self.d else 0.0

    def float_vectors(self) -> np.ndarray:
        """Orthonormal-frame coordinates L^T c_i with H = L L^T (rows are vectors)."""
        chol = np.linalg.cholesky(la.to_float(self.metric_matrix()))
        return la.to_float([list(c) for c in self.coords]) @ chol

    def spans(self) -> bool:
        return la.rank([list(c) for c in self.coords]) == self.d

    def bases(self) -> list[tuple[int, ...]]:
        """All d-subsets whose vectors are linearly independent."""
        out = []
        g = self.gram()
        for t in combinations(range(self.m), self.d):
            if la.det(la.submatrix(g, list(t))) != 0:
                out.append(t)
        return out

    # -- derived systems -------------------------------------------------
    def whiten(self) -> "VectorSystem":
        """Exact isotropic position: same coordinates, metric A^{-1} with A = sum c_i c_i^T."""
        a = self.coord_sum(range(self.m))
        if la.rank(a) < self.d:
            raise NoBasis("vectors do not span; cannot bring them into isotropic position")
        return VectorSystem(self.d, self.coords, tuple(map(tuple, la.inverse(a))))

    def subsystem(self, indices: Sequence[int]) -> "VectorSystem":
        return VectorSystem(self.d, tuple(self.coords[i] for i in indices), self.metric)

    def lift(self, r: int) -> "VectorSystem":
        """w_{i,j}: v_i placed in block j of R^{d r}; element index i * r + j."""
        coords = []
        for c in self.coords:
            for j in range(r):
                w = [Fraction(0)] * (self.d * r)
                w[j * self.d : (j + 1) * self.d] = c
                coords.append(tuple(w))
        metric = la.zeros(self.d * r, self.d * r)
        for j in range(r):
            for a in range(self.d):
                for b in range(self.d):
                    metric[j * self.d + a][j * self.d + b] = self.metric[a][b]
        return VectorSystem(self.d * r, tuple(coords), tuple(map(tuple, metric)))

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "coords": [[str(x) for x in c] for c in self.coords],
            "metric": [[str(x) for x in row] for row in self.metric],
        }


def exact_sqrt(q: Fraction) -> Fraction | None:
    """Rational square root if q is a perfect square in Q."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def from_scaled_vectors(vectors: Sequence[Sequence], squared_scales: Sequence, d: int | None = None) -> VectorSystem:
    """Vectors sqrt(s_i) c_i with per-vector rational s_i; the Gram matrix must be rational."""
    scales = [la.to_fraction(s) for s in squared_scales]
    if len(set(scales)) == 1 and scales:
        return VectorSystem.scaled(vectors, scales[0])
    base = VectorSystem.from_vectors(vectors, d)
    g0 = base.gram()
    g = la.zeros(base.m, base.m)
    for i in range(base.m):
        for j in range(base.m):
            if g0[i][j] == 0:
                continue
            root = exact_sqrt(scales[i] * scales[j])
            if root is None:
                raise InvalidInput(f"inner product of vectors {i} and {j} is irrational")
            g[i][j] = root * g0[i][j]
    return VectorSystem.from_gram(g, base.d)
