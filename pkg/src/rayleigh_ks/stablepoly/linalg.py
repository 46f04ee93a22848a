"""Exact dense linear algebra over ``Fraction``.

Matrices are plain lists of rows. Sizes here are desk scale (dimension
rarely above 10), so cubic elimination is fine.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import InvalidInput, RankDeficient

Matrix = list[list[Fraction]]


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        return Fraction(x)
    return Fraction(x)


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    out = [[to_fraction(v) for v in row] for row in rows]
    if out and any(len(r) != len(out[0]) for r in out):
        raise InvalidInput("ragged matrix")
    return out


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a: Matrix, v: Sequence[Fraction]) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def madd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mscale(a: Matrix, c) -> Matrix:
    return [[c * x for x in row] for row in a]


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def outer(u: Sequence[Fraction], v: Sequence[Fraction]) -> Matrix:
    return [[x * y for y in v] for x in u]


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(u, v)), Fraction(0))


def is_square(a: Matrix) -> bool:
    return all(len(row) == len(a) for row in a)


def is_symmetric(a: Matrix) -> bool:
    n = len(a)
    return is_square(a) and all(a[i][j] == a[j][i] for i in range(n) for j in range(i))


def det(a: Matrix) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    n = len(a)
    if not is_square(a):
        raise InvalidInput("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    m = [row[:] for row in a]
    result = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        p = m[c][c]
        result *= p
        for r in range(c + 1, n):
            f = m[r][c]
            if f:
                f /= p
                row_c = m[c]
                m[r] = [x - f * y for x, y in zip(m[r], row_c)]
    return result


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    if not is_square(a):
        raise InvalidInput("inverse of a non-square matrix")
    m = [row[:] + ident for row, ident in zip(a, identity(n))]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            raise RankDeficient("matrix is singular")
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def rank(a: Matrix) -> int:
    return len(independent_rows(a))


def independent_rows(a: Matrix) -> list[int]:
    """Indices of a greedy maximal linearly independent subset of rows."""
    basis: list[tuple[int, list[Fraction]]] = []  # (pivot column, reduced row)
    chosen = []
    for idx, row in enumerate(a):
        r = row[:]
        for col, b in basis:
            if r[col]:
                f = r[col] / b[col]
                r = [x - f * y for x, y in zip(r, b)]
        col = next((j for j, x in enumerate(r) if x != 0), None)
        if col is not None:
            basis.append((col, r))
            chosen.append(idx)
    return chosen


def submatrix(a: Matrix, rows: Sequence[int], cols: Sequence[int] | None = None) -> Matrix:
    cols = rows if cols is None else cols
    return [[a[i][j] for j in cols] for i in rows]


def char_poly_coeffs(a: Matrix) -> list[Fraction]:
    """Coefficients of det(xI - A), ascending, via Faddeev-LeVerrier."""
    n = len(a)
    if not is_square(a):
        raise InvalidInput("characteristic polynomial of a non-square matrix")
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = zeros(n, n)
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        mk = matmul(a, mk) if k > 1 else zeros(n, n)
        for i in range(n):
            mk[i][i] += coeffs[n - k + 1]
        am = matmul(a, mk)
        coeffs[n - k] = -trace(am) / k
    return coeffs


def to_float(a: Matrix):
    import numpy as np

    return np.array([[float(x) for x in row] for row in a], dtype=float)
