from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rayleigh_ks.errors import DegreeMismatch, PreconditionViolation, UndefinedInput
from rayleigh_ks.stablepoly.univariate import (
    SturmCounter,
    UnivariatePoly as P,
    common_interlacing_test,
    compare_largest_roots,
    gcd,
    is_interlacing,
    is_real_rooted,
    isolate_roots,
    max_real_root,
    sorted_roots,
    square_free,
    square_free_decomposition,
)

X = P.x()
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def companion_max_real(p: P) -> float:
    """Oracle: numpy eigenvalues of the companion matrix."""
    roots = np.roots([float(c) for c in reversed(p.coeffs)])
    real = roots[np.abs(roots.imag) < 1e-7].real
    return float(real.max())


def test_arithmetic_and_eval():
    p = (X - 1) * (X + 2)
    assert p == P([-2, 1, 1])
    assert p.eval(F(1, 2)) == F(-5, 4)
    assert p.derivative() == P([1, 2])
    assert (p**2).degree == 4
    q, r = (X**3 + 1).divmod(X + 1)
    assert r == P() and q == P([1, -1, 1])


def test_compose_square_and_evenness():
    p = P([-2, 1])
    assert p.compose_square() == X**2 - 2
    assert p.compose_square().is_even()
    assert not (X + 1).is_even()


@pytest.mark.parametrize(
    "poly, expected",
    [(X**2 - 2, True), (X**2 + 1, False), ((X - 1) ** 2, True), (P([5]), True)],
)
def test_is_real_rooted_examples(poly, expected):
    assert is_real_rooted(poly) is expected


def test_zero_polynomial_is_undefined():
    with pytest.raises(UndefinedInput):
        is_real_rooted(P())


@pytest.mark.parametrize(
    "poly, expected",
    [(X**2 - 2, 2**0.5), (X * (X - 3), 3.0), ((X**2 - 2) * (X**2 - 3), 3**0.5)],
)
def test_max_real_root_examples(poly, expected):
    assert abs(max_real_root(poly, 1e-12) - expected) <= 1e-9


def test_max_real_root_rejects_complex_roots():
    with pytest.raises(PreconditionViolation):
        max_real_root(X**2 + 1)


def test_sturm_counts_distinct_roots():
    p = (X - 1) ** 2 * (X - 2) * (X + 3)
    sc = SturmCounter(p)
    assert sc.count() == 3
    assert sc.count(F(0), F(5)) == 2
    assert sc.count(None, F(0)) == 1


def test_gcd_and_square_free():
    p = (X - 1) ** 3 * (X + 2)
    assert gcd(p, p.derivative()).monic() == ((X - 1) ** 2).monic()
    assert square_free(p).monic() == ((X - 1) * (X + 2)).monic()
    parts = square_free_decomposition(p)
    assert parts[0].monic() == (X + 2).monic() and parts[2].monic() == (X - 1).monic()


@settings(max_examples=60, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=6))
def test_real_rooted_products_match_companion_oracle(roots):
    p = P.from_roots(roots)
    assert is_real_rooted(p)
    assert abs(max_real_root(p) - float(max(roots))) < 1e-9
    if len(set(roots)) == len(roots):
        # the float oracle is only well conditioned for simple roots
        assert abs(max_real_root(p) - companion_max_real(p)) < 1e-6
    expected = sorted(float(r) for r in roots)
    assert np.allclose(sorted_roots(p), expected, atol=1e-9)
    assert len(isolate_roots(p)) == len(set(roots))


@settings(max_examples=60, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=4), st.lists(rationals, min_size=1, max_size=4))
def test_compare_largest_roots_is_exact(a, b):
    f, g = P.from_roots(a), P.from_roots(b)
    expected = (max(a) > max(b)) - (max(a) < max(b))
    assert compare_largest_roots(f, g) == expected


def test_compare_largest_roots_detects_irrational_ties():
    f = X**2 - 2
    g = (X**2 - 2) * (X + 7)
    assert compare_largest_roots(f, g) == 0
    assert compare_largest_roots(X**2 - 3, f) == 1


@pytest.mark.parametrize(
    "g, f, expected",
    [
        (X - 2, (X - 1) * (X - 3), True),
        (X - 5, (X - 1) * (X - 3), False),
        (X - 1, (X - 1) * (X - 3), True),
    ],
)
def test_is_interlacing_examples(g, f, expected):
    assert is_interlacing(g, f) is expected


def test_is_interlacing_degree_check():
    with pytest.raises(DegreeMismatch):
        is_interlacing(X**3, X)


@pytest.mark.parametrize(
    "polys, expected",
    [
        ([(X - 1) * (X - 3), (X - 2) * (X - 4)], True),
        ([(X - 1) * (X - 2), (X - 3) * (X - 4)], False),
        ([(X - 1) * (X - 3), (X - 1) * (X - 3)], True),
    ],
)
def test_common_interlacing_examples(polys, expected):
    assert common_interlacing_test(polys) is expected


def test_json_round_trip():
    p = P([F(1, 3), 0, -2])
    assert P.from_json(p.to_json()) == p
