"""Exact polynomial arithmetic for stable-polynomial computations."""

from .multivariate import MPoly, MultiAffinePoly, ZXPoly, det_poly, elements_of, mask_of
from .ops import (
    apply_one_minus_dzz,
    cauchy_binet_expand,
    char_poly_x2,
    generating_poly,
    restrict_zero,
    shift_diagonal,
    stability_falsifier,
    zx_mul,
)
from .univariate import (
    UnivariatePoly,
    common_interlacing_test,
    compare_largest_roots,
    gcd,
    is_interlacing,
    is_real_rooted,
    isolate_roots,
    max_real_root,
    sorted_roots,
    square_free,
)
from .vectors import VectorSystem, from_scaled_vectors

__all__ = [
    "MPoly",
    "MultiAffinePoly",
    "ZXPoly",
    "UnivariatePoly",
    "VectorSystem",
    "apply_one_minus_dzz",
    "cauchy_binet_expand",
    "char_poly_x2",
    "common_interlacing_test",
    "compare_largest_roots",
    "det_poly",
    "elements_of",
    "from_scaled_vectors",
    "gcd",
    "generating_poly",
    "is_interlacing",
    "is_real_rooted",
    "isolate_roots",
    "mask_of",
    "max_real_root",
    "restrict_zero",
    "shift_diagonal",
    "sorted_roots",
    "square_free",
    "stability_falsifier",
    "zx_mul",
]
