"""Hilbert polynomials of polarized Fano manifolds in exact arithmetic."""

from .exactq import Rational, UniPoly, poly_compose_linear, poly_gcd, poly_mul, primitive_integer_form
from .hilbert import (
    H0Vector,
    HilbertDataError,
    HilbertPolynomial,
    assemble,
    center,
    delta,
    from_h0,
    hyperplane_section,
    interpolate_R,
    product,
    serre_reflect,
)
from .reducibility import (
    ReducibilityReport,
    analyze,
    gamma_lines,
    integer_root_profile,
    numeric_roots,
    rational_roots,
    strip_check,
    sturm_distinct_real_roots,
    totally_reducible_Q,
    totally_reducible_R,
)

__version__ = "0.1.0"
