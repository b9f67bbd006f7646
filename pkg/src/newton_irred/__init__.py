"""Certify irreducibility of integer polynomials with Newton polygons at several primes."""

from .criteria import (
    Certificate,
    DegreeSet,
    Rule,
    Verdict,
    auto_check,
    check_certificate,
    d_p,
    dumas_single_prime,
    eisenstein,
    factor_degree_multiple,
    s_p,
    subset_sum_degrees,
    theorem_a_verdict,
    theorem_b_verdict,
)
from .estimator import IrreducibilityCertifier, NewtonPolygonFeatures
from .oracle import Factorization, Status, exact_interpolate, integer_divisors, kronecker_factorize, merge_polygons
from .poly import IntPoly, PolyParseError, content_and_primitive, evaluate, factor_out_x, mul, parse_poly, reciprocal
from .polygon import NewtonPolygon, Shape, ShapeClass, build_polygon, classify_shape, segment_widths, verify_vertex_conditions
from .valuation import INF, candidate_primes, is_prime, nu_p

__version__ = "0.1.0"
