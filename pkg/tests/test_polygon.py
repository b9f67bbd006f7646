import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given

from newton_irred import (
    IntPoly,
    Shape,
    build_polygon,
    classify_shape,
    parse_poly,
    reciprocal,
    segment_widths,
    verify_vertex_conditions,
)
from newton_irred.families import family
from newton_irred.polygon import NewtonPolygon, valuation_points
from newton_irred.selftest import envelope_vertices

from conftest import polys, small_primes

FIG2_VERTICES = ((0, 4), (1, 2), (5, 0), (8, 0), (10, 2), (11, 5))


class TestBuild:
    def test_sample_polygon(self, sample11):
        poly = build_polygon(sample11, 2)
        assert poly.vertices == FIG2_VERTICES
        assert poly.segment_widths() == [1, 2, 2, 1, 1, 1, 1, 1, 1]
        assert poly.lattice_points() == [(0, 4), (1, 2), (3, 1), (5, 0), (6, 0), (7, 0), (8, 0), (9, 1), (10, 2), (11, 5)]

    def test_sample_polygon_matches_brute_force(self, sample11):
        pts = valuation_points(sample11, 2)
        assert tuple(envelope_vertices(pts)) == FIG2_VERTICES
        inner = [i for i, _ in pts[1:-1]]
        passing = [
            (0, *sub, 11)
            for r in range(len(inner) + 1)
            for sub in itertools.combinations(inner, r)
            if verify_vertex_conditions((0, *sub, 11), sample11, 2)
        ]
        assert passing == [(0, 1, 5, 8, 10, 11)]

    def test_eisenstein_single_segment(self):
        poly = build_polygon(parse_poly("x^2+2x+2"), 2)
        assert poly.vertices == ((0, 1), (2, 0))
        (edge,) = poly.edges
        assert edge.slope == Fraction(-1, 2)
        assert poly.segment_widths() == [2]

    def test_family_one_both_primes(self):
        f = family(1, 2, 3)
        at2, at3 = build_polygon(f, 2), build_polygon(f, 3)
        assert at2.vertices == ((0, 0), (6, 2))
        assert (at2.edges[0].multiplicity, at2.edges[0].segment_width) == (2, 3)
        assert at2.segment_widths() == [3, 3]
        assert at3.vertices == ((0, 3), (6, 0))
        assert (at3.edges[0].multiplicity, at3.edges[0].segment_width) == (3, 2)
        assert at3.segment_widths() == [2, 2, 2]

    def test_zero_coefficients_are_skipped(self):
        poly = build_polygon(parse_poly("x^4+4"), 2)
        assert poly.vertices == ((0, 2), (4, 0))
        assert poly.segment_widths() == [2, 2]

    def test_flat(self):
        poly = build_polygon(IntPoly([1, 1, 1, 1, 1, 1, 1]), 2)
        assert poly.is_flat() and poly.segment_widths() == [1] * 6

    @pytest.mark.parametrize("coeffs", [[0, 1, 1], [5], [0]])
    def test_rejects(self, coeffs):
        with pytest.raises(ValueError):
            build_polygon(IntPoly(coeffs), 2)

    def test_serialization(self):
        d = build_polygon(parse_poly("x^2+2x+2"), 2).to_dict()
        assert d == {
            "prime": 2,
            "vertices": [[0, 1], [2, 0]],
            "edges": [{"start": [0, 1], "end": [2, 0], "slope": [-1, 2], "m": 1, "x": 2}],
            "segment_widths": [2],
        }


class TestWidths:
    def test_examples(self, sample11):
        assert sorted(segment_widths(build_polygon(sample11, 2))) == [1] * 7 + [2, 2]
        assert segment_widths(build_polygon(parse_poly("x^2+2x+2"), 2)) == [2]
        assert segment_widths(build_polygon(family(1, 2, 3), 3)) == [2, 2, 2]


class TestVertexConditions:
    def test_examples(self, sample11):
        assert verify_vertex_conditions([0, 1, 5, 8, 10, 11], sample11, 2)
        assert not verify_vertex_conditions([0, 11], sample11, 2)
        assert verify_vertex_conditions([0, 2], parse_poly("x^2+2x+2"), 2)

    def test_collinear_interior_point_is_not_a_vertex(self, sample11):
        assert not verify_vertex_conditions([0, 1, 3, 5, 8, 10, 11], sample11, 2)

    @pytest.mark.parametrize("claim", [[0, 12], [0, 4], [1, 11], [0, 5, 5, 11], [0]])
    def test_errors(self, sample11, claim):
        with pytest.raises(ValueError):
            verify_vertex_conditions(claim, sample11, 2)

    def test_zero_coefficient_vertex(self):
        with pytest.raises(ValueError):
            verify_vertex_conditions([0, 2, 4], parse_poly("x^4+4"), 2)


@given(polys(max_degree=7, bound=200, nonzero_ends=True, min_degree=1), small_primes)
def test_hull_matches_envelope_oracle(f, p):
    pts = valuation_points(f, p)
    poly = build_polygon(f, p)
    assert list(poly.vertices) == envelope_vertices(pts)
    # every point on or above every edge's supporting line
    for e in poly.edges:
        for i, v in pts:
            assert (v - e.start[1]) * e.width >= e.height * (i - e.start[0])


@given(polys(max_degree=6, bound=60, nonzero_ends=True, min_degree=1), small_primes)
def test_only_true_vertex_set_passes(f, p):
    poly = build_polygon(f, p)
    n = f.degree
    inner = [i for i in range(1, n) if f.coeffs[i]]
    truth = tuple(x for x, _ in poly.vertices)
    for r in range(len(inner) + 1):
        for sub in itertools.combinations(inner, r):
            claim = (0, *sub, n)
            assert verify_vertex_conditions(claim, f, p) == (claim == truth)


@given(polys(max_degree=8, bound=10**6, nonzero_ends=True, min_degree=1), small_primes)
def test_polygon_invariants(f, p):
    poly = build_polygon(f, p)
    slopes = [e.slope for e in poly.edges]
    assert all(a < b for a, b in zip(slopes, slopes[1:]))
    seg_slopes = [s.slope for s in poly.segments]
    assert all(a <= b for a, b in zip(seg_slopes, seg_slopes[1:]))
    assert sum(poly.segment_widths()) == f.degree
    for s in poly.segments:
        assert math.gcd(abs(s.height), s.width) == 1
    for e in poly.edges:
        assert e.multiplicity * e.segment_width == e.width
    assert poly.vertices[0][0] == 0 and poly.vertices[-1][0] == f.degree


@given(polys(max_degree=8, bound=500, nonzero_ends=True, min_degree=1), small_primes)
def test_reciprocal_symmetry(f, p):
    a, b = build_polygon(f, p), build_polygon(reciprocal(f), p)
    assert sorted(a.segment_widths()) == sorted(b.segment_widths())
    assert [-s.slope for s in reversed(a.segments)] == [s.slope for s in b.segments]


@given(polys(max_degree=8, bound=500, nonzero_ends=True, min_degree=1), small_primes)
def test_built_vertices_verify(f, p):
    assert verify_vertex_conditions([x for x, _ in build_polygon(f, p).vertices], f, p)


def test_from_segments_round_trip(sample11):
    poly = build_polygon(sample11, 2)
    assert NewtonPolygon.from_segments(2, 4, list(reversed(poly.segments))) == poly


class TestShape:
    def test_single_negative(self):
        assert classify_shape(build_polygon(parse_poly("x^2+2x+2"), 2)).tag is Shape.SINGLE_EDGE_NEG

    def test_family_two_corner(self):
        # valuations at 2 are 1,1,1,1,0,1,1
        shape = classify_shape(build_polygon(family(2, 2, 3), 2))
        assert shape == (Shape.NEG_THEN_POS, 4)

    def test_sample_polygon(self, sample11):
        assert classify_shape(build_polygon(sample11, 2)).tag is Shape.THREE_OR_MORE_EDGES

    @pytest.mark.parametrize(
        "coeffs, p, tag, corner",
        [
            ([1, 2, 4], 2, Shape.SINGLE_EDGE_POS, None),
            ([1, 1, 1], 2, Shape.SINGLE_EDGE_ZERO, None),
            ([1, 1, 1, 2], 2, Shape.ZERO_THEN_POS, 2),
            ([2, 1, 1], 2, Shape.NEG_THEN_ZERO, 1),
            ([1, 2, 8], 2, Shape.POS_THEN_POS, 1),
            ([8, 2, 1], 2, Shape.NEG_THEN_NEG, 1),
        ],
    )
    def test_all_two_edge_tags(self, coeffs, p, tag, corner):
        assert classify_shape(build_polygon(IntPoly(coeffs), p)) == (tag, corner)

    @given(polys(max_degree=8, bound=200, nonzero_ends=True, min_degree=1), small_primes)
    def test_tag_consistent_with_edges(self, f, p):
        poly = build_polygon(f, p)
        shape = classify_shape(poly)
        if len(poly.edges) >= 3:
            assert shape.tag is Shape.THREE_OR_MORE_EDGES
        else:
            assert shape.tag.value.count("Then") == len(poly.edges) - 1
            assert (shape.corner is None) == (len(poly.edges) == 1)
