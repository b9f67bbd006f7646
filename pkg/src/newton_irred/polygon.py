"""Newton polygons of integer polynomials with respect to a prime.

Hull decisions use integer cross products and slopes are ``Fraction``s,
so nothing here touches floating point.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Sequence

from .poly import IntPoly
from .valuation import INF, nu_p

Point = tuple[int, int]


class Segment(NamedTuple):
    width: int
    height: int

    @property
    def slope(self) -> Fraction:
        return Fraction(self.height, self.width)


@dataclass(frozen=True)
class Edge:
    start: Point
    end: Point

    @property
    def width(self) -> int:
        return self.end[0] - self.start[0]

    @property
    def height(self) -> int:
        return self.end[1] - self.start[1]

    @property
    def slope(self) -> Fraction:
        return Fraction(self.height, self.width)

    @property
    def multiplicity(self) -> int:
        # gcd(0, w) == w: a flat edge splits into unit segments.
        return math.gcd(abs(self.height), self.width)

    @property
    def segment_width(self) -> int:
        return self.width // self.multiplicity

    def segments(self) -> list[Segment]:
        m = self.multiplicity
        return [Segment(self.width // m, self.height // m)] * m

    def to_dict(self) -> dict:
        s = self.slope
        return {
            "start": list(self.start),
            "end": list(self.end),
            "slope": [s.numerator, s.denominator],
            "m": self.multiplicity,
            "x": self.segment_width,
        }


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of the points ``(i, nu_p(a_i))``.

    ``vertices`` holds only the corners; points lying in the interior of
    an edge are exposed through :meth:`lattice_points` and the segment
    list instead.
    """

    prime: int
    degree: int
    vertices: tuple[Point, ...]

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(Edge(a, b) for a, b in zip(self.vertices, self.vertices[1:]))

    @cached_property
    def segments(self) -> tuple[Segment, ...]:
        return tuple(s for e in self.edges for s in e.segments())

    def segment_widths(self) -> list[int]:
        return [s.width for s in self.segments]

    def lattice_points(self) -> list[Point]:
        """Every segment endpoint, left to right."""
        pts = [self.vertices[0]]
        for s in self.segments:
            x, y = pts[-1]
            pts.append((x + s.width, y + s.height))
        return pts

    def is_flat(self) -> bool:
        return all(e.height == 0 for e in self.edges)

    def to_dict(self) -> dict:
        return {
            "prime": self.prime,
            "vertices": [list(v) for v in self.vertices],
            "edges": [e.to_dict() for e in self.edges],
            "segment_widths": self.segment_widths(),
        }

    @classmethod
    def from_segments(cls, prime: int, origin: int, segments: Sequence[Segment]) -> NewtonPolygon:
        """Chain slope-sorted segments from ``(0, origin)``, merging equal slopes into edges."""
        segs = sorted(segments, key=lambda s: s.slope)
        vertices = [(0, origin)]
        last_slope = None
        for s in segs:
            x, y = vertices[-1]
            nxt = (x + s.width, y + s.height)
            if s.slope == last_slope:
                vertices[-1] = nxt
            else:
                vertices.append(nxt)
            last_slope = s.slope
        return cls(prime, vertices[-1][0], tuple(vertices))


def constant_polygon(c: int, p: int) -> NewtonPolygon:
    """Degenerate single-point polygon of a nonzero constant."""
    if c == 0:
        raise ValueError("zero constant")
    return NewtonPolygon(p, 0, ((0, nu_p(c, p)),))


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: Sequence[Point]) -> list[Point]:
    """Monotone-chain lower hull of points sorted by abscissa; collinear points dropped."""
    hull: list[Point] = []
    for pt in points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return hull


def valuation_points(f: IntPoly, p: int) -> list[Point]:
    return [(i, nu_p(a, p)) for i, a in enumerate(f.coeffs) if a != 0]


def build_polygon(f: IntPoly, p: int) -> NewtonPolygon:
    if f.is_zero() or f.degree == 0:
        raise ValueError("Newton polygon needs a polynomial of degree >= 1")
    if f.coeffs[0] == 0:
        raise ValueError("constant term is zero; factor out x first")
    return NewtonPolygon(p, f.degree, tuple(lower_hull(valuation_points(f, p))))


def segment_widths(poly: NewtonPolygon) -> list[int]:
    return poly.segment_widths()


def verify_vertex_conditions(abscissae: Sequence[int], f: IntPoly, p: int) -> bool:
    """Check whether ``abscissae`` are exactly the vertex abscissae of the polygon.

    Uses only valuations at the claimed points and the chord inequalities,
    never a hull construction, so it can audit one.
    """
    n = f.degree
    js = list(abscissae)
    if n is None or len(js) < 2:
        raise ValueError("need at least two abscissae and a nonzero polynomial")
    for j in js:
        if not 0 <= j <= n:
            raise ValueError(f"abscissa {j} out of range 0..{n}")
        if f.coeffs[j] == 0:
            raise ValueError(f"coefficient at claimed vertex {j} is zero")
    if js[0] != 0 or js[-1] != n or any(a >= b for a, b in zip(js, js[1:])):
        raise ValueError("abscissae must increase strictly from 0 to the degree")

    vals = [nu_p(a, p) for a in f.coeffs]
    slopes = [Fraction(vals[b] - vals[a], b - a) for a, b in zip(js, js[1:])]
    if any(s >= t for s, t in zip(slopes, slopes[1:])):
        return False
    for a, b in zip(js, js[1:]):
        for k in range(a + 1, b):
            if vals[k] == INF:
                continue
            # nu(a_k) >= ((b-k) nu(a_a) + (k-a) nu(a_b)) / (b-a), cleared of denominators
            if vals[k] * (b - a) < (b - k) * vals[a] + (k - a) * vals[b]:
                return False
    return True


class Shape(str, enum.Enum):
    SINGLE_EDGE_NEG = "SingleEdgeNeg"
    SINGLE_EDGE_POS = "SingleEdgePos"
    SINGLE_EDGE_ZERO = "SingleEdgeZero"
    NEG_THEN_POS = "NegThenPos"
    ZERO_THEN_POS = "ZeroThenPos"
    NEG_THEN_ZERO = "NegThenZero"
    POS_THEN_POS = "PosThenPos"
    NEG_THEN_NEG = "NegThenNeg"
    THREE_OR_MORE_EDGES = "ThreeOrMoreEdges"


class ShapeClass(NamedTuple):
    tag: Shape
    corner: int | None = None


_SIGN_NAMES = {-1: "Neg", 0: "Zero", 1: "Pos"}


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def classify_shape(poly: NewtonPolygon) -> ShapeClass:
    edges = poly.edges
    if len(edges) == 1:
        return ShapeClass(Shape("SingleEdge" + _SIGN_NAMES[_sign(edges[0].slope)]))
    if len(edges) == 2:
        a, b = (_SIGN_NAMES[_sign(e.slope)] for e in edges)
        return ShapeClass(Shape(f"{a}Then{b}"), edges[0].end[0])
    if not edges:
        raise ValueError("polygon has no edges")
    return ShapeClass(Shape.THREE_OR_MORE_EDGES)
