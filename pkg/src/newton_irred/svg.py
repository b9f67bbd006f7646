"""Dependency-free SVG drawings of Newton polygons."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .poly import IntPoly
from .polygon import NewtonPolygon, valuation_points


def polygon_svg(f: IntPoly, poly: NewtonPolygon, cell: int = 40, margin: int = 40) -> str:
    """Lattice points, hull and vertex labels; valuations grow upward."""
    pts = valuation_points(f, poly.prime)
    max_x = max(i for i, _ in pts)
    max_y = max(v for _, v in pts)
    width = 2 * margin + cell * max(max_x, 1)
    height = 2 * margin + cell * max(max_y, 1)

    def sx(x: int) -> int:
        return margin + cell * x

    def sy(y: int) -> int:
        return height - margin - cell * y

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>{escape(f'Newton polygon of {f.to_expr()} at p={poly.prime}')}</title>",
        f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(max_x)}" y2="{sy(0)}" stroke="#999"/>',
        f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(0)}" y2="{sy(max_y)}" stroke="#999"/>',
    ]
    for x in range(max_x + 1):
        for y in range(max_y + 1):
            out.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="1.5" fill="#ccc"/>')
    for i, v in pts:
        out.append(f'<circle cx="{sx(i)}" cy="{sy(v)}" r="4" fill="#000"/>')
    path = " ".join(f"{sx(x)},{sy(y)}" for x, y in poly.vertices)
    out.append(f'<polyline points="{path}" fill="none" stroke="#c00" stroke-width="2"/>')
    for x, y in poly.vertices:
        out.append(f'<text x="{sx(x) + 5}" y="{sy(y) - 6}" font-size="12">({x},{y})</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
