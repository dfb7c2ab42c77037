"""
ASCII and SVG pictures of puzzles and MS-puzzles.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .board import cell_vertices
from .puzzle import Puzzle, pieces

# one glyph per code; the equivariant rhombus is the shaded '#'
GLYPHS = {"0": "0", "1": "1", "N": "|", "B": "\\", "A": "/", "E": "#"}

FILLS = {
    "0-triangle-up": "#ffffff",
    "0-triangle-down": "#ffffff",
    "1-triangle-up": "#d9d9d9",
    "1-triangle-down": "#d9d9d9",
    "rhombus-NS": "#cfe2f3",
    "rhombus-NWSE": "#d9ead3",
    "rhombus-SWNE": "#fff2cc",
    "equivariant-rhombus": "#7f7f7f",
}


def _x(v):
    return Fraction(v[1]) - Fraction(v[0], 2)


def _centre_x(cell):
    return sum(_x(v) for v in cell_vertices(cell)) / 3


def render_ascii(P: Puzzle) -> str:
    """
    One text line per row of cells, each cell one glyph placed at twice its
    horizontal position, so the rows line up into the board's shape.
    """
    b = P.board
    left = min(_centre_x(c) for c in b.cells)
    lines = []
    for r in sorted(b.rows):
        row = b.rows[r]
        cols = {int(2 * (_centre_x(c) - left)): GLYPHS[P.code(c)] for c in row}
        width = max(cols) + 1
        lines.append("".join(cols.get(i, " ") for i in range(width)).rstrip())
    return "\n".join(lines) + "\n"


def _point(v, unit):
    row, p = v
    return (float(_x(v)) * unit, row * unit * math.sqrt(3) / 2)


def _polygon(cells, unit):
    pts = {v for c in cells for v in cell_vertices(c)}
    # shared diagonal vertices appear twice; order the rest around the centre
    xy = [_point(v, unit) for v in sorted(pts)]
    cx = sum(p[0] for p in xy) / len(xy)
    cy = sum(p[1] for p in xy) / len(xy)
    xy.sort(key=lambda p: math.atan2(p[1] - cy, p[0] - cx))
    return xy


def render_svg(P: Puzzle, unit: int = 40) -> str:
    "one polygon per piece; equivariant pieces carry class 'equivariant'"
    b = P.board
    allv = [_point(v, unit) for c in b.cells for v in cell_vertices(c)]
    minx = min(p[0] for p in allv)
    maxx = max(p[0] for p in allv)
    maxy = max(p[1] for p in allv)
    pad = unit / 4
    w = maxx - minx + 2 * pad
    h = maxy + 2 * pad
    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="%.2f" height="%.2f" viewBox="0 0 %.2f %.2f">'
        % (w, h, w, h),
        '<title>%s %d</title>' % (P.shape, P.n),
    ]
    for kind, cells in pieces(P):
        pts = " ".join("%.2f,%.2f" % (x - minx + pad, y + pad) for x, y in _polygon(cells, unit))
        cls = "equivariant" if kind == "equivariant-rhombus" else "ordinary"
        out.append(
            '<polygon class="%s" data-kind="%s" points="%s" fill="%s" stroke="#000000" stroke-width="1"/>'
            % (cls, kind, pts, FILLS[kind])
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
