"""Figure-style drawings of fans and polytopes.

Both renderers are deterministic: the same object and format always
produce identical bytes (golden-file friendly).  ASCII mimics the dotted
lattice pictures used for fans: a dot grid with one marker per ray tip
(rays are primitive, so the tip is the only lattice point on the open
segment).  SVG draws arrows from the origin on a unit grid.
"""

from __future__ import annotations

from math import gcd

from .fan import Fan2D
from .polytope import LatticePolytope

SVG_FORMAT_VERSION = 1
_CELL = 24  # px per lattice unit


def fan_ascii(f: Fan2D) -> str:
    radius = max(max(abs(x), abs(y)) for x, y in f.rays) + 1
    size = 2 * radius + 1
    grid = [["."] * size for _ in range(size)]
    grid[radius][radius] = "o"
    for x, y in f.rays:
        grid[radius - y][radius + x] = "*"
    return "\n".join(" ".join(row) for row in grid) + "\n"


def polytope_ascii(p: LatticePolytope) -> str:
    xs = [x for x, _ in p.vertices]
    ys = [y for _, y in p.vertices]
    x0, x1 = min(xs) - 1, max(xs) + 1
    y0, y1 = min(ys) - 1, max(ys) + 1
    grid = [["."] * (x1 - x0 + 1) for _ in range(y1 - y0 + 1)]

    def put(x, y, ch):
        grid[y1 - y][x - x0] = ch

    for (px, py), (qx, qy) in p.edges():
        steps = gcd(abs(qx - px), abs(qy - py))
        for t in range(1, steps):
            put(px + (qx - px) * t // steps, py + (qy - py) * t // steps, "+")
    for x, y in p.vertices:
        put(x, y, "#")
    return "\n".join(" ".join(row) for row in grid) + "\n"


def _svg_open(x0, y0, x1, y1):
    w = (x1 - x0) * _CELL
    h = (y1 - y0) * _CELL
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f"<!-- toricfan svg format v{SVG_FORMAT_VERSION} -->",
        '<defs><marker id="tip" markerWidth="8" markerHeight="8" refX="6" refY="3" '
        'orient="auto"><path d="M0,0 L6,3 L0,6 z"/></marker></defs>',
    ]


def _px(x, y, x0, y1):
    # lattice coords -> pixel coords, y axis flipped
    return (x - x0) * _CELL, (y1 - y) * _CELL


def _grid_dots(x0, y0, x1, y1):
    dots = []
    for y in range(y0, y1 + 1):
        for x in range(x0, x1 + 1):
            px, py = _px(x, y, x0, y1)
            dots.append(f'<circle cx="{px}" cy="{py}" r="1.5" fill="#999"/>')
    return dots

def fan_svg(f: Fan2D) -> str:
    radius = max(max(abs(x), abs(y)) for x, y in f.rays) + 1
    x0 = y0 = -radius
    x1 = y1 = radius
    parts = _svg_open(x0, y0, x1, y1)
    parts.extend(_grid_dots(x0, y0, x1, y1))
    ox, oy = _px(0, 0, x0, y1)
    for x, y in f.rays:
        tx, ty = _px(x, y, x0, y1)
        parts.append(
            f'<line x1="{ox}" y1="{oy}" x2="{tx}" y2="{ty}" '
            'stroke="#000" stroke-width="1.5" marker-end="url(#tip)"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def polytope_svg(p: LatticePolytope) -> str:
    xs = [x for x, _ in p.vertices]
    ys = [y for _, y in p.vertices]
    x0, x1 = min(xs) - 1, max(xs) + 1
    y0, y1 = min(ys) - 1, max(ys) + 1
    parts = _svg_open(x0, y0, x1, y1)
    parts.extend(_grid_dots(x0, y0, x1, y1))
    points = " ".join("{},{}".format(*_px(x, y, x0, y1)) for x, y in p.vertices)
    parts.append(f'<polygon points="{points}" fill="none" stroke="#000" stroke-width="1.5"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
