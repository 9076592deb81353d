"""Moment polytopes and the combinatorial obstruction coefficients.

For a lattice polygon D and dilation factor k, E(k) counts the lattice
points of kD and s(k) is their coordinate sum (a vector).  Both are
polynomials in k (degree 2 and 3), recovered here by exact interpolation
from direct enumeration.  The obstruction polynomial is

    Vol(D) * s(k) - k * E(k) * integral_D x dv

whose vector coefficients F_0..F_3 must all vanish for the polarization
to pass the asymptotic Chow-polystability test; F_1 alone is the toric
Futaki character.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from .errors import (
    CapExceeded,
    EmptyPolytope,
    InterpolationInconsistent,
    NotAmple,
    ParseError,
)
from .fan import Fan2D, parse_rays, validate
from .lattice import Vec, primitive, sb_depth, sb_parents
from .stabilize import XJ_CAP, xj_fan

QVec = tuple[Fraction, Fraction]

ZERO_Q: QVec = (Fraction(0), Fraction(0))


@dataclass(frozen=True)
class LatticePolytope:
    vertices: tuple[Vec, ...]

    def __len__(self):
        return len(self.vertices)

    def edges(self):
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]


def normal_fan(vertices) -> Fan2D:
    """Inward primitive edge normals, in edge order."""
    n = len(vertices)
    normals = []
    for i in range(n):
        (px, py), (qx, qy) = vertices[i], vertices[(i + 1) % n]
        dx, dy = qx - px, qy - py
        normals.append(primitive((-dy, dx)))
    return validate(normals)


def validate_polytope(vertices) -> LatticePolytope:
    """Counterclockwise strictly convex lattice polygon whose normal fan
    is smooth and complete (a Delzant polygon)."""
    vertices = [tuple(v) for v in vertices]
    if len(vertices) < 3:
        raise ParseError(f"{len(vertices)} vertices, need at least 3")
    for v in vertices:
        if len(v) != 2 or not all(isinstance(c, int) for c in v):
            raise ParseError(f"not an integer pair: {v!r}")
    n = len(vertices)
    for i in range(n):
        p = vertices[i]
        q = vertices[(i + 1) % n]
        r = vertices[(i + 2) % n]
        cross = (q[0] - p[0]) * (r[1] - q[1]) - (q[1] - p[1]) * (r[0] - q[0])
        if cross <= 0:
            raise ParseError(f"not strictly convex counterclockwise at vertex {q}")
    normal_fan(vertices)  # raises if the edge normals are not a smooth fan
    return LatticePolytope(tuple(vertices))


def polytope_from_heights(f: Fan2D, heights: dict) -> LatticePolytope:
    """Vertices of { x : <x, v> >= -heights[v] for all rays v of f }.

    Each adjacent ray pair is a lattice basis, so every vertex is the
    integral solution of a unimodular 2x2 system.  Strict convexity of
    the support function is verified: each vertex must satisfy every
    non-defining inequality strictly, and no facet may degenerate.
    """
    rays = f.rays
    if set(heights) != set(rays):
        raise ParseError("heights must be given on exactly the rays of the fan")
    n = len(rays)
    verts = []
    for i in range(n):
        (a, b), (c, d) = rays[i], rays[(i + 1) % n]
        bi, bj = heights[rays[i]], heights[rays[(i + 1) % n]]
        verts.append((-d * bi + b * bj, c * bi - a * bj))
    feasible = [
        p for p in verts if all(p[0] * v[0] + p[1] * v[1] >= -heights[v] for v in rays)
    ]
    if not feasible:
        raise EmptyPolytope("the height inequalities have no common vertex")
    for i in range(n):
        p, v = verts[i], rays[i]
        for k, w in enumerate(rays):
            lhs = p[0] * w[0] + p[1] * w[1]
            defining = k in (i, (i + 1) % n)
            if defining:
                if lhs != -heights[w]:
                    raise AssertionError("unimodular solve failed")
            elif lhs <= -heights[w]:
                raise NotAmple(f"support function not strictly convex at ray {w}")
    if len(set(verts)) != n:
        raise NotAmple("some facet is empty; the normal fan coarsens")
    return validate_polytope(verts)


def delta_j(j: int) -> LatticePolytope:
    """A square-symmetric Delzant polygon with normal fan X_j.

    Built from support heights on the X_j fan: the axis rays get a base
    height and each deeper ray cuts the corner of its two mediant
    parents at a geometrically shrinking depth.  The base height doubles
    until the heights validate (they do on the first try for small j).
    """
    if j < 0 or j > XJ_CAP:
        raise CapExceeded(f"j = {j} outside [0, {XJ_CAP}]")
    fan = xj_fan(j)
    by_depth = sorted(fan.rays, key=sb_depth)
    scale = 1
    while True:
        heights = {}
        for v in by_depth:
            d = sb_depth(v)
            if d == 0:
                heights[v] = scale * 4**j
            else:
                a, b = sb_parents(v)
                heights[v] = heights[a] + heights[b] - 4 ** (j - d)
        try:
            return polytope_from_heights(fan, heights)
        except (NotAmple, EmptyPolytope):
            if scale > 16:
                raise
            scale *= 2


def lattice_count(p: LatticePolytope, k: int) -> tuple[int, Vec]:
    """Exact count and coordinate sum of the lattice points of the k-th
    dilate, by a row sweep with exact rational edge intersections."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return 1, (0, 0)
    verts = [(k * x, k * y) for x, y in p.vertices]
    ymin = min(y for _, y in verts)
    ymax = max(y for _, y in verts)
    count = 0
    sum_x = 0
    sum_y = 0
    edges = [(verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))]
    for y in range(ymin, ymax + 1):
        xs = []
        for (px, py), (qx, qy) in edges:
            if py == qy:
                if py == y:
                    xs.append(Fraction(px))
                    xs.append(Fraction(qx))
            elif min(py, qy) <= y <= max(py, qy):
                xs.append(Fraction(px) + Fraction((y - py) * (qx - px), qy - py))
        lo, hi = ceil(min(xs)), floor(max(xs))
        if lo > hi:
            continue
        width = hi - lo + 1
        count += width
        sum_x += (lo + hi) * width // 2
        sum_y += y * width
    return count, (sum_x, sum_y)


def geometry(p: LatticePolytope) -> tuple[Fraction, QVec]:
    """Exact euclidean area and first moment (integral of x over p),
    via the shoelace formula and a signed triangulation from the origin."""
    twice_area = 0
    mx = Fraction(0)
    my = Fraction(0)
    for (px, py), (qx, qy) in p.edges():
        cross = px * qy - py * qx
        twice_area += cross
        # triangle (0, P, Q): signed area cross/2, centroid (P+Q)/3
        mx += Fraction(cross * (px + qx), 6)
        my += Fraction(cross * (py + qy), 6)
    return Fraction(twice_area, 2), (mx, my)


def _interpolate_cubic(values) -> list[Fraction]:
    """Coefficients c0..c3 of the cubic through (k, values[k]), k = 0..3,
    by Lagrange basis expansion in exact rationals."""
    coeffs = [Fraction(0)] * 4
    for i, yi in enumerate(values):
        basis = [Fraction(1)]
        denom = 1
        for m in range(4):
            if m == i:
                continue
            denom *= i - m
            # multiply the basis polynomial by (x - m)
            shifted = [Fraction(0)] + basis
            basis = [shifted[t] - m * (basis[t] if t < len(basis) else 0) for t in range(len(shifted))]
        scale = Fraction(yi, denom)
        for t, c in enumerate(basis):
            coeffs[t] += scale * c
    return coeffs


def _poly_eval(coeffs, k: int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * k + c
    return acc


def obstruction(p: LatticePolytope) -> ObstructionReport:
    """Interpolate E and s from the enumerations at k = 0..3, verify the
    fits at k = 4, and assemble the obstruction coefficients."""
    counts = [lattice_count(p, k) for k in range(5)]
    e_coeffs = _interpolate_cubic([c for c, _ in counts[:4]])
    sx_coeffs = _interpolate_cubic([s[0] for _, s in counts[:4]])
    sy_coeffs = _interpolate_cubic([s[1] for _, s in counts[:4]])
    if e_coeffs[3] != 0:
        raise InterpolationInconsistent("lattice point count is not quadratic in k")
    checks = (
        _poly_eval(e_coeffs, 4) == counts[4][0]
        and _poly_eval(sx_coeffs, 4) == counts[4][1][0]
        and _poly_eval(sy_coeffs, 4) == counts[4][1][1]
    )
    if not checks:
        raise InterpolationInconsistent("k = 4 enumeration disagrees with the fit")
    volume, moment = geometry(p)
    # F_i = Vol * s_i - E_{i-1} * moment, from Vol*s(k) - k*E(k)*moment
    e_shifted = [Fraction(0)] + e_coeffs[:3]
    f_coeffs = tuple(
        (
            volume * sx_coeffs[i] - e_shifted[i] * moment[0],
            volume * sy_coeffs[i] - e_shifted[i] * moment[1],
        )
        for i in range(4)
    )
    assert f_coeffs[0] == ZERO_Q and f_coeffs[3] == ZERO_Q
    return ObstructionReport(
        volume=volume,
        moment=moment,
        ehrhart=tuple(e_coeffs[:3]),
        weight_sum=tuple((sx_coeffs[i], sy_coeffs[i]) for i in range(4)),
        f_coeffs=f_coeffs,
        futaki_vanishes=f_coeffs[1] == ZERO_Q,
        mabuchi_vanishes=all(c == ZERO_Q for c in f_coeffs),
    )


@dataclass(frozen=True)
class ObstructionReport:
    volume: Fraction
    moment: QVec
    ehrhart: tuple[Fraction, Fraction, Fraction]
    weight_sum: tuple[QVec, QVec, QVec, QVec]
    f_coeffs: tuple[QVec, QVec, QVec, QVec]
    futaki_vanishes: bool
    mabuchi_vanishes: bool


# --- text formats -----------------------------------------------------------


def parse_polytope(text: str) -> LatticePolytope:
    return validate_polytope(parse_rays(text))


def serialize_polytope(p: LatticePolytope) -> str:
    return "".join(f"{x} {y}\n" for x, y in p.vertices)


def parse_heights(text: str) -> dict:
    """Height file: one `ray_x ray_y height` triple per line, '#' comments."""
    heights = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected three integers, got {raw!r}")
        try:
            x, y, h = (int(s) for s in parts)
        except ValueError:
            raise ParseError(f"line {lineno}: expected three integers, got {raw!r}") from None
        heights[(x, y)] = h
    return heights


def _q(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _qvec(v: QVec) -> str:
    return f"({_q(v[0])}, {_q(v[1])})"


def format_report(r: ObstructionReport) -> str:
    lines = [
        f"volume: {_q(r.volume)}",
        f"moment: {_qvec(r.moment)}",
        "ehrhart: " + " ".join(f"k^{i}: {_q(c)}" for i, c in enumerate(r.ehrhart)),
    ]
    for i, c in enumerate(r.weight_sum):
        lines.append(f"s k^{i}: {_qvec(c)}")
    for i, c in enumerate(r.f_coeffs):
        lines.append(f"F_{i}: {_qvec(c)}")
    lines.append(f"futaki_vanishes: {str(r.futaki_vanishes).lower()}")
    lines.append(f"mabuchi_vanishes: {str(r.mabuchi_vanishes).lower()}")
    return "\n".join(lines) + "\n"
