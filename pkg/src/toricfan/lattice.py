"""Exact integer lattice primitives in Z^2.

Rays are plain ``(x, y)`` tuples of Python ints (arbitrary precision).
Nothing in here, or anywhere downstream, touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ZeroVector

Vec = tuple[int, int]

AXES: tuple[Vec, ...] = ((1, 0), (0, 1), (-1, 0), (0, -1))


def primitive(v) -> Vec:
    """Divide v by gcd(|x|, |y|); the result generates the same ray."""
    x, y = v
    if x == 0 and y == 0:
        raise ZeroVector("(0,0) spans no ray")
    g = gcd(abs(x), abs(y))
    return (x // g, y // g)


def is_primitive(v) -> bool:
    x, y = v
    return (x, y) != (0, 0) and gcd(abs(x), abs(y)) == 1


def det2(a: Vec, b: Vec) -> int:
    return a[0] * b[1] - a[1] * b[0]


def sb_depth(v: Vec) -> int:
    """Generation of a primitive vector in the mediant (Stern-Brocot) tree.

    The four axis vectors have depth 0.  Any other primitive vector lies
    strictly inside one quadrant and is the sum of two unique primitive
    parents closer to the quadrant's axes; its depth is 1 + the larger
    parent depth.  Folding into the positive quadrant, that depth equals
    the sum of the quotients of the Euclidean algorithm on (|x|, |y|):
    each subtractive step v -> v - parent walks one tree level down.
    """
    x, y = abs(v[0]), abs(v[1])
    if (x and y and gcd(x, y) != 1) or (x == 0 and y == 0):
        raise ValueError(f"not primitive: {v}")
    depth = 0
    while y:
        depth += x // y
        x, y = y, x % y
    return depth


def sb_parents(v: Vec) -> tuple[Vec, Vec]:
    """The two mediant parents of a primitive non-axis vector.

    Returns (a, b) with a + b = v and det2(a, b) = +-1, both of strictly
    smaller depth.  Found by walking the Stern-Brocot tree of the
    quadrant containing v from its two axis corners.
    """
    sx = -1 if v[0] < 0 else 1
    sy = -1 if v[1] < 0 else 1
    x, y = abs(v[0]), abs(v[1])
    if x == 0 or y == 0:
        raise ValueError(f"axis vector has no parents: {v}")
    a, b = (1, 0), (0, 1)  # quadrant corners, in folded coordinates
    m = (1, 1)
    while m != (x, y):
        # x/y compared with m.x/m.y decides which subtree holds v
        if x * m[1] > m[0] * y:
            b = m  # v is between a and the mediant
        else:
            a = m
        m = (a[0] + b[0], a[1] + b[1])
    return (sx * a[0], sy * a[1]), (sx * b[0], sy * b[1])


def rays_of_depth_at_most(j: int) -> list[Vec]:
    """All primitive vectors of depth <= j, in counterclockwise order
    starting from (1, 0).  There are exactly 2^(j+2) of them."""
    quadrant = [(1, 0), (0, 1)]
    for _ in range(j):
        refined = [quadrant[0]]
        for a, b in zip(quadrant, quadrant[1:]):
            refined.append((a[0] + b[0], a[1] + b[1]))
            refined.append(b)
        quadrant = refined
    out: list[Vec] = []
    arc = quadrant[:-1]
    for _ in range(4):
        out.extend(arc)
        arc = [(-y, x) for x, y in arc]  # rotate the quarter-arc by 90 degrees
    return out


@dataclass(frozen=True)
class UnimodularMap:
    """Lattice automorphism of Z^2, as a 2x2 integer matrix (a b; c d)."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise ValueError(f"determinant {self.det} not +-1")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def apply(self, v: Vec) -> Vec:
        return (self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1])

    def compose(self, other: "UnimodularMap") -> "UnimodularMap":
        """self after other."""
        return UnimodularMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "UnimodularMap":
        s = self.det  # +-1, so the adjugate divided by det stays integral
        return UnimodularMap(s * self.d, -s * self.b, -s * self.c, s * self.a)

    @staticmethod
    def identity() -> "UnimodularMap":
        return UnimodularMap(1, 0, 0, 1)

    @staticmethod
    def from_basis_pair(src: tuple[Vec, Vec], dst: tuple[Vec, Vec]) -> "UnimodularMap":
        """The integer map sending basis src to basis dst.

        Both pairs must have determinant +-1; the result is dst * src^-1.
        """
        (p, q), (r, s) = src, dst
        ds = det2(p, q)
        if ds not in (1, -1):
            raise ValueError("source pair is not a lattice basis")
        # [r s] * [p q]^-1, with the inverse written via the adjugate
        return UnimodularMap(
            (r[0] * q[1] - s[0] * p[1]) * ds,
            (-r[0] * q[0] + s[0] * p[0]) * ds,
            (r[1] * q[1] - s[1] * p[1]) * ds,
            (-r[1] * q[0] + s[1] * p[0]) * ds,
        )
