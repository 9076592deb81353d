"""Fans of smooth complete toric surfaces.

A fan is stored as its cyclically ordered list of primitive ray
generators, counterclockwise, with every adjacent pair a positively
oriented lattice basis (determinant +1).  The two-dimensional cones are
implicit: one per adjacent ray pair.  Fans are immutable; blow-up and
blow-down return new fans together with a record of the step performed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ClockwiseFan,
    DuplicateRay,
    IndexOutOfRange,
    NonPrimitiveRay,
    NotComplete,
    NotContractible,
    NotUnimodular,
    ParseError,
    TooFewRays,
)
from .lattice import UnimodularMap, Vec, det2, is_primitive

E1: Vec = (1, 0)


@dataclass(frozen=True)
class Fan2D:
    rays: tuple[Vec, ...]

    def __len__(self):
        return len(self.rays)

    def ray(self, i: int) -> Vec:
        return self.rays[i % len(self.rays)]

    def index_of(self, v: Vec) -> int:
        return self.rays.index(v)

    def adjacent_pairs(self):
        n = len(self.rays)
        return [(self.rays[i], self.rays[(i + 1) % n]) for i in range(n)]


@dataclass(frozen=True)
class BlowupStep:
    """One toric blow-up: the cone spanned by (left, right) is subdivided
    by inserted = left + right."""

    left: Vec
    right: Vec
    inserted: Vec

    def __post_init__(self):
        lx, ly = self.left
        rx, ry = self.right
        if self.inserted != (lx + rx, ly + ry):
            raise ValueError("inserted ray is not the sum of its parents")

    def transformed(self, m: UnimodularMap) -> "BlowupStep":
        if m.det == 1:
            return BlowupStep(m.apply(self.left), m.apply(self.right), m.apply(self.inserted))
        # orientation-reversing maps swap left and right
        return BlowupStep(m.apply(self.right), m.apply(self.left), m.apply(self.inserted))


@dataclass(frozen=True)
class BlowupSequence:
    base: Fan2D
    steps: tuple[BlowupStep, ...]
    result: Fan2D

    def __len__(self):
        return len(self.steps)


def _canonical_rotation(rays: list[Vec]) -> tuple[Vec, ...]:
    k = rays.index(min(rays))
    return tuple(rays[k:] + rays[:k])


def validate(rays) -> Fan2D:
    """Check the smooth complete fan invariants and canonicalize.

    The input may start at any ray.  Counterclockwise order is required;
    a clockwise list raises ClockwiseFan so the caller can reverse it.
    """
    rays = [tuple(r) for r in rays]
    if len(rays) < 3:
        raise TooFewRays(f"{len(rays)} rays, need at least 3")
    for r in rays:
        if len(r) != 2 or not all(isinstance(c, int) for c in r):
            raise ParseError(f"not an integer pair: {r!r}")
        if r == (0, 0) or not is_primitive(r):
            raise NonPrimitiveRay(f"{r}")
    if len(set(rays)) != len(rays):
        raise DuplicateRay("repeated ray generator")
    n = len(rays)
    dets = [det2(rays[i], rays[(i + 1) % n]) for i in range(n)]
    if any(d != 1 for d in dets):
        if all(det2(rays[(i + 1) % n], rays[i]) == 1 for i in range(n)):
            raise ClockwiseFan("rays wind clockwise; reverse ray order")
        raise NotUnimodular(next(i for i, d in enumerate(dets) if d != 1))
    # completeness: the positive x-axis must be crossed exactly once when
    # walking the half-open cones [v_i, v_{i+1}); integer arithmetic only
    crossings = 0
    for i in range(n):
        a, b = rays[i], rays[(i + 1) % n]
        if a == E1 or (det2(a, E1) > 0 and det2(E1, b) > 0):
            crossings += 1
    if crossings != 1:
        raise NotComplete(f"winding number {crossings}")
    return Fan2D(_canonical_rotation(rays))


def blow_up(f: Fan2D, cone: int) -> tuple[Fan2D, BlowupStep]:
    """Insert the sum of the adjacent pair (rays[cone], rays[cone+1])."""
    n = len(f.rays)
    if not 0 <= cone < n:
        raise IndexOutOfRange(f"cone index {cone} out of range [0, {n})")
    left, right = f.rays[cone], f.rays[(cone + 1) % n]
    inserted = (left[0] + right[0], left[1] + right[1])
    new_rays = list(f.rays[: cone + 1]) + [inserted] + list(f.rays[cone + 1 :])
    return Fan2D(_canonical_rotation(new_rays)), BlowupStep(left, right, inserted)


def blow_down(f: Fan2D, ray_index: int) -> tuple[Fan2D, BlowupStep]:
    """Remove a ray whose neighbours sum to it (a (-1)-curve)."""
    n = len(f.rays)
    if not 0 <= ray_index < n:
        raise IndexOutOfRange(f"ray index {ray_index} out of range [0, {n})")
    if n == 3:
        raise TooFewRays("cannot blow down a 3-ray fan")
    prev, v, nxt = f.ray(ray_index - 1), f.rays[ray_index], f.ray(ray_index + 1)
    if (prev[0] + nxt[0], prev[1] + nxt[1]) != v:
        raise NotContractible(f"{v} is not a (-1)-ray")
    new_rays = [r for r in f.rays if r != v]
    return Fan2D(_canonical_rotation(new_rays)), BlowupStep(prev, nxt, v)


def apply_blowup_step(f: Fan2D, step: BlowupStep) -> Fan2D:
    """Replay a recorded step; the parent pair must be adjacent in f."""
    n = len(f.rays)
    for i in range(n):
        if f.rays[i] == step.left and f.ray(i + 1) == step.right:
            return blow_up(f, i)[0]
    raise NotContractible(f"pair {step.left}, {step.right} not adjacent")


def replay(base: Fan2D, steps) -> Fan2D:
    g = base
    for step in steps:
        g = apply_blowup_step(g, step)
    return g


def make_sequence(base: Fan2D, steps) -> BlowupSequence:
    return BlowupSequence(base, tuple(steps), replay(base, steps))


def self_intersections(f: Fan2D) -> list[int]:
    """Self-intersection of the invariant divisor of each ray, in ray order.

    With adjacent determinants +1, v_{i-1} + v_{i+1} = a_i v_i for an
    integer a_i = det2(v_{i-1}, v_{i+1}), and the divisor of v_i has
    self-intersection -a_i.
    """
    n = len(f.rays)
    return [-det2(f.ray(i - 1), f.ray(i + 1)) for i in range(n)]


def contractible_rays(f: Fan2D) -> list[int]:
    return [i for i, s in enumerate(self_intersections(f)) if s == -1]


def apply_map(f: Fan2D, m: UnimodularMap) -> Fan2D:
    imgs = [m.apply(r) for r in f.rays]
    if m.det == -1:
        imgs.reverse()
    return validate(imgs)


def _candidate_maps(f: Fan2D, g: Fan2D):
    n = len(f.rays)
    src = (f.rays[0], f.rays[1])
    for k in range(n):
        yield UnimodularMap.from_basis_pair(src, (g.rays[k], g.ray(k + 1))), k, 1
        yield UnimodularMap.from_basis_pair(src, (g.ray(k + 1), g.rays[k])), k + 1, -1


def isomorphisms(f: Fan2D, g: Fan2D):
    """Yield every unimodular map carrying the ray set of f onto that of g
    respecting the cyclic order up to reversal.  Only the <= 2N maps sending
    the first adjacent pair of f to some (possibly reversed) adjacent pair
    of g can work, so the search is exhaustive."""
    if len(f.rays) != len(g.rays):
        return
    n = len(f.rays)
    for m, k, orient in _candidate_maps(f, g):
        if all(m.apply(f.rays[i]) == g.ray(k + orient * i) for i in range(n)):
            yield m


def is_isomorphic(f: Fan2D, g: Fan2D) -> UnimodularMap | None:
    return next(isomorphisms(f, g), None)


def symmetry_group(f: Fan2D) -> list[UnimodularMap]:
    """All unimodular maps sending the ray set of f to itself."""
    group = []
    for m in isomorphisms(f, f):
        if m not in group:
            group.append(m)
    return group


def p2() -> Fan2D:
    """The projective plane."""
    return validate([(1, 0), (0, 1), (-1, -1)])


def hirzebruch(n: int) -> Fan2D:
    """The Hirzebruch surface F_n; F_0 is P1 x P1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return validate([(0, -1), (1, 0), (0, 1), (-1, -n)])


# --- text format: one ray per line, '#' comments ---------------------------


def parse_rays(text: str) -> list[Vec]:
    rays = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rays.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}") from None
    return rays


def parse_fan(text: str) -> Fan2D:
    return validate(parse_rays(text))


def serialize_fan(f: Fan2D) -> str:
    return "".join(f"{x} {y}\n" for x, y in f.rays)
