"""Blow up any smooth complete toric surface until it reaches a
reference surface.

The reference tower starts at X_0 = P1 x P1 and blows up every torus
fixed point at each stage, so the rays of X_j are exactly the primitive
vectors of mediant depth <= j.  Stabilization runs in two phases: first
walk the Hirzebruch index down to 0 one blow-up at a time, then fill in
the missing mediant rays level by level until the fan is the square-
symmetric one of some X_j.
"""

from __future__ import annotations

from .classify import _witnesses_at_minimal_n
from .errors import CapExceeded, IsProjectivePlane, MissingAxisRays
from .fan import (
    BlowupSequence,
    Fan2D,
    apply_map,
    blow_up,
    hirzebruch,
    is_isomorphic,
    isomorphisms,
    make_sequence,
    validate,
)
from .lattice import AXES, UnimodularMap, Vec, det2, rays_of_depth_at_most, sb_depth

XJ_CAP = 10  # 2^(j+2) rays; beyond this the fan stops being a desk object


def xj_fan(j: int) -> Fan2D:
    """The fan of X_j: all primitive vectors of depth <= j, 2^(j+2) rays."""
    if j < 0 or j > XJ_CAP:
        raise CapExceeded(f"j = {j} outside [0, {XJ_CAP}]")
    return validate(rays_of_depth_at_most(j))


def _blow_up_at_pair(f: Fan2D, a: Vec, b: Vec):
    """Blow up the cone spanned by the (unordered) adjacent pair {a, b}."""
    n = len(f.rays)
    for i in range(n):
        if {f.rays[i], f.ray(i + 1)} == {a, b}:
            return blow_up(f, i)
    raise AssertionError(f"pair {a}, {b} not adjacent")


def _f0_bases(f: Fan2D):
    """Ordered ray pairs (v, w) with -v and -w also rays and det(v, w) = 1.

    Each such quadruple {v, w, -v, -w} is an F_0 sub-fan of f, and f is an
    iterated blow-up of it (any smooth refinement of a smooth 2-cone is a
    chain of stellar subdivisions).  Conversely blow-ups only ever add
    rays, so f is a blow-up of some F_0 exactly when such a pair exists.
    """
    rays = set(f.rays)
    antipodal = [v for v in f.rays if (-v[0], -v[1]) in rays]
    for v in antipodal:
        for w in antipodal:
            if det2(v, w) == 1:
                yield v, w


def _sigma1_pairs(base: Fan2D, n: int):
    """Images of the cone spanned by (0,1) and (-1,-n) under every
    identification of the standard F_n fan with base."""
    std = hirzebruch(n)
    for m in isomorphisms(std, base):
        yield m.apply((0, 1)), m.apply((-1, -n))


def reduce_to_f0(f: Fan2D) -> BlowupSequence:
    """Blow up until the fan is an iterated blow-up of F_0.

    While the minimal Hirzebruch index n is positive, no description
    from F_n can have a blow-up inside the image of the corner cone
    sigma_1 (such a blow-up would already re-describe the surface over
    F_{n-1}, contradicting minimality), so that cone is an empty cone of
    the current fan and one blow-up there drops n by at least one.
    """
    if len(f) == 3:
        raise IsProjectivePlane("blow up one fixed point first")
    g, steps = f, []
    while next(_f0_bases(g), None) is None:  # i.e. while minimal n > 0
        n, witnesses = _witnesses_at_minimal_n(g)
        placed = False
        for base, _ in witnesses:
            for a, b in _sigma1_pairs(base, n):
                try:
                    g, step = _blow_up_at_pair(g, a, b)
                except AssertionError:
                    continue
                steps.append(step)
                placed = True
                break
            if placed:
                break
        if not placed:
            raise AssertionError("no empty sigma_1 cone at minimal n")
    return make_sequence(f, steps)


def symmetrize(f: Fan2D) -> tuple[BlowupSequence, int]:
    """Complete a fan containing the four axis rays to the fan of X_j,
    j = the maximal mediant depth among its rays.

    Missing rays are inserted by increasing depth, so both mediant
    parents of each ray are already present and adjacent, making every
    insertion a legal blow-up.  Within a depth level, rays that mirror an
    existing ray across a coordinate axis go first (the symmetry-adding
    blow-ups), then the rest, each group in lexicographic order.
    """
    present = set(f.rays)
    if not all(a in present for a in AXES):
        raise MissingAxisRays("fan does not refine the X_0 fan")
    j = max(sb_depth(v) for v in f.rays)
    mirror_closure = {(sx * x, sy * y) for x, y in f.rays for sx in (1, -1) for sy in (1, -1)}
    missing = [v for v in rays_of_depth_at_most(j) if v not in present]
    missing.sort(key=lambda v: (sb_depth(v), v not in mirror_closure, v))
    g, steps = f, []
    for v in missing:
        prev_count = len(g)
        for i in range(prev_count):
            a, b = g.rays[i], g.ray(i + 1)
            if (a[0] + b[0], a[1] + b[1]) == v:
                g, step = blow_up(g, i)
                steps.append(step)
                break
        if len(g) == prev_count:
            raise AssertionError(f"parents of {v} not adjacent")
    assert g == xj_fan(j)
    return make_sequence(f, steps), j


def _canonical_presentation(f: Fan2D) -> tuple[Fan2D, UnimodularMap]:
    """A representative of the unimodular equivalence class of f that is
    the same for every member, plus the map f -> representative.

    Each adjacent ray pair, in either order, can be sent to the standard
    basis; among those <= 2N images take the lexicographically smallest
    ray tuple.  Running the (deterministic) stabilization pipeline on the
    representative makes its choices coordinate-independent.
    """
    std = ((1, 0), (0, 1))
    best = None
    n = len(f.rays)
    for i in range(n):
        pair = (f.rays[i], f.ray(i + 1))
        for src in (pair, pair[::-1]):
            m = UnimodularMap.from_basis_pair(src, std)
            g = apply_map(f, m)
            if best is None or g.rays < best[0].rays:
                best = (g, m)
    return best


def stabilize(f: Fan2D) -> tuple[BlowupSequence, int]:
    """A blow-up sequence from f to a fan unimodularly equivalent to some
    X_j, with j minimal for this construction."""
    g, steps = f, []
    if len(g) == 3:
        g, step = blow_up(g, 0)  # P2 -> F_1
        steps.append(step)
    g, to_canon = _canonical_presentation(g)
    from_canon = to_canon.inverse()
    canon_steps = []
    reduction = reduce_to_f0(g)
    canon_steps.extend(reduction.steps)
    g = reduction.result
    # pick the F_0 description whose coordinates minimize the target j
    # (the mediant depth of a ray depends on which four rays play the axes)
    best = None
    for v, w in _f0_bases(g):
        to_std = UnimodularMap.from_basis_pair((v, w), ((1, 0), (0, 1)))
        h = apply_map(g, to_std)
        depth = max(sb_depth(r) for r in h.rays)
        if best is None or depth < best[0]:
            best = (depth, to_std, h)
    _, to_std, h = best
    sym_seq, j = symmetrize(h)
    back = to_std.inverse()
    canon_steps.extend(s.transformed(back) for s in sym_seq.steps)
    steps.extend(s.transformed(from_canon) for s in canon_steps)
    seq = make_sequence(f, steps)
    assert is_isomorphic(seq.result, xj_fan(j)) is not None
    return seq, j


def bound(f: Fan2D) -> int:
    """Upper bound 2^(n + l0 + 1) - #rays on the number of stabilization
    blow-ups, from the classification invariants of f."""
    from .classify import iteration_invariants

    report = iteration_invariants(f)
    return 2 ** (report.n_min + report.l0 + 1) - len(f)
