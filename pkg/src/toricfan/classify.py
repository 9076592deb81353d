"""Minimal models and blow-up chain invariants.

Every smooth complete toric surface contracts, by repeatedly blowing
down (-1)-rays, to the projective plane or to a Hirzebruch surface F_n
with n != 1.  The search below explores every contraction order with
memoization, so the minimum n over all descriptions is found, not just
the one preferred by a particular contraction strategy.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IsProjectivePlane
from .fan import (
    BlowupSequence,
    Fan2D,
    blow_down,
    contractible_rays,
    make_sequence,
    replay,
    self_intersections,
)


@dataclass(frozen=True)
class ModelTag:
    kind: str  # "P2" or "Hirzebruch"
    n: int | None = None

    def __str__(self):
        return "P2" if self.kind == "P2" else f"Hirzebruch({self.n})"


@dataclass(frozen=True)
class ClassificationReport:
    minimal_models: tuple[tuple[ModelTag, BlowupSequence], ...]
    n_min: int
    l: int
    l0: int
    l_witnesses_disagree: bool


def _leaf_tag(f: Fan2D) -> ModelTag:
    if len(f) == 3:
        return ModelTag("P2")
    if len(f) == 4:
        return ModelTag("Hirzebruch", max(self_intersections(f)))
    raise AssertionError(f"uncontractible fan with {len(f)} rays")


def _contractions(f: Fan2D):
    """Map each leaf fan reachable from f to one witness step list such
    that replay(leaf, steps) == f.  Memoized over canonical fans."""
    memo: dict[Fan2D, dict[Fan2D, tuple]] = {}

    def go(g: Fan2D) -> dict[Fan2D, tuple]:
        if g in memo:
            return memo[g]
        down = contractible_rays(g)
        if not down or len(g) == 3:
            memo[g] = {g: ()}
            return memo[g]
        leaves: dict[Fan2D, tuple] = {}
        for i in down:
            child, step = blow_down(g, i)
            for leaf, steps in go(child).items():
                leaves.setdefault(leaf, steps + (step,))
        memo[g] = leaves
        return leaves

    return go(f)


def minimal_models(f: Fan2D) -> list[tuple[ModelTag, BlowupSequence]]:
    """Distinct minimal models of f, each with one blow-up witness whose
    replay from the model lands exactly on f."""
    found: dict[ModelTag, BlowupSequence] = {}
    for leaf, steps in sorted(_contractions(f).items(), key=lambda kv: kv[0].rays):
        tag = _leaf_tag(leaf)
        if tag not in found:
            found[tag] = make_sequence(leaf, steps)
    return sorted(found.items(), key=lambda kv: (kv[0].kind, kv[0].n or 0))


def _witnesses_at_minimal_n(f: Fan2D):
    """All (n, steps-from-the-F_n-model) pairs realizing the minimal n.

    A P2 leaf contributes through F_1 = Bl(P2): the fan one contraction
    above the leaf is a 4-ray fan equivalent to F_1, so its witness is
    the leaf witness minus the first (re-inserting) step.
    """
    if len(f) == 3:
        raise IsProjectivePlane("blow up one fixed point first (F_1 = Bl(P2))")
    candidates = []  # (n, base_fan, steps)
    for leaf, steps in _contractions(f).items():
        tag = _leaf_tag(leaf)
        if tag.kind == "P2":
            candidates.append((1, replay(leaf, steps[:1]), steps[1:]))
        else:
            candidates.append((tag.n, leaf, steps))
    n_min = min(n for n, _, _ in candidates)
    return n_min, [(base, steps) for n, base, steps in candidates if n == n_min]


def minimal_n(f: Fan2D) -> int:
    return _witnesses_at_minimal_n(f)[0]


def _chain_length(steps) -> int:
    """Longest chain of inserted rays in which each one is a summand
    parent of the next (the purely-iterated blow-up length)."""
    best = 0
    depth_of = {}  # inserted ray -> longest chain ending there
    for s in steps:
        d = 1 + max(depth_of.get(s.left, 0), depth_of.get(s.right, 0))
        depth_of[s.inserted] = d
        best = max(best, d)
    return best


def iteration_invariants(f: Fan2D) -> ClassificationReport:
    """n_min, the maximal purely-iterated blow-up length l, and l0 = l + 1.

    l is maximized over every witness description found at the minimal
    n; a flag records whether different witnesses gave different values.
    """
    n_min, witnesses = _witnesses_at_minimal_n(f)
    lengths = sorted({_chain_length(steps) for _, steps in witnesses})
    l = lengths[-1]
    return ClassificationReport(
        minimal_models=tuple(minimal_models(f)),
        n_min=n_min,
        l=l,
        l0=l + 1,
        l_witnesses_disagree=len(lengths) > 1,
    )
