"""Walk a Hirzebruch surface up to its reference surface, step by step.

Run with:  python3 demos/stabilize_walkthrough.py
"""

from toricfan import (
    bound,
    hirzebruch,
    iteration_invariants,
    replay,
    sb_depth,
    stabilize,
    xj_fan,
)
from toricfan.render import fan_ascii

n = 2
f = hirzebruch(n)
print(f"Start from the Hirzebruch surface F_{n}:")
print(fan_ascii(f))

report = iteration_invariants(f)
print(f"minimal models: {[str(t) for t, _ in report.minimal_models]}")
print(f"invariants: n_min = {report.n_min}, l = {report.l}, l0 = {report.l0}")
print(f"worst-case blow-up budget: {bound(f)}\n")

seq, j = stabilize(f)
print(f"stabilize found {len(seq.steps)} blow-ups landing on X_{j}:")
g = f
for k, step in enumerate(seq.steps, start=1):
    g = replay(g, [step])
    depth = sb_depth(step.inserted)
    print(f"  {k:2d}. insert {step.inserted} = {step.left} + {step.right}"
          f"   (depth {depth}, {len(g)} rays)")

print(f"\nResult has {len(seq.result)} rays; X_{j} has {len(xj_fan(j))}.")
print(fan_ascii(seq.result))
