"""Compute the obstruction coefficients for two polarizations: the
square-symmetric polytope of X_1 (everything vanishes) and a trapezoid
polarization of F_1 (nonvanishing Futaki character).

Run with:  python3 demos/obstruction_walkthrough.py
"""

from toricfan import (
    delta_j,
    format_report,
    hirzebruch,
    lattice_count,
    obstruction,
    polytope_from_heights,
)
from toricfan.render import polytope_ascii

print("The moment polytope of X_1 with its symmetric polarization:")
p = delta_j(1)
print(polytope_ascii(p))
for k in range(4):
    count, total = lattice_count(p, k)
    print(f"  k = {k}: {count} lattice points, coordinate sum {total}")
print()
print(format_report(obstruction(p)))

print("A trapezoid polarization of F_1 (support heights 0, 0, 1, 2):")
heights = {(0, -1): 0, (1, 0): 0, (0, 1): 1, (-1, -1): 2}
q = polytope_from_heights(hirzebruch(1), heights)
print(polytope_ascii(q))
print(format_report(obstruction(q)))
print("F_1 above is the Futaki character; it does not vanish, so this")
print("polarization fails the symmetry-forced vanishing enjoyed by delta_j.")
