"""Asymptotic growth of sections, exact volumes, self-intersection numbers.

The growth rate of h^i under dilation is an exact weighted volume sum,
never a numerical limit; a dilation probe shows the convergence that
the exact value predicts, and the alternating sum reproduces the top
self-intersection number.

Run:  python demos/03_asymptotic_growth.py
"""

from toricvol import asymptotic_rr_check, divisor, ehrhart_probe, hhat, mixed_partial_h0, ray_divisor, self_intersection
from toricvol.divisor import scale
from toricvol.fixtures import p1, p1xp1, p2, weighted_p112

plane = p2()
d = scale(ray_divisor(plane, 0), 3)
print("Growth vector of 3x the hyperplane class:", hhat(plane, d))
print("Dilation probe m, count * n!/m^n:")
for m, value in ehrhart_probe(plane, ray_divisor(plane, 0), range(3), 8):
    print(f"  m={m:<2} -> {value}  ({float(value):.4f})")

line = p1()
anti = scale(ray_divisor(line, 0), -2)
print()
print("Degree -2 on the line: growth sits in degree 1:", hhat(line, anti))

quadric = p1xp1()
mixed = divisor([2, 0, -3, 0])
print()
print("Mixed class on the quadric:", hhat(quadric, mixed))
lhs, rhs = asymptotic_rr_check(quadric, mixed)
print("Self-intersection vs alternating growth sum:", lhs, "=", rhs)

print()
print("Self-intersection via signed volumes, both signs give the square:")
for k in (3, -3):
    print(f"  ({k} * hyperplane)^2 =", self_intersection(plane, scale(ray_divisor(plane, 0), k)))

print()
print("Exact derivatives of the growth polynomial on an open chamber:")
print("  plane, d^2/dD_0 dD_1 =", mixed_partial_h0(plane, d, [0, 1]), "(unimodular cone: 2!/1)")
weighted = weighted_p112()
print("  weighted plane P(1,1,2), d^2 over the index-2 cone =",
      mixed_partial_h0(weighted, divisor([1, 1, 1]), [2, 0]), "(2!/2)")
