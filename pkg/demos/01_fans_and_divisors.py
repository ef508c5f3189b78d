"""Fans and divisors: validation, structure tests, Cartier data, ampleness.

Run:  python demos/01_fans_and_divisors.py
"""

from toricvol import (
    all_cones,
    chi_of_fan,
    divisor,
    fan_diagnostics,
    is_ample,
    is_cartier,
    is_complete,
    is_q_cartier,
    is_simplicial,
    linear_equiv_shift,
    ray_divisor,
)
from toricvol.fixtures import f1, p2, square_cone_fan

plane = p2()
print("The projective plane's fan:")
print("  rays:", plane.rays)
print("  complete:", is_complete(plane), " simplicial:", is_simplicial(plane))
print("  cones per dimension:", [len(b) for b in all_cones(plane)])
print("  alternating cone count:", chi_of_fan(plane))

print()
print("Validation catches broken input instead of computing nonsense:")
diags, _ = fan_diagnostics(2, [(2, 0), (0, 1), (-1, -1)], [{0, 1}, {1, 2}, {2, 0}])
print("  doubled first ray ->", diags)
diags, _ = fan_diagnostics(2, [(1, 0), (0, 1), (1, 1)], [{0, 1}, {0, 2}])
print("  overlapping cones ->", diags)

print()
print("Divisors are coefficient vectors over the rays; exactness throughout.")
h = ray_divisor(plane, 0)  # the hyperplane class
print("  hyperplane divisor:", h)
data = is_q_cartier(plane, h)
print("  local linear data per maximal cone:", data.u_sigma)
print("  Cartier:", is_cartier(plane, h), " ample:", is_ample(plane, h))
print("  shifted by the character (1,0):", linear_equiv_shift(plane, h, (1, 0)))

print()
print("A non-simplicial cone can break Q-Cartier-ness:")
pyramid = square_cone_fan()
print("  square-cone fan, one ray's divisor ->", is_q_cartier(pyramid, ray_divisor(pyramid, 0)))

print()
print("On the blow-up of the plane, the exceptional ray is never ample:")
blowup = f1()
print("  exceptional divisor ample:", is_ample(blowup, ray_divisor(blowup, 3)))
print("  anticanonical class ample:", is_ample(blowup, divisor([1, 1, 1, 1])))
