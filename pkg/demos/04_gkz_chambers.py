"""The chamber decomposition of the effective cone, end to end.

The effective cone of a complete toric variety splits into finitely
many rational polyhedral chambers on which the section polytope keeps
one combinatorial shape.  On the blow-up of the plane there are exactly
two maximal chambers; crossing their wall changes the growth
polynomial, and ampleness is exactly membership in the fan's own open
chamber.

Run:  python demos/04_gkz_chambers.py
"""

from toricvol import (
    ample_via_asymptotics,
    divisor,
    enumerate_maximal_chambers,
    hhat,
    hhat0_on_chamber,
    is_ample,
    locate_chamber,
    nef_decomposition,
    normal_fan,
    support_function,
)
from toricvol.divisor import ray_divisor, scale
from toricvol.fixtures import f1, p1xp1

blowup = f1()
print("Maximal chambers of the blow-up of the plane:")
chambers = enumerate_maximal_chambers(blowup)
for ch in chambers:
    print("  cones:", sorted(map(sorted, ch.sigma_cones)),
          " strict rays:", sorted(ch.strict_rays),
          " sample:", tuple(map(str, ch.sample_divisor)))

pullback = divisor([1, 0, 0, 1])
xi, strict = support_function(blowup, pullback)
print()
print("The pulled-back hyperplane class sits on the wall between them:")
print("  support function at the inserted ray:", xi((1, 1)), " strict rays:", sorted(strict))
loc = locate_chamber(blowup, pullback)
print("  located: cones", sorted(map(sorted, loc.sigma.max_cones)), " interior:", loc.interior)

inner = divisor([1, 0, 0, 2])
print()
print("Pushing the inserted ray's coefficient up moves the class inside:")
loc = locate_chamber(blowup, inner)
print("  located interior:", loc.interior, " strict rays:", sorted(loc.strict_rays))
coarse = next(ch for ch in chambers if ch.strict_rays)
nd = nef_decomposition(blowup, coarse, inner)
print("  nef part:", {k: str(v) for k, v in nd.nef_coeffs.items()},
      " remainder:", tuple(map(str, nd.remainder)))
print("  chamber growth polynomial value:", hhat0_on_chamber(blowup, coarse, inner),
      " direct:", hhat(blowup, inner)[0])

print()
print("Ampleness = the located chamber is the fan's own open chamber:")
for coeffs in ([1, 1, 1, 1], [1, 0, 0, 1], [1, 0, 0, 2]):
    d = divisor(coeffs)
    print(f"  {coeffs}: strict-convexity test {is_ample(blowup, d)},"
          f" neighborhood-vanishing test {ample_via_asymptotics(blowup, d)}")

quadric = p1xp1()
axis = scale(ray_divisor(quadric, 0), 2)
print()
print("A degenerate chamber: the section polytope of an axis class is a segment,")
nf = normal_fan(quadric, axis)
print("  lineality dimension:", len(nf.lineality_basis), " growth vector:", hhat(quadric, axis))
