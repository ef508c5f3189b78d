"""Asymptotic growth of cohomology under divisor dilation.

The i-th asymptotic function of a divisor is the limit of
h^i(m d) / (m^n / n!).  On a complete fan it is computed exactly as a
weighted sum of normalized region volumes, never through the limit; the
limit shows up only in diagnostic probes.  The same machinery yields
the top self-intersection number as a signed volume sum and exact mixed
partial derivatives of the degree-n chamber polynomial of the section
growth function.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .divisor import Divisor, is_q_cartier, scale
from .errors import (
    ChamberWallError,
    NotCompleteError,
    NotQCartierError,
    PreconditionError,
)
from .fan import Fan, chi_of_fan, is_complete, subfan
from .homology import local_cohomology_ranks
from .regions import bounded_subsets, normalized_volume, region

AsymptoticVector = tuple[Fraction, ...]


def hhat(fan: Fan, d: Divisor, cap: int = 20) -> AsymptoticVector:
    """The exact vector of asymptotic cohomology rates (index 0..n)."""
    if not is_complete(fan):
        raise NotCompleteError("asymptotic functions need a complete fan")
    result = [Fraction(0)] * (fan.dim + 1)
    for subset in bounded_subsets(fan, cap):
        profile = local_cohomology_ranks(fan, subset)
        if not any(profile):
            continue
        volume = normalized_volume(region(fan, d, subset))
        if volume:
            for i in range(fan.dim + 1):
                result[i] += profile[i] * volume
    return tuple(result)


def self_intersection(fan: Fan, d: Divisor, cap: int = 20) -> Fraction:
    """Top self-intersection number of a Q-Cartier divisor.

    Evaluates the signed volume formula on the denominator-cleared
    multiple (which is honestly Cartier) and scales back; both sides of
    the formula are homogeneous of degree n, so the two conventions
    agree exactly.
    """
    if not is_complete(fan):
        raise NotCompleteError("self-intersection needs a complete fan")
    cartier = is_q_cartier(fan, d)
    if cartier is None:
        raise NotQCartierError("divisor is not Q-Cartier")
    denominators = [c.denominator for c in d]
    denominators += [v.denominator for u in cartier.u_sigma for v in u]
    k = math.lcm(*denominators)
    scaled = scale(d, k)
    n = fan.dim
    total = Fraction(0)
    for subset in bounded_subsets(fan, cap):
        volume = normalized_volume(region(fan, scaled, subset))
        if volume:
            total += chi_of_fan(subfan(fan, subset)) * volume
    return (-1) ** n * total / Fraction(k) ** n


def asymptotic_rr_check(fan: Fan, d: Divisor, cap: int = 20) -> tuple[Fraction, Fraction]:
    """(self-intersection, alternating sum of asymptotic ranks); equal in theory."""
    lhs = self_intersection(fan, d, cap)
    rhs = sum(
        (-1) ** i * value for i, value in enumerate(hhat(fan, d, cap))
    )
    return lhs, Fraction(rhs)


def _derivative_weights(nodes: list[Fraction]) -> list[Fraction]:
    """Weights w_k with sum w_k f(x_k) = f'(0) for degree < len(nodes)."""
    weights = []
    for k, xk in enumerate(nodes):
        denom = Fraction(1)
        for m, xm in enumerate(nodes):
            if m != k:
                denom *= xk - xm
        numer = Fraction(0)
        for m in range(len(nodes)):
            if m == k:
                continue
            term = Fraction(1)
            for l, xl in enumerate(nodes):
                if l != k and l != m:
                    term *= -xl
            numer += term
        weights.append(numer / denom)
    return weights


def mixed_partial_h0(fan: Fan, d: Divisor, ray_indices, cap: int = 20) -> Fraction:
    """Exact mixed partial of the section growth rate along prime divisors.

    The growth rate restricted to an open chamber is a polynomial of
    degree at most n in the coefficients, so the derivative is read off
    from exact finite differences on a grid small enough (slack bound
    from the chamber inequalities) to stay inside the chamber.
    """
    from . import gkz

    rays = list(ray_indices)
    if len(set(rays)) != len(rays):
        raise PreconditionError("ray list must consist of distinct rays")
    n = fan.dim
    if not 1 <= len(rays) <= n:
        raise PreconditionError("need between 1 and n distinct rays")
    location = gkz.locate_chamber(fan, d)
    if not location.interior:
        raise ChamberWallError("divisor class sits on a chamber wall")
    chamber = gkz.gkz_cone(
        fan,
        location.sigma.max_cones,
        location.strict_rays,
        lineality_basis=location.sigma.lineality_basis,
    )

    step = Fraction(1)
    for row in chamber.inequalities:
        slack = sum(c * v for c, v in zip(row, d))
        relevant = sum(abs(row[i]) for i in rays)
        if relevant:
            bound = slack / (2 * n * relevant)
            step = min(step, bound)
    if step <= 0:
        raise PreconditionError("step bound underflow: no room inside the chamber")

    nodes = [k * step for k in range(n + 1)]
    weights = _derivative_weights(nodes)
    r = len(rays)
    total = Fraction(0)
    grid: list[tuple[int, ...]] = [()]
    for _ in range(r):
        grid = [g + (k,) for g in grid for k in range(n + 1)]
    for assignment in grid:
        shifted = list(d)
        coeff = Fraction(1)
        for ray, k in zip(rays, assignment):
            shifted[ray] += nodes[k]
            coeff *= weights[k]
        if coeff:
            total += coeff * hhat(fan, tuple(shifted), cap)[0]
    return total
