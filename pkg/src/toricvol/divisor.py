"""Torus-invariant Weil divisors with rational coefficients.

A divisor on a fan with k rays is just a length-k tuple of Fractions,
one coefficient per ray.  Cartier data, ampleness and linear
equivalence shifts are decided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotCompleteError
from .fan import Fan, is_complete
from .linalg import dot, solve

Divisor = tuple[Fraction, ...]


def divisor(coeffs) -> Divisor:
    """Coerce a sequence of ints / 'p/q' strings / Fractions to a divisor."""
    return tuple(Fraction(c) for c in coeffs)


def ray_divisor(fan: Fan, i: int, multiple=1) -> Divisor:
    """The divisor ``multiple * D_i`` supported on a single ray."""
    coeffs = [Fraction(0)] * len(fan.rays)
    coeffs[i] = Fraction(multiple)
    return tuple(coeffs)


def scale(d: Divisor, factor) -> Divisor:
    f = Fraction(factor)
    return tuple(f * c for c in d)


def add(d: Divisor, e: Divisor) -> Divisor:
    return tuple(a + b for a, b in zip(d, e))


@dataclass(frozen=True)
class CartierData:
    """Per maximal cone, the linear functional agreeing with -d on its rays."""

    u_sigma: tuple[tuple[Fraction, ...], ...]  # parallel to fan.max_cones

    def is_integral(self, d: Divisor) -> bool:
        return all(v.denominator == 1 for u in self.u_sigma for v in u) and all(
            c.denominator == 1 for c in d
        )


def is_q_cartier(fan: Fan, d: Divisor) -> CartierData | None:
    """Local linear data for the divisor, or None when it does not exist.

    On each maximal cone the system <u, v_rho> = -d_rho over the cone's
    rays must be solvable; on full-dimensional cones the solution is
    automatically unique, and on non-simplicial cones the consistency
    requirement across all rays is what can fail.
    """
    us = []
    for mc in fan.max_cones:
        idx = sorted(mc)
        matrix = [fan.rays[i] for i in idx]
        rhs = [-d[i] for i in idx]
        u = solve(matrix, rhs)
        if u is None:
            return None
        us.append(u)
    return CartierData(tuple(us))


def is_cartier(fan: Fan, d: Divisor) -> bool:
    data = is_q_cartier(fan, d)
    return data is not None and data.is_integral(d)


def is_ample(fan: Fan, d: Divisor) -> bool:
    """Strict convexity of the associated piecewise linear function.

    For every maximal cone and every ray outside it the local linear
    functional must beat the ray's own level, strictly.
    """
    if not is_complete(fan):
        raise NotCompleteError("ampleness is only defined here for complete fans")
    data = is_q_cartier(fan, d)
    if data is None:
        return False
    for mc, u in zip(fan.max_cones, data.u_sigma):
        for rho in range(len(fan.rays)):
            if rho in mc:
                continue
            if dot(u, fan.rays[rho]) <= -d[rho]:
                return False
    return True


def linear_equiv_shift(fan: Fan, d: Divisor, u) -> Divisor:
    """The linearly equivalent divisor obtained by adding div(chi^u)."""
    uu = tuple(Fraction(v) for v in u)
    return tuple(c + dot(uu, ray) for c, ray in zip(d, fan.rays))
