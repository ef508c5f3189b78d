"""Half-open polyhedral regions attached to a divisor and a ray subset.

For a fan with rays v_rho and a divisor with coefficients d_rho, the
region of a ray subset W consists of the points u with

    <u, v_rho> >= -d_rho   exactly when rho is in W,

so the constraint is weak on W and strictly reversed off W.  Ranging
over all subsets these regions partition the whole space.  Boundedness
of a region depends only on the subset, never on the divisor.

Everything here is exact: vertex enumeration solves square rational
systems, volumes come from a recursive facet triangulation, and lattice
point membership re-tests the mixed weak/strict system pointwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .divisor import Divisor
from .errors import CapExceededError, UnboundedRegionError
from .fan import Fan
from .linalg import affine_rank, det, dot, rank, solve
from .lp import max_over_cone_is_zero


@dataclass(frozen=True)
class HalfOpenRegion:
    """One mixed weak/strict linear system, one constraint per ray."""

    normals: tuple[tuple[int, ...], ...]
    levels: tuple[Fraction, ...]
    weak: tuple[bool, ...]
    dim: int

    def contains(self, point) -> bool:
        for normal, level, is_weak in zip(self.normals, self.levels, self.weak):
            value = dot(normal, point)
            if is_weak:
                if value < level:
                    return False
            elif value >= level:
                return False
        return True

    def closure_constraints(self):
        """The weak closure: >= on weak rows, <= on strict rows."""
        return list(zip(self.normals, self.levels, self.weak))


@dataclass(frozen=True)
class RationalPolytope:
    vertices: tuple[tuple[Fraction, ...], ...]
    normals: tuple[tuple[int, ...], ...]
    levels: tuple[Fraction, ...]
    geq: tuple[bool, ...]


def region(fan: Fan, d: Divisor, weak_rays) -> HalfOpenRegion:
    """The region of the given ray subset for the given divisor."""
    subset = frozenset(weak_rays)
    return HalfOpenRegion(
        normals=fan.rays,
        levels=tuple(-c for c in d),
        weak=tuple(i in subset for i in range(len(fan.rays))),
        dim=fan.dim,
    )


def _recession_rows(fan: Fan, weak_rays: frozenset[int]):
    return [
        fan.rays[i] if i in weak_rays else tuple(-v for v in fan.rays[i])
        for i in range(len(fan.rays))
    ]


def is_bounded_subset(fan: Fan, weak_rays) -> bool:
    """Whether the region of this subset is bounded (for every divisor).

    Decided by exact LP: the recession cone is trivial iff every
    coordinate functional is bounded (hence zero) on it, in both signs.
    """
    subset = frozenset(weak_rays)

    def compute():
        rows = _recession_rows(fan, subset)
        for j in range(fan.dim):
            for sign in (1, -1):
                objective = [0] * fan.dim
                objective[j] = sign
                if not max_over_cone_is_zero(objective, rows):
                    return False
        return True

    return fan.memo(("bounded_subset", subset), compute)


def bounded_subsets(fan: Fan, cap: int = 20) -> tuple[frozenset[int], ...]:
    """All ray subsets with bounded regions, by exhaustive sweep."""
    k = len(fan.rays)
    if k > cap:
        raise CapExceededError(
            f"fan has {k} rays; the 2^k bounded-subset sweep is capped at {cap}"
        )

    def compute():
        found = []
        indices = range(k)
        for size in range(k + 1):
            for combo in combinations(indices, size):
                subset = frozenset(combo)
                if is_bounded_subset(fan, subset):
                    found.append(subset)
        return tuple(found)

    return fan.memo("bounded_subsets", compute)


def _closure_is_bounded(reg: HalfOpenRegion) -> bool:
    rows = [
        normal if is_weak else tuple(-v for v in normal)
        for normal, is_weak in zip(reg.normals, reg.weak)
    ]
    for j in range(reg.dim):
        for sign in (1, -1):
            objective = [0] * reg.dim
            objective[j] = sign
            if not max_over_cone_is_zero(objective, rows):
                return False
    return True


def closure_vertices(reg: HalfOpenRegion) -> RationalPolytope:
    """Vertices of the weak closure, by brute-force basis enumeration.

    Every vertex is the unique solution of some n tight constraints, so
    n-subsets of the system are solved exactly and filtered by
    feasibility.  Raises on systems with unbounded closure.
    """
    if not _closure_is_bounded(reg):
        raise UnboundedRegionError("region closure is unbounded")
    n = reg.dim
    constraints = reg.closure_constraints()
    vertices = set()
    for combo in combinations(range(len(constraints)), n):
        matrix = [reg.normals[i] for i in combo]
        if rank(matrix) != n:
            continue
        point = solve(matrix, [reg.levels[i] for i in combo])
        ok = True
        for normal, level, is_weak in constraints:
            value = dot(normal, point)
            if is_weak:
                if value < level:
                    ok = False
                    break
            elif value > level:
                ok = False
                break
        if ok:
            vertices.add(tuple(point))
    return RationalPolytope(
        vertices=tuple(sorted(vertices)),
        normals=reg.normals,
        levels=reg.levels,
        geq=reg.weak,
    )


def _facet_vertex_sets(vertices, constraints, apex, face_dim):
    """Vertex sets of the facets of conv(vertices) avoiding the apex."""
    seen = set()
    for normal, level, _ in constraints:
        if dot(normal, apex) == level:
            continue
        tight = [v for v in vertices if dot(normal, v) == level]
        key = frozenset(tight)
        if key in seen or affine_rank(tight) != face_dim - 1:
            continue
        seen.add(key)
        yield sorted(tight)


def _triangulate(vertices, constraints, face_dim):
    if len(vertices) == face_dim + 1:
        yield tuple(vertices)
        return
    apex = min(vertices)
    for facet in _facet_vertex_sets(vertices, constraints, apex, face_dim):
        for simplex in _triangulate(facet, constraints, face_dim - 1):
            yield (apex,) + simplex


def normalized_volume(reg: HalfOpenRegion) -> Fraction:
    """n! times the Euclidean volume of the region's weak closure.

    The strict boundary parts have measure zero, and an empty half-open
    region forces its closure onto a strict hyperplane, hence a
    lower-dimensional closure and volume zero either way.
    """
    poly = closure_vertices(reg)
    vertices = list(poly.vertices)
    n = reg.dim
    if affine_rank(vertices) < n:
        return Fraction(0)
    total = Fraction(0)
    for simplex in _triangulate(sorted(vertices), reg.closure_constraints(), n):
        base = simplex[0]
        rows = [tuple(a - b for a, b in zip(v, base)) for v in simplex[1:]]
        total += abs(det(rows))
    return total


def lattice_points(reg: HalfOpenRegion) -> list[tuple[int, ...]]:
    """All integer points of the half-open region, smallest box first.

    Membership honors the mixed weak/strict system exactly; counts are
    never inferred from a closed-polytope formula.
    """
    poly = closure_vertices(reg)
    if not poly.vertices:
        return []
    n = reg.dim
    los = [math.ceil(min(v[j] for v in poly.vertices)) for j in range(n)]
    his = [math.floor(max(v[j] for v in poly.vertices)) for j in range(n)]
    points = []
    for candidate in product(*(range(lo, hi + 1) for lo, hi in zip(los, his))):
        if reg.contains(candidate):
            points.append(candidate)
    return points


def ehrhart_probe(fan: Fan, d: Divisor, weak_rays, m_max: int):
    """Scaled lattice counts of the dilated regions, for m = 1..m_max.

    Row m holds (m, count(region of m*d) * n! / m^n); the values converge
    to the normalized volume of the region of d.
    """
    if m_max > 50:
        raise CapExceededError("ehrhart probe is capped at m_max = 50")
    n = fan.dim
    factorial = math.factorial(n)
    table = []
    for m in range(1, m_max + 1):
        scaled = tuple(Fraction(m) * c for c in d)
        count = len(lattice_points(region(fan, scaled, weak_rays)))
        table.append((m, Fraction(count * factorial, m**n)))
    return table
