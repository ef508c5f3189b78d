"""Local cohomology ranks of fan supports, via sphere sections.

The rank vector attached to a ray subset W measures the topological
local cohomology of the ambient space with support on the cones whose
rays lie in W.  It is computed as reduced simplicial homology (over the
rationals) of the complex cut out on a small sphere around the origin:
a cone of dimension j meets the sphere in a cell of dimension j - 1.

Non-simplicial cones are triangulated by pulling from their
lowest-index ray, which keeps shared faces consistent across the whole
fan and introduces no new rays, so the support and its homotopy type
are untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fan import Cone, Fan, all_cones, subfan
from .linalg import rank


@dataclass(frozen=True)
class SphereComplex:
    """Abstract simplicial complex on ray indices, the empty face included."""

    simplices: frozenset[frozenset[int]]
    ambient_dim: int

    def by_size(self, size: int) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(s)) for s in self.simplices if len(s) == size)

    @property
    def is_empty(self) -> bool:
        return all(len(s) == 0 for s in self.simplices)


def _cone_facets(fan: Fan, cone: Cone) -> list[Cone]:
    out = []
    for candidate in all_cones(fan)[cone.dim - 1]:
        if candidate.ray_indices < cone.ray_indices:
            out.append(candidate)
    return out


def _triangulate_cone(fan: Fan, cone: Cone, pull_key) -> set[frozenset[int]]:
    """Maximal simplices (as ray sets) of the pulling triangulation."""
    rays = sorted(cone.ray_indices)
    if len(rays) == cone.dim:
        return {frozenset(rays)}
    apex = min(rays, key=pull_key)
    simplices: set[frozenset[int]] = set()
    for facet in _cone_facets(fan, cone):
        if apex in facet.ray_indices:
            continue
        for simplex in _triangulate_cone(fan, facet, pull_key):
            simplices.add(simplex | {apex})
    return simplices


def sphere_complex(fan: Fan, weak_rays, *, reverse_pull: bool = False) -> SphereComplex:
    """The simplicial complex of the subfan's section with a sphere.

    Simplicial cones contribute their ray sets directly; non-simplicial
    cones contribute their pulling triangulation.  ``reverse_pull``
    pulls from the highest-index ray instead and exists so that
    triangulation independence can be tested.
    """
    key = (lambda i: -i) if reverse_pull else (lambda i: i)
    piece = subfan(fan, weak_rays)
    simplices: set[frozenset[int]] = {frozenset()}
    for cone in piece.max_cones():
        if cone.dim == 0:
            continue
        simplices |= _triangulate_cone(fan, cone, key)
    closed: set[frozenset[int]] = set()
    for simplex in simplices:
        items = sorted(simplex)
        stack = [items]
        while stack:
            face = stack.pop()
            fs = frozenset(face)
            if fs in closed:
                continue
            closed.add(fs)
            for i in range(len(face)):
                stack.append(face[:i] + face[i + 1 :])
    return SphereComplex(frozenset(closed), fan.dim)


def _boundary_matrix(smaller: list[tuple[int, ...]], larger: list[tuple[int, ...]]):
    """Boundary map from simplices of size s to size s-1 (s >= 1)."""
    index = {simplex: i for i, simplex in enumerate(smaller)}
    matrix = [[Fraction(0)] * len(larger) for _ in smaller]
    for col, simplex in enumerate(larger):
        for i in range(len(simplex)):
            face = simplex[:i] + simplex[i + 1 :]
            matrix[index[face]][col] = Fraction((-1) ** i)
    return matrix


def reduced_homology_ranks(complex_: SphereComplex) -> tuple[int, ...]:
    """Reduced rational homology ranks, degrees -1 through n-1.

    Computed from exact ranks of the augmented chain complex; the empty
    complex reports rank 1 in degree -1 and nothing else.
    """
    n = complex_.ambient_dim
    by_size = [complex_.by_size(s) for s in range(n + 1)]
    dims = [len(b) for b in by_size]
    boundary_ranks = [0] * (n + 1)  # rank of d_s : C_s -> C_(s-1), sizes
    for s in range(1, n + 1):
        if dims[s] and dims[s - 1]:
            boundary_ranks[s] = rank(_boundary_matrix(by_size[s - 1], by_size[s]))
    ranks = []
    for s in range(n + 1):  # chain degree s-1
        incoming = boundary_ranks[s + 1] if s + 1 <= n else 0
        ranks.append(dims[s] - boundary_ranks[s] - incoming)
    return tuple(ranks)


def local_cohomology_ranks(fan: Fan, weak_rays, *, reverse_pull: bool = False) -> tuple[int, ...]:
    """The rank vector (r_0, ..., r_n) for one ray subset, memoized per fan.

    r_i equals the reduced homology rank of the sphere complex in
    degree n - i - 1.
    """
    subset = frozenset(weak_rays)

    def compute():
        tilde = reduced_homology_ranks(sphere_complex(fan, subset, reverse_pull=reverse_pull))
        n = fan.dim
        # tilde[s] is reduced degree s-1, so degree j sits at tilde[j+1].
        return tuple(tilde[n - i] for i in range(n + 1))

    return fan.memo(("profile", subset, reverse_pull), compute)
