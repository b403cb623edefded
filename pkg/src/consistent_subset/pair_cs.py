"""Size-two consistent subsets: one red r and one blue b.

The pair works when the bisector of rb separates the colors.  Once the
hulls are disjoint, only the facing chains R', B' between the two
separating tangents matter.  After lifting points to the paraboloid
z = x^2 + y^2, "b inside the circle about p through r" becomes "b-hat
below a plane", so the blues that pair with r are exactly the blues whose
lift lies in an open cone with apex r-hat.  The cones of different reds
are translates of each other (the planes keep their normals), and the
question becomes a point-cone incidence.
"""
from dataclasses import dataclass, field

from .cone_sweep import Halfspace3, point_cone_incidence
from .geom import (HullsIntersect, bisector_separates, chains_between_tangents,
                   convex_hull, hulls_intersect)
from .instance import SubsetSolution


class NoCandidate(LookupError):
    """No size-two subset can exist (the hulls meet)."""


@dataclass(frozen=True)
class LiftedPoint:
    x: object
    y: object

    @property
    def z(self):
        return self.x * self.x + self.y * self.y

    def as_tuple(self):
        return (self.x, self.y, self.z)


def lift(p):
    return LiftedPoint(p[0], p[1]).as_tuple()


def circle_plane(center, through):
    """Plane ``n . X = d`` holding the lift of the circle about ``center`` through ``through``."""
    n = (-2 * center[0], -2 * center[1], 1)
    d = through[0] ** 2 + through[1] ** 2 - 2 * (center[0] * through[0] + center[1] * through[1])
    return n, d


def inside_halfspace(center, apex):
    """H-: lifts of points strictly inside the circle about ``center`` through ``apex``."""
    (a, b, c), d = circle_plane(center, apex)
    return Halfspace3(a, b, c, d, open=True)


def outside_halfspace(center, apex):
    """H+: lifts of points strictly outside that circle."""
    (a, b, c), d = circle_plane(center, apex)
    return Halfspace3(-a, -b, -c, -d, open=True)


@dataclass
class ConeSpec:
    """Base halfspaces through the lift of ``reds[0]`` plus every apex."""

    halfspaces: list
    apexes: list
    red_chain: list = field(default_factory=list)
    blue_chain: list = field(default_factory=list)

    def cone_at(self, i):
        """The halfspaces translated so their boundaries pass through apex i."""
        base, top = self.apexes[0], self.apexes[i]
        shift = tuple(top[k] - base[k] for k in range(3))
        return [Halfspace3(h.a, h.b, h.c, h.d + h.a * shift[0] + h.b * shift[1] + h.c * shift[2], h.open)
                for h in self.halfspaces]


def _chains(R, B, full_boundary):
    if hulls_intersect(convex_hull(R), convex_hull(B)):
        raise NoCandidate("the convex hulls of the two colors meet")
    if full_boundary:
        return list(convex_hull(R).vertices), list(convex_hull(B).vertices)
    try:
        return chains_between_tangents(R, B)
    except HullsIntersect as exc:
        raise NoCandidate(str(exc)) from exc


def cone_for(red, R_chain, B_chain):
    """Halfspaces of the cone of blues that pair with ``red``, built from scratch."""
    return ([inside_halfspace(b, red) for b in B_chain]
            + [outside_halfspace(r, red) for r in R_chain])


def build_cone_spec(R, B, full_boundary=False):
    """Cone family for reds ``R`` against blues ``B``.

    ``full_boundary`` uses every hull vertex instead of the facing chains;
    both choices accept the same pairs.
    """
    if not R or not B:
        raise NoCandidate("both colors are needed")
    Rc, Bc = _chains(list(R), list(B), full_boundary)
    return ConeSpec(cone_for(R[0], Rc, Bc), [lift(r) for r in R], list(Rc), list(Bc))


def solve_pair(R, B, full_boundary=False, audit=False):
    """(red index, blue index) of a bisector-separated pair, or None."""
    try:
        spec = build_cone_spec(R, B, full_boundary)
    except NoCandidate:
        return None
    rep = point_cone_incidence(spec.halfspaces, spec.apexes, [lift(b) for b in B], audit=audit)
    if rep.hit is None:
        return None
    qi, ci = rep.hit
    return ci, qi


def solve_pair_naive(R, B):
    """First pair in index order whose bisector separates the colors."""
    for i, r in enumerate(R):
        for j, b in enumerate(B):
            if bisector_separates(r, b, R, B):
                return i, j
    return None


def solve_size_two(inst, naive=False):
    """A consistent subset of size two, or None when no such subset exists."""
    palette = inst.palette
    if len(palette) != 2:
        return None
    ri = [i for i, c in enumerate(inst.colors) if c == palette[0]]
    bi = [i for i, c in enumerate(inst.colors) if c == palette[1]]
    R = [inst.points[i] for i in ri]
    B = [inst.points[i] for i in bi]
    got = (solve_pair_naive if naive else solve_pair)(R, B)
    if got is None:
        return None
    return SubsetSolution([ri[got[0]], bi[got[1]]])


def translation_holds(R, B):
    """Check that the cone of every red is the translate of the cone of the first."""
    spec = build_cone_spec(R, B)
    for i, r in enumerate(R):
        direct = cone_for(r, spec.red_chain, spec.blue_chain)
        if direct != spec.cone_at(i):
            return False
    return True


__all__ = ["NoCandidate", "LiftedPoint", "Halfspace3", "ConeSpec", "lift", "circle_plane",
           "build_cone_spec", "cone_for", "solve_pair", "solve_pair_naive", "solve_size_two",
           "translation_holds"]
