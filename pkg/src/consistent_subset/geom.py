"""Exact planar kernel: predicates, hulls, separating tangents.

Coordinates are ``int`` or ``fractions.Fraction``; every predicate is
evaluated exactly.  A position is any pair ``(x, y)``.
"""
from dataclasses import dataclass
from fractions import Fraction


class HullsIntersect(ValueError):
    """The two convex hulls share at least one point."""


def as_coord(value):
    """Parse ``value`` (int, Fraction, or a decimal / "p/q" string) exactly."""
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, float):
        raise TypeError("float coordinates are not accepted; pass a string")
    f = Fraction(str(value).strip())
    return f.numerator if f.denominator == 1 else f


def orient(a, b, c):
    """Sign of the cross product (b - a) x (c - a)."""
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def dist2(a, b):
    dx = a[0] - b[0]
    dy = a[1] - b[1]
    return dx * dx + dy * dy


def cmp_dist(p, a, b):
    """-1, 0 or +1 as |pa| is smaller than, equal to or larger than |pb|."""
    d = dist2(p, a) - dist2(p, b)
    return (d > 0) - (d < 0)


@dataclass(frozen=True)
class Hull:
    """Counterclockwise strictly convex vertex cycle."""

    vertices: tuple

    @property
    def degenerate(self):
        return len(self.vertices) < 3

    def __len__(self):
        return len(self.vertices)


def convex_hull(points):
    """Andrew's monotone chain; collinear boundary points are dropped."""
    pts = sorted(set((p[0], p[1]) for p in points))
    if not pts:
        raise ValueError("convex_hull needs at least one point")
    if len(pts) <= 2:
        return Hull(tuple(pts))

    def half(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and orient(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    verts = lower[:-1] + upper[:-1]
    if len(verts) < 2:
        # all collinear: monotone chain leaves the two extremes
        verts = [pts[0], pts[-1]]
    return Hull(tuple(verts))


def _on_segment(p, a, b):
    return (orient(a, b, p) == 0
            and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def _segments_meet(a, b, c, d):
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return (_on_segment(c, a, b) or _on_segment(d, a, b)
            or _on_segment(a, c, d) or _on_segment(b, c, d))


def point_in_hull(p, hull):
    """Closed containment test."""
    v = hull.vertices
    if len(v) == 1:
        return tuple(p) == v[0]
    if len(v) == 2:
        return _on_segment(p, v[0], v[1])
    return all(orient(v[i], v[(i + 1) % len(v)], p) >= 0 for i in range(len(v)))


def _edges(hull):
    v = hull.vertices
    if len(v) == 1:
        return [(v[0], v[0])]
    if len(v) == 2:
        return [(v[0], v[1])]
    return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]


def hulls_intersect(a, b):
    if any(point_in_hull(p, b) for p in a.vertices):
        return True
    if any(point_in_hull(p, a) for p in b.vertices):
        return True
    return any(_segments_meet(p, q, r, s)
               for p, q in _edges(a) for r, s in _edges(b))


def separating_tangents(a, b):
    """The two separating common tangents of disjoint hulls ``a`` and ``b``.

    Each line is an oriented pair ``(u, v)`` with ``u`` a vertex of ``a`` and
    ``v`` a vertex of ``b``.  The first line has ``a`` on its closed left side
    and ``b`` on its closed right side; the second the other way round.
    Two single points give the line through them twice.
    """
    if hulls_intersect(a, b):
        raise HullsIntersect("convex hulls are not disjoint")
    lines = []
    for side in (1, -1):
        found = None
        for u in a.vertices:
            # extreme vertex of b as seen from u, turning towards ``side``
            v = b.vertices[0]
            for w in b.vertices[1:]:
                if orient(u, v, w) * side > 0:
                    v = w
            if (all(orient(u, v, w) * side <= 0 for w in b.vertices)
                    and all(orient(u, v, w) * side >= 0 for w in a.vertices)):
                found = (u, v)
                break
        if found is None:
            raise HullsIntersect("no separating tangent found")
        lines.append(found)
    return lines[0], lines[1]


def line_intersection(l1, l2):
    """Intersection point of two lines given by point pairs, or None if parallel."""
    (x1, y1), (x2, y2) = l1
    (x3, y3), (x4, y4) = l2
    den = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
    if den == 0:
        return None
    a = x1 * y2 - y1 * x2
    b = x3 * y4 - y3 * x4
    return (Fraction(a * (x3 - x4) - (x1 - x2) * b, den),
            Fraction(a * (y3 - y4) - (y1 - y2) * b, den))


def facing_chain(hull, apex):
    """Hull vertices on edges visible from ``apex`` (the tangents' crossing).

    Falls back to every vertex when nothing is strictly visible, which only
    enlarges the chain and keeps the separation test exact.
    """
    v = hull.vertices
    if len(v) == 1 or apex is None:
        return list(v)
    keep = set()
    for p, q in ([(v[0], v[1]), (v[1], v[0])] if len(v) == 2 else _edges(hull)):
        if orient(p, q, apex) < 0:
            keep.add(p)
            keep.add(q)
    if not keep:
        return list(v)
    return [p for p in v if p in keep]


def chains_between_tangents(red, blue):
    """Facing boundary chains ``(R', B')`` of the hulls of ``red`` and ``blue``."""
    hr, hb = convex_hull(red), convex_hull(blue)
    l1, l2 = separating_tangents(hr, hb)
    apex = line_intersection(l1, l2)
    return facing_chain(hr, apex), facing_chain(hb, apex)


def bisector_separates(r, b, red, blue):
    """Every red point strictly closer to ``r`` and every blue strictly closer to ``b``."""
    return (all(cmp_dist(p, r, b) < 0 for p in red)
            and all(cmp_dist(p, b, r) < 0 for p in blue))


def disk_condition(r, b, red_chain, blue_chain):
    """Two-sided disk test on the facing chains (strict on both sides)."""
    return (all(dist2(p, b) > dist2(p, r) for p in red_chain)
            and all(dist2(p, b) < dist2(p, r) for p in blue_chain))
