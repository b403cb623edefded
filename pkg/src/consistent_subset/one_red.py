"""One red point among blues: arc construction plus minimum circle cover.

A selected blue ``s`` serves a blue ``b`` exactly when ``|bs| < |br|``.
With ``r`` at the origin that reads ``<b, s*> > 1/2`` where ``s*`` is the
inversion of ``s`` in the unit circle about ``r``.  The relation is
symmetric under swapping a point with its inverse, so running the disk
test ``D(w)`` on the inverted blues ``w`` answers "which blues does this
blue serve".  Inversion keeps directions from ``r``, hence the clockwise
order.  This inversion plays the role of the projective preprocessing and
is what makes the arc family equivalent to the original problem.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations

from .geom import convex_hull, dist2
from .instance import SubsetSolution


class BadColorProfile(ValueError):
    pass


class AllInsideDisk(LookupError):
    """Every other blue lies inside D(b_i); its arc is the whole circle."""


class NotCoverable(ValueError):
    pass


def _half(v):
    # 0 for directions in [0, 180) degrees clockwise from +x, 1 otherwise
    x, y = v
    return 0 if (y < 0 or (y == 0 and x > 0)) else 1


def _cw_cmp(r, a, b):
    va = (a[0] - r[0], a[1] - r[1])
    vb = (b[0] - r[0], b[1] - r[1])
    ha, hb = _half(va), _half(vb)
    if ha != hb:
        return ha - hb
    cross = va[0] * vb[1] - va[1] * vb[0]
    if cross:
        return -1 if cross < 0 else 1
    return (dist2(r, a) > dist2(r, b)) - (dist2(r, a) < dist2(r, b))


@dataclass
class RadialOrder:
    """Blues in clockwise order around ``r``; ``ties`` flags shared rays."""

    r: tuple
    blues: list
    dirs: list
    ties: bool = False

    @classmethod
    def build(cls, r, blues):
        order = sorted(blues, key=cmp_to_key(lambda a, b: _cw_cmp(r, a, b)))
        dirs = [(b[0] - r[0], b[1] - r[1]) for b in order]
        ties = any(_half(u) == _half(v) and u[0] * v[1] == u[1] * v[0]
                   for u, v in zip(dirs, dirs[1:] + dirs[:1]) if u != v)
        return cls(r, order, dirs, ties)

    def __len__(self):
        return len(self.blues)


def invert(r, p):
    vx, vy = p[0] - r[0], p[1] - r[1]
    d = vx * vx + vy * vy
    return (r[0] + Fraction(vx, d), r[1] + Fraction(vy, d))


def _uninvert(r, w):
    p = invert(r, w)
    return (p[0] - r[0], p[1] - r[1])


class RangeFarthestTree:
    """Perfect binary tree over the doubled clockwise sequence.

    Each node keeps the hull vertices of its leaves; the farthest point
    from any query is always a hull vertex, so a query scans that hull.
    """

    def __init__(self, pts, center, offsets=None):
        self.pts = list(pts)
        self.center = center
        # integer offsets of the original blues; farthest queries use pts
        self.offsets = offsets or [_uninvert(center, p) for p in self.pts]
        m = len(self.pts)
        self.m = m
        size = 1
        while size < 2 * m:
            size *= 2
        self.size = size
        self.nodes = [()] * (2 * size)
        for k in range(2 * m):
            self.nodes[size + k] = (k % m,)
        for v in range(size - 1, 0, -1):
            merged = self.nodes[2 * v] + self.nodes[2 * v + 1]
            if len(merged) <= 2:
                self.nodes[v] = tuple(dict.fromkeys(merged))
                continue
            where = {}
            for k in merged:
                where[self.pts[k]] = k
            hull = convex_hull(list(where))
            self.nodes[v] = tuple(where[p] for p in hull.vertices)

    def farthest(self, v, q):
        """(squared distance, leaf id) of the farthest leaf of node v from q."""
        best = (-1, None)
        for k in self.nodes[v]:
            d = dist2(self.pts[k], q)
            if d > best[0]:
                best = (d, k)
        return best

    def _escapes(self, v, i):
        # the farthest hull vertex leaves D(w_i) iff some vertex does, and
        # for inverted points that test is |v_i|^2 >= 2 <v_i, v_j> in
        # integer offsets v = b - r
        xi, yi = self.offsets[i]
        rad = xi * xi + yi * yi
        off = self.offsets
        return any(rad >= 2 * (xi * off[k][0] + yi * off[k][1]) for k in self.nodes[v])

    def first_outside(self, i, clockwise=True):
        """Position of the first leaf after (or before) copy of ``i`` outside D(w_i)."""
        size = self.size
        # start from leaf i going clockwise, leaf i + m going counterclockwise
        v = size + (i if clockwise else i + self.m)
        # phase one: climb until the sibling subtree on the search side escapes
        while v > 1:
            if clockwise:
                sib = v + 1 if v % 2 == 0 else None
            else:
                sib = v - 1 if v % 2 else None
            if sib is not None and self._escapes(sib, i):
                v = sib
                break
            v //= 2
        else:
            return None
        # phase two: descend, preferring the child nearer to the start
        while v < size:
            near, far = (2 * v, 2 * v + 1) if clockwise else (2 * v + 1, 2 * v)
            v = near if self._escapes(near, i) else far
        return v - size


def compute_c_cc(r, blues):
    """(cc, c) per blue in clockwise order, computed on the inverted blues.

    ``blues`` must already be in clockwise order.  A blue whose disk holds
    every other blue gets ``None`` (its arc is the whole circle).
    """
    m = len(blues)
    w = [invert(r, b) for b in blues]
    tree = RangeFarthestTree(w, r, [(b[0] - r[0], b[1] - r[1]) for b in blues])
    out = []
    for i in range(m):
        try:
            out.append(_c_cc_one(tree, i))
        except AllInsideDisk:
            out.append(None)
    return out


def _c_cc_one(tree, i):
    m = tree.m
    pos = tree.first_outside(i, clockwise=True)
    if pos is None or pos >= i + m:
        raise AllInsideDisk(i)
    back = tree.first_outside(i, clockwise=False)
    return (back % m, pos % m)


def compute_c_cc_naive(r, blues):
    """Quadratic scan in original coordinates.

    With v = b - r, the inverted blue w_j leaves D(w_i) exactly when
    |v_i|^2 >= 2 <v_i, v_j>, so no inversion is needed here.
    """
    m = len(blues)
    v = [(b[0] - r[0], b[1] - r[1]) for b in blues]
    out = []
    for i in range(m):
        xi, yi = v[i]
        rad = xi * xi + yi * yi
        outside = [rad >= 2 * (xi * xj + yi * yj) for xj, yj in v]
        c = next(((i + k) % m for k in range(1, m) if outside[(i + k) % m]), None)
        if c is None:
            out.append(None)
            continue
        cc = next((i - k) % m for k in range(1, m) if outside[(i - k) % m])
        out.append((cc, c))
    return out


@dataclass
class CyclicArcSystem:
    """Closed arcs over ``2m`` slots: slot 2i is d_i, slot 2i+1 the midpoint after it.

    ``arcs[i]`` is ``(start, end)`` read clockwise, or ``None`` for the full cycle.
    """

    m: int
    arcs: list = field(default_factory=list)

    @property
    def slots(self):
        return 2 * self.m

    def covered(self, i):
        arc = self.arcs[i]
        if arc is None:
            return set(range(self.slots))
        s, e = arc
        return {(s + k) % self.slots for k in range((e - s) % self.slots + 1)}


def build_arcs(c_cc):
    """Shrunk arcs: from the midpoint after cc(b_i) to the midpoint before c(b_i)."""
    m = len(c_cc)
    arcs = []
    for pair in c_cc:
        if pair is None:
            arcs.append(None)
            continue
        cc, c = pair
        arcs.append(((2 * cc + 1) % (2 * m), (2 * c - 1) % (2 * m)))
    return CyclicArcSystem(m, arcs)


def min_circle_cover(system):
    """Indices of a minimum subfamily covering every slot.

    Each arc is tried as the first one; the rest is greedy interval
    covering on the unrolled cycle, accelerated by binary lifting.
    """
    L = system.slots
    arcs = system.arcs
    if not arcs:
        raise NotCoverable("no arcs")
    for i, a in enumerate(arcs):
        if a is None:
            return (i,)
    span = [(s, (e - s) % L + 1) for s, e in arcs]      # covers [s, s + length)
    limit = 3 * L
    best_end = [0] * (limit + 1)
    best_arc = [-1] * (limit + 1)
    for i, (s, ln) in enumerate(span):
        for shift in (0, L):
            st = s + shift
            if st + ln > best_end[st]:
                best_end[st], best_arc[st] = st + ln, i
    for x in range(1, limit + 1):
        if best_end[x - 1] > best_end[x]:
            best_end[x], best_arc[x] = best_end[x - 1], best_arc[x - 1]
    step = [max(x, min(best_end[x], limit)) for x in range(limit + 1)]
    lift = [step]
    while (1 << len(lift)) <= len(arcs):
        prev = lift[-1]
        lift.append([prev[prev[x]] for x in range(limit + 1)])
    best, first = None, None
    for i, (s, ln) in enumerate(span):
        x, target, used = s + ln, s + L, 1
        if x < target:
            for j in range(len(lift) - 1, -1, -1):
                y = lift[j][x]
                if y < target:
                    x, used = y, used + (1 << j)
            x, used = lift[0][x], used + 1
            if x < target:
                continue
        if best is None or used < best:
            best, first = used, i
    if best is None:
        raise NotCoverable("arcs leave part of the cycle uncovered")
    # replay the greedy from the winning start to recover the arcs
    s, ln = span[first]
    chosen, x = [first], s + ln
    while x < s + L:
        chosen.append(best_arc[x])
        x = best_end[x]
    return tuple(dict.fromkeys(chosen))


def min_circle_cover_brute(system):
    full = set(range(system.slots))
    sets = [system.covered(i) for i in range(len(system.arcs))]
    for k in range(1, len(sets) + 1):
        for combo in combinations(range(len(sets)), k):
            if set().union(*(sets[i] for i in combo)) == full:
                return combo
    raise NotCoverable("arcs leave part of the cycle uncovered")


def split_one_red(inst):
    palette = inst.palette
    counts = {c: inst.colors.count(c) for c in palette}
    if len(palette) != 2 or min(counts.values()) != 1:
        raise BadColorProfile("need exactly one red point and at least one blue")
    red = min(palette, key=lambda c: (counts[c], c))
    r = inst.colors.index(red)
    return r, [i for i in range(len(inst)) if i != r]


def solve_one_red(inst, naive=False):
    """Red point plus the blues picked by a minimum circle cover."""
    r_idx, blue_idx = split_one_red(inst)
    r = inst.points[r_idx]
    order = RadialOrder.build(r, [inst.points[i] for i in blue_idx])
    lookup = {inst.points[i]: i for i in blue_idx}
    c_cc = (compute_c_cc_naive if naive else compute_c_cc)(r, order.blues)
    picks = min_circle_cover(build_arcs(c_cc))
    return SubsetSolution([r_idx] + [lookup[order.blues[k]] for k in picks])
