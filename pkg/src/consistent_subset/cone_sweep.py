"""Point-cone incidence for translated copies of one polyhedral cone.

Pipeline: find an interior direction of the cone with an exact LP, move it
to the z-axis with a rational change of basis, split every cone by the
vertical plane through its apex, and sweep each half left to right.  The
lower surface of a half cone with apex (a, b, c) is

    f(x, y) = c + gauge((x, y) - (a, b))    for x >= a,   +inf otherwise,

where ``gauge(u) = max_k g_k . u`` is piecewise linear over a fan of rays.
The sweep keeps the lower envelope of the active surfaces along the line
x = t as an ordered list of owners separated by boundaries.  Each boundary
stores the linear piece it currently follows, so every event time is the
root of a linear equation.
"""
import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count, product

from .geom import convex_hull

INF = float("inf")


class EmptyInterior(ValueError):
    pass


class DegeneracyDetected(RuntimeError):
    """An exact tie the sweep does not resolve; callers fall back to the naive check."""


@dataclass(frozen=True)
class Halfspace3:
    """``a x + b y + c z <= d`` (``< d`` when ``open``)."""

    a: object
    b: object
    c: object
    d: object
    open: bool = False

    def __post_init__(self):
        if self.a == 0 and self.b == 0 and self.c == 0:
            raise ValueError("degenerate halfspace normal")

    @property
    def normal(self):
        return (self.a, self.b, self.c)

    def value(self, p):
        return self.a * p[0] + self.b * p[1] + self.c * p[2] - self.d

    def contains(self, p):
        v = self.value(p)
        return v < 0 if self.open else v <= 0

    def on_boundary(self, p):
        return self.value(p) == 0


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _cross2(u, v):
    return u[0] * v[1] - u[1] * v[0]


# ---------------------------------------------------------------- exact LP
def lp_maximize(c, A, b):
    """max c.x s.t. A x <= b, x >= 0, with b >= 0, by tableau simplex (Bland's rule).

    Exact over Fractions.  Returns (value, x); raises ValueError when unbounded.
    """
    m, n = len(A), len(c)
    if any(v < 0 for v in b):
        raise ValueError("origin must be feasible")
    rows = [[Fraction(v) for v in A[i]] + [Fraction(int(i == k)) for k in range(m)] + [Fraction(b[i])]
            for i in range(m)]
    obj = [Fraction(-v) for v in c] + [Fraction(0)] * (m + 1)
    basis = [n + i for i in range(m)]
    while True:
        col = next((j for j in range(n + m) if obj[j] < 0), None)
        if col is None:
            break
        best = None
        for i in range(m):
            if rows[i][col] > 0:
                ratio = rows[i][-1] / rows[i][col]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise ValueError("unbounded LP")
        r = best[1]
        piv = rows[r][col]
        rows[r] = [v / piv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * p for a, p in zip(rows[i], rows[r])]
        f = obj[col]
        obj = [a - f * p for a, p in zip(obj, rows[r])]
        basis[r] = col
    x = [Fraction(0)] * (n + m)
    for i, j in enumerate(basis):
        x[j] = rows[i][-1]
    return obj[-1], x[:n]


def interior_direction(normals):
    """A rational d with n . d < 0 for every normal, maximizing the margin in a box."""
    # variables p (3), q (3), t with d = p - q; n.(p - q) + t <= 0, p, q, t <= 1
    A, b = [], []
    for nv in normals:
        A.append(list(nv) + [-v for v in nv] + [1])
        b.append(0)
    for k in range(7):
        A.append([int(j == k) for j in range(7)])
        b.append(1)
    val, x = lp_maximize([0] * 6 + [1], A, b)
    if val <= 0:
        raise EmptyInterior("cone has empty interior")
    return tuple(x[k] - x[k + 3] for k in range(3))


# ---------------------------------------------------------------- the fan
@dataclass
class Fan:
    """Piecewise-linear gauge on the half-plane u_x >= 0.

    ``rays`` run counterclockwise from (0, -1) to (0, 1); sector k lies
    between rays k and k+1 and there the gauge is ``grads[k] . u``.
    """

    rays: list
    grads: list

    @classmethod
    def from_gradients(cls, grads):
        pts = sorted(set(grads))
        hull = convex_hull(pts).vertices
        normals = []
        if len(hull) > 1:
            for k in range(len(hull)):
                e = (hull[(k + 1) % len(hull)][0] - hull[k][0], hull[(k + 1) % len(hull)][1] - hull[k][1])
                normals.append((e[1], -e[0]))
        inner = [v for v in normals if v[0] > 0]
        inner.sort(key=lambda v: Fraction(v[1], 1) / v[0])
        uniq = []
        for v in inner:
            if not uniq or _cross2(uniq[-1], v) != 0:
                uniq.append(v)
        rays = [(0, -1)] + uniq + [(0, 1)]
        sectors = []
        for k in range(len(rays) - 1):
            mid = (rays[k][0] + rays[k + 1][0], rays[k][1] + rays[k + 1][1])
            if mid == (0, 0):
                mid = (-rays[k][1], rays[k][0])
            sectors.append(max(hull, key=lambda g: g[0] * mid[0] + g[1] * mid[1]))
        return cls(rays, sectors)

    def sector(self, u):
        """Index of a closed sector containing direction u (u_x >= 0, u != 0)."""
        lo, hi = 0, len(self.rays) - 1      # invariant: cross(rays[lo], u) >= 0
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if _cross2(self.rays[mid], u) >= 0:
                lo = mid
            else:
                hi = mid
        return lo

    def sectors_at(self, u):
        """Every closed sector containing u: one, or two when u lies on an inner ray."""
        k = self.sector(u)
        if k > 0 and _cross2(self.rays[k], u) == 0:
            return [k - 1, k]
        if k + 1 < len(self.rays) - 1 and _cross2(self.rays[k + 1], u) == 0:
            return [k, k + 1]
        return [k]

    def gauge(self, u):
        if u[0] == 0 and u[1] == 0:
            return 0
        g = self.grads[self.sector(u)]
        return g[0] * u[0] + g[1] * u[1]

    def gauge_naive(self, u, all_grads):
        return max(g[0] * u[0] + g[1] * u[1] for g in all_grads)

    def polygon(self):
        """Vertices of M = {u : gauge(u) <= 1, u_x >= 0}, or None when unbounded."""
        verts = []
        for k, r in enumerate(self.rays):
            vals = [g[0] * r[0] + g[1] * r[1] for g in
                    ([self.grads[k - 1]] if k > 0 else []) + ([self.grads[k]] if k < len(self.grads) else [])]
            v = vals[0]
            if v <= 0:
                return None
            verts.append((Fraction(r[0]) / v, Fraction(r[1]) / v))
        return verts


@dataclass(frozen=True)
class Site:
    a: object
    b: object
    c: object


def f_eval(site, q, fan):
    """Lower surface of the half cone at ``site`` above the plane point q; +inf left of it."""
    if q[0] < site.a:
        return INF
    return site.c + fan.gauge((q[0] - site.a, q[1] - site.b))


# ---------------------------------------------------------------- canonical form
def _mat_inv3(m):
    a, b, c = m
    det = (a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
           + a[2] * (b[0] * c[1] - b[1] * c[0]))
    if det == 0:
        raise ValueError("singular basis")
    cof = [[b[1] * c[2] - b[2] * c[1], a[2] * c[1] - a[1] * c[2], a[1] * b[2] - a[2] * b[1]],
           [b[2] * c[0] - b[0] * c[2], a[0] * c[2] - a[2] * c[0], a[2] * b[0] - a[0] * b[2]],
           [b[0] * c[1] - b[1] * c[0], a[1] * c[0] - a[0] * c[1], a[0] * b[1] - a[1] * b[0]]]
    return [[Fraction(v, 1) / det for v in row] for row in cof]


def _apply(m, p):
    return tuple(_dot(row, p) for row in m)


def basis_to_vertical(d):
    """Rational invertible T with T d = (0, 0, 1); identity when d = (0, 0, 1)."""
    axis = 2 if d[2] != 0 else (0 if d[0] != 0 else 1)
    others = [k for k in range(3) if k != axis]
    rows = []
    for k in others:
        row = [Fraction(0)] * 3
        row[k] = Fraction(1)
        row[axis] = -Fraction(d[k]) / d[axis]
        rows.append(row)
    last = [Fraction(0)] * 3
    last[axis] = 1 / Fraction(d[axis])
    rows.append(last)
    return rows


@dataclass
class CanonicalCone:
    """Cone after the change of basis; apex at the origin, interior ray vertical.

    ``right`` is the fan of the half x >= apex-x, ``left`` the fan of the
    other half mirrored by x -> -x.  ``M`` is the z = 1 section of the
    right half when bounded.
    """

    T: list
    T_inv: list
    direction: tuple
    normals: list
    grads: list
    right: Fan
    left: Fan
    strict: bool = False
    M: list = field(default=None)


def canonicalize(halfspaces, apexes, queries=()):
    """Transform a cone family and queries; returns (CanonicalCone, sites, queries)."""
    if not halfspaces:
        raise EmptyInterior("no halfspaces given: the cone is all of space")
    base = apexes[0]
    for h in halfspaces:
        if not h.on_boundary(base):
            raise ValueError("every halfspace boundary must contain the first apex")
    normals = [h.normal for h in halfspaces]
    d = interior_direction(normals)
    T = basis_to_vertical(d)
    T_inv = _mat_inv3(T)
    # normals transform by the inverse transpose
    grads = []
    new_normals = []
    for nv in normals:
        nn = tuple(sum(nv[r] * T_inv[r][c] for r in range(3)) for c in range(3))
        new_normals.append(nn)
        h = -nn[2]          # positive: (0, 0, 1) is interior
        grads.append((nn[0] / h, nn[1] / h))
    right = Fan.from_gradients(grads)
    left = Fan.from_gradients([(-g[0], g[1]) for g in grads])
    strict = any(h.open for h in halfspaces)
    if strict and not all(h.open for h in halfspaces):
        raise ValueError("mixed open and closed halfspaces are not supported by the sweep")
    cone = CanonicalCone(T, T_inv, d, new_normals, grads, right, left, strict, right.polygon())
    sites = [Site(*_apply(T, a)) for a in apexes]
    tq = [_apply(T, q) for q in queries]
    return cone, sites, tq


# ---------------------------------------------------------------- two-point primitives
def line_bitangent(si, sj, t, fan):
    """Heights y on the vertical line x = t where the two surfaces meet.

    Raises DegeneracyDetected when they coincide along a segment.
    """
    if t < si.a or t < sj.a:
        return []
    cuts = set()
    for s in (si, sj):
        dx = t - s.a
        if dx == 0:
            cuts.add(Fraction(s.b))
            continue
        for r in fan.rays[1:-1]:
            cuts.add(s.b + Fraction(dx) * r[1] / r[0])
    cuts = sorted(cuts)
    if not cuts:
        cuts = [Fraction(si.b)]

    def diff(y):
        return f_eval(si, (t, y), fan) - f_eval(sj, (t, y), fan)

    pts = [cuts[0] - 1] + cuts + [cuts[-1] + 1]
    vals = [diff(y) for y in pts]
    roots = {y for y, v in zip(pts, vals) if v == 0}
    for k in range(len(pts) - 1):
        v0, v1 = vals[k], vals[k + 1]
        if v0 == 0 and v1 == 0:
            raise DegeneracyDetected("surfaces coincide along a segment")
        if (v0 < 0 < v1) or (v1 < 0 < v0):
            roots.add(pts[k] + (pts[k + 1] - pts[k]) * v0 / (v0 - v1))
    # the difference stays linear beyond the outermost cuts
    slope = (vals[1] - vals[0]) / (pts[1] - pts[0])
    if slope != 0 and pts[0] - vals[0] / slope < pts[0]:
        roots.add(pts[0] - vals[0] / slope)
    slope = (vals[-1] - vals[-2]) / (pts[-1] - pts[-2])
    if slope != 0 and pts[-1] - vals[-1] / slope > pts[-1]:
        roots.add(pts[-1] - vals[-1] / slope)
    return sorted(roots)


def _sector_cell_ok(fan, s, p, k):
    u = (p[0] - s.a, p[1] - s.b)
    if u[0] < 0:
        return False
    if u == (0, 0):
        return True
    return _cross2(fan.rays[k], u) >= 0 and _cross2(u, fan.rays[k + 1]) >= 0


def tritangent(si, sj, sk, fan):
    """All points where the three surfaces take one common finite value.

    Enumerates one linear piece per surface and solves the 2x2 system.
    Raises DegeneracyDetected if the common set is not finite.
    """
    sites = (si, sj, sk)
    K = len(fan.grads)
    found = set()
    for ks in product(range(K), repeat=3):
        g = [fan.grads[k] for k in ks]
        # c + g.(p - s) equal for all three -> two linear equations in p
        rows, rhs = [], []
        for a, b in ((0, 1), (0, 2)):
            rows.append((g[a][0] - g[b][0], g[a][1] - g[b][1]))
            rhs.append(sites[b].c - sites[a].c + g[a][0] * sites[a].a + g[a][1] * sites[a].b
                       - g[b][0] * sites[b].a - g[b][1] * sites[b].b)
        det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
        if det == 0:
            if _singular_meets_cells(rows, rhs, sites, ks, fan):
                raise DegeneracyDetected("three surfaces share a curve")
            continue
        x = Fraction(rhs[0] * rows[1][1] - rhs[1] * rows[0][1]) / det
        y = Fraction(rows[0][0] * rhs[1] - rows[1][0] * rhs[0]) / det
        if all(_sector_cell_ok(fan, s, (x, y), k) for s, k in zip(sites, ks)):
            found.add((x, y))
    return sorted(found)


def _singular_meets_cells(rows, rhs, sites, ks, fan):
    # a rank-deficient system meets the cells in infinitely many points only
    # if it is consistent; sample the solution line finely enough to tell
    eqs = [(r, v) for r, v in zip(rows, rhs) if r != (0, 0)]
    if any(r == (0, 0) and v != 0 for r, v in zip(rows, rhs)):
        return False
    if not eqs:
        return True
    (ga, gb), v = eqs[0]
    for (ha, hb), w in eqs[1:]:
        if ga * hb - gb * ha == 0 and (ga * w != ha * v or gb * w != hb * v):
            return False
    base = (Fraction(v) / ga, Fraction(0)) if ga != 0 else (Fraction(0), Fraction(v) / gb)
    direc = (-gb, ga)
    hits = 0
    for step in range(-64, 65):
        p = (base[0] + step * direc[0], base[1] + step * direc[1])
        if all(_sector_cell_ok(fan, s, p, k) for s, k in zip(sites, ks)):
            hits += 1
    return hits > 1


# ---------------------------------------------------------------- the sweep
class _Boundary:
    __slots__ = ("id", "lo", "hi", "t0", "y0", "slope", "brk", "alive")

    def __init__(self, ident, lo, hi, t0, y0, slope, brk):
        self.id, self.lo, self.hi = ident, lo, hi
        self.t0, self.y0, self.slope, self.brk = t0, y0, slope, brk
        self.alive = True

    def y(self, t):
        if self.slope is None:
            return self.y0
        return self.y0 + self.slope * (t - self.t0)


_COLLAPSE, _BREAK, _SITE, _QUERY = range(4)


@dataclass
class SweepState:
    """Owners of the envelope along the sweep line, bottom to top, and their boundaries."""

    owners: list = field(default_factory=list)
    bounds: list = field(default_factory=list)
    events: list = field(default_factory=list)
    t: object = None


class _Sweep:
    def __init__(self, sites, fan, strict, audit=False):
        self.sites = sites
        self.fan = fan
        self.strict = strict
        self.audit = audit
        self.state = SweepState()
        self.ids = count()
        self.seq = count()
        self.vertex_events = []

    # -- helpers -----------------------------------------------------------
    def f(self, i, p):
        return f_eval(self.sites[i], p, self.fan)

    def push(self, t, kind, payload):
        heapq.heappush(self.state.events, (t, kind, next(self.seq), payload))

    def piece(self, lo, hi, t, y):
        """Forward linear piece of the boundary with ``lo`` below and ``hi`` above at (t, y)."""
        fan = self.fan
        si, sj = self.sites[hi], self.sites[lo]
        p = (t, y)
        cands = []
        for s in (si, sj):
            u = (p[0] - s.a, p[1] - s.b)
            if u == (0, 0):
                raise DegeneracyDetected("boundary passes through a site")
            cands.append((u, fan.sectors_at(u)))
        valid, vertical = [], False
        for ki, kj in product(cands[0][1], cands[1][1]):
            gi, gj = fan.grads[ki], fan.grads[kj]
            G = (gi[0] - gj[0], gi[1] - gj[1])
            if G[1] == 0:
                vertical = vertical or G[0] != 0
                continue
            if G[1] > 0:
                continue
            slope = Fraction(-G[0]) / G[1]
            d = (1, slope)
            ok = True
            for (u, ks), k in zip(cands, (ki, kj)):
                if len(ks) == 1:
                    ray_hits = [r for r in (fan.rays[k], fan.rays[k + 1]) if _cross2(r, u) == 0]
                    for r in ray_hits:
                        side = _cross2(r, d)
                        if side == 0:
                            raise DegeneracyDetected("boundary runs along a fan ray")
                        # leaving through the bounding ray is not forward
                        if (r is fan.rays[k] and side < 0) or (r is fan.rays[k + 1] and side > 0):
                            ok = False
                    continue
                shared = fan.rays[max(ks)]
                side = _cross2(shared, d)
                if side == 0:
                    raise DegeneracyDetected("boundary runs along a fan ray")
                if (side > 0) != (k == max(ks)):
                    ok = False
            if ok:
                valid.append((slope, ki, kj))
        if len(valid) > 1:
            raise DegeneracyDetected("ambiguous boundary continuation")
        if not valid:
            if vertical:
                raise DegeneracyDetected("vertical boundary piece")
            return None
        slope, ki, kj = valid[0]
        brk = INF
        for s, k in ((si, ki), (sj, kj)):
            for r in (fan.rays[k], fan.rays[k + 1]):
                # cross(r, p(t') - s) = 0 is linear in t'
                coef = r[0] * slope - r[1]
                if coef == 0:
                    continue
                const = r[0] * (y - slope * t - s.b) + r[1] * s.a
                tt = Fraction(-const) / coef
                if tt <= t:
                    continue
                q = (tt - s.a, y + slope * (tt - t) - s.b)
                if q == (0, 0):
                    raise DegeneracyDetected("boundary reaches a site")
                if q[0] * r[0] + q[1] * r[1] > 0 and tt < brk:
                    brk = tt
        return slope, brk

    def make_boundary(self, lo, hi, t, y):
        got = self.piece(lo, hi, t, y)
        slope, brk = (None, INF) if got is None else got
        b = _Boundary(next(self.ids), lo, hi, t, y, slope, brk)
        if brk != INF:
            self.push(brk, _BREAK, b)
        return b

    def check_pair(self, a):
        """Schedule the collapse of owner a+1 between boundaries a and a+1, if any."""
        bd = self.state.bounds
        if a < 0 or a + 1 >= len(bd):
            return
        L, U = bd[a], bd[a + 1]
        t = self.state.t
        gap = U.y(t) - L.y(t)
        if gap < 0:
            raise DegeneracyDetected("boundaries crossed")
        if L.slope is None or U.slope is None:
            if gap == 0:
                self.push(t, _COLLAPSE, (L, U))
            return
        delta = U.slope - L.slope
        if gap == 0:
            if delta < 0:
                self.push(t, _COLLAPSE, (L, U))
                return
            raise DegeneracyDetected("zero-length interval that does not shrink")
        if delta >= 0:
            return
        tt = t + gap / (-delta)
        if tt <= L.brk and tt <= U.brk:
            self.push(tt, _COLLAPSE, (L, U))

    def check_ended(self):
        for a, b in enumerate(self.state.bounds):
            if b.slope is None:
                t = self.state.t
                left = a > 0 and self.state.bounds[a - 1].y(t) == b.y(t)
                right = a + 1 < len(self.state.bounds) and self.state.bounds[a + 1].y(t) == b.y(t)
                if not (left or right):
                    raise DegeneracyDetected("boundary cannot continue")

    def locate(self, t, y):
        bd = self.state.bounds
        lo, hi = 0, len(bd)
        while lo < hi:
            mid = (lo + hi) // 2
            if bd[mid].y(t) < y:
                lo = mid + 1
            else:
                hi = mid
        return lo

    # -- events --------------------------------------------------------------
    def on_site(self, i):
        st = self.state
        s = self.sites[i]
        t = st.t
        if not st.owners:
            st.owners = [i]
            return
        a0 = self.locate(t, s.b)
        env = self.f(st.owners[a0], (s.a, s.b))
        if s.c > env:
            return
        if s.c == env:
            other = self.sites[st.owners[a0]]
            if (other.a, other.b, other.c) == (s.a, s.b, s.c):
                return
            raise DegeneracyDetected("apex on the boundary of another cone")
        own, bd = st.owners, st.bounds
        # lower end
        idx, y_lo = a0, None
        while idx >= 0:
            roots = [y for y in line_bitangent(s, self.sites[own[idx]], t, self.fan) if y < s.b]
            floor = bd[idx - 1].y(t) if idx > 0 else None
            y = roots[-1] if roots else None
            if y is not None and (floor is None or y > floor):
                y_lo = y
                break
            if y is not None and floor is not None and y == floor:
                raise DegeneracyDetected("site interval ends on a boundary")
            idx -= 1
        lo_idx = idx
        idx, y_hi = a0, None
        while idx < len(own):
            roots = [y for y in line_bitangent(s, self.sites[own[idx]], t, self.fan) if y > s.b]
            ceil = bd[idx].y(t) if idx < len(bd) else None
            y = roots[0] if roots else None
            if y is not None and (ceil is None or y < ceil):
                y_hi = y
                break
            if y is not None and ceil is not None and y == ceil:
                raise DegeneracyDetected("site interval ends on a boundary")
            idx += 1
        hi_idx = idx
        for b in bd[max(lo_idx, 0):hi_idx]:
            b.alive = False
        new_bd = []
        if lo_idx >= 0:
            new_bd.append(self.make_boundary(own[lo_idx], i, t, y_lo))
        if hi_idx < len(own):
            new_bd.append(self.make_boundary(i, own[hi_idx], t, y_hi))
        st.owners = own[:lo_idx + 1] + [i] + own[hi_idx:]
        st.bounds = bd[:max(lo_idx, 0)] + new_bd + bd[hi_idx:]
        first = max(lo_idx, 0)
        for a in range(first - 1, first + len(new_bd)):
            self.check_pair(a)
        self.check_ended()

    def on_break(self, b):
        if not b.alive:
            return
        st = self.state
        a = st.bounds.index(b)
        t = st.t
        b.alive = False
        nb = self.make_boundary(b.lo, b.hi, t, b.y(t))
        st.bounds[a] = nb
        self.check_pair(a - 1)
        self.check_pair(a)
        if nb.slope is None:
            self.check_ended()

    def on_collapse(self, L, U):
        if not (L.alive and U.alive):
            return
        st = self.state
        a = st.bounds.index(L)
        if a + 1 >= len(st.bounds) or st.bounds[a + 1] is not U:
            return
        t = st.t
        y = L.y(t)
        if U.y(t) != y:
            return
        own = st.owners
        lo, mid, hi = own[a], own[a + 1], own[a + 2]
        if self.audit and len({lo, mid, hi}) == 3:
            pts = tritangent(self.sites[lo], self.sites[mid], self.sites[hi], self.fan)
            if (t, y) not in pts or len(pts) > 2:
                raise AssertionError("vertex event not confirmed by tritangent")
            self.vertex_events.append((lo, mid, hi, (t, y)))
        L.alive = U.alive = False
        if lo == hi:
            st.owners = own[:a + 1] + own[a + 3:]
            st.bounds = st.bounds[:a] + st.bounds[a + 2:]
            self.check_pair(a - 1)
            self.check_ended()
            return
        nb = self.make_boundary(lo, hi, t, y)
        if nb.slope is None:
            raise DegeneracyDetected("new boundary has no forward piece")
        st.owners = own[:a + 1] + own[a + 2:]
        st.bounds = st.bounds[:a] + [nb] + st.bounds[a + 2:]
        self.check_pair(a - 1)
        self.check_pair(a)
        self.check_ended()

    def owner_at(self, q):
        st = self.state
        if not st.owners:
            return None
        return st.owners[self.locate(st.t, q[1])]

    def on_query(self, q):
        j = self.owner_at(q)
        if j is None:
            return None
        val = self.f(j, (q[0], q[1]))
        hit = q[2] > val if self.strict else q[2] >= val
        return j if hit else None

    def run(self, queries, owners=None):
        for i, s in enumerate(self.sites):
            self.push(s.a, _SITE, (s.b, i))
        for qi, q in enumerate(queries):
            self.push(q[0], _QUERY, qi)
        ev = self.state.events
        while ev:
            t, kind, _, payload = heapq.heappop(ev)
            self.state.t = t
            if kind == _COLLAPSE:
                self.on_collapse(*payload)
            elif kind == _BREAK:
                self.on_break(payload)
            elif kind == _SITE:
                self.on_site(payload[1])
            elif owners is not None:
                owners[payload] = self.owner_at(queries[payload])
            else:
                j = self.on_query(queries[payload])
                if j is not None:
                    return payload, j
        return None


def sweep_incidence(sites, fan, queries, strict=False, audit=False):
    """Some (query index, site index) with the query in that site's half cone, or None.

    ``sites`` and ``queries`` are canonical; ``fan`` describes the half x >= apex-x.
    """
    # events sharing an x: collapses, breaks, then sites by y, then queries
    return _Sweep(list(sites), fan, strict, audit).run(list(queries))


def sweep_owners(sites, fan, queries):
    """Envelope owner at every query's (x, y) after a full sweep (None left of all sites)."""
    owners = [None] * len(queries)
    _Sweep(list(sites), fan, False).run(list(queries), owners)
    return owners


def naive_incidence(halfspaces, apexes, queries):
    """First (query, cone) pair in lexicographic order with the query inside the cone."""
    base = apexes[0]
    for qi, q in enumerate(queries):
        for ci, a in enumerate(apexes):
            shift = tuple(q[k] - a[k] + base[k] for k in range(3))
            if all(h.contains(shift) for h in halfspaces):
                return qi, ci
    return None


def naive_incidence_canonical(sites, fan, queries, strict=False):
    """Same verdict from the canonical half cones, by direct evaluation."""
    for qi, q in enumerate(queries):
        for ci, s in enumerate(sites):
            v = f_eval(s, q, fan)
            if v != INF and (q[2] > v if strict else q[2] >= v):
                return qi, ci
    return None


@dataclass
class IncidenceReport:
    hit: tuple = None
    degenerate: bool = False
    empty: bool = False


def point_cone_incidence(halfspaces, apexes, queries, audit=False):
    """Decide whether some query lies in some translated cone, via two sweeps.

    Falls back to the direct check when a sweep reports a degeneracy.
    Returns an IncidenceReport whose ``hit`` is (query index, cone index) or None.
    """
    if not apexes or not queries:
        return IncidenceReport()
    try:
        cone, sites, tq = canonicalize(halfspaces, apexes, queries)
    except EmptyInterior:
        # an open cone with empty interior contains nothing; a closed one may
        if all(h.open for h in halfspaces):
            return IncidenceReport(empty=True)
        return IncidenceReport(naive_incidence(halfspaces, apexes, queries), empty=True)
    mirrored = [Site(-s.a, s.b, s.c) for s in sites]
    mq = [(-q[0], q[1], q[2]) for q in tq]
    try:
        hit = sweep_incidence(sites, cone.right, tq, cone.strict, audit)
        if hit is None:
            hit = sweep_incidence(mirrored, cone.left, mq, cone.strict, audit)
    except DegeneracyDetected:
        return IncidenceReport(naive_incidence(halfspaces, apexes, queries), degenerate=True)
    return IncidenceReport(hit)
