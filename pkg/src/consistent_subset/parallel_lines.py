"""Colored points on two horizontal lines: top-down O(n^6) dynamic program."""
from dataclasses import dataclass, field
from fractions import Fraction

from .collinear import INF, Infeasible, _constrained, solve_collinear_linear
from .geom import dist2
from .instance import SubsetSolution


@dataclass
class TwoLineInstance:
    """``P`` on the upper line, ``Q`` on the lower one, both as (x, color) sorted by x."""

    P: list
    Q: list
    yP: object
    yQ: object

    @property
    def gap(self):
        return self.yP - self.yQ


@dataclass
class QuadDPTable:
    S: dict = field(default_factory=dict)
    back: dict = field(default_factory=dict)
    T: dict = field(default_factory=dict)


def to_two_lines(inst):
    """Split a ``two-lines`` Instance; returns the TwoLineInstance and index maps."""
    ys = sorted(set(inst.lines if inst.lines else (p[1] for p in inst.points)), reverse=True)
    if len(ys) == 1:
        ys = [ys[0], ys[0] - 1]
    if len(ys) != 2:
        raise ValueError("points must lie on two horizontal lines")
    top = sorted((p[0], inst.colors[i], i) for i, p in enumerate(inst.points) if p[1] == ys[0])
    bot = sorted((p[0], inst.colors[i], i) for i, p in enumerate(inst.points) if p[1] == ys[1])
    tl = TwoLineInstance([(x, c) for x, c, _ in top], [(x, c) for x, c, _ in bot], ys[0], ys[1])
    return tl, [i for *_, i in top], [i for *_, i in bot]


def captured_interval(q, anchors, y):
    """Closed x-range on the line at height ``y`` where q is at least as close as every anchor."""
    lo, hi = -INF, INF
    for r in anchors:
        slope = 2 * (r[0] - q[0])
        rhs = r[0] ** 2 + (y - r[1]) ** 2 - q[0] ** 2 - (y - q[1]) ** 2
        if slope > 0:
            hi = min(hi, Fraction(rhs, slope))
        elif slope < 0:
            lo = max(lo, Fraction(rhs, slope))
        elif rhs < 0:
            return INF, -INF
    return lo, hi


def cell_meets_segment(site, others, y, x0, x1):
    """Closed Voronoi cell of ``site`` among ``others`` meets the horizontal segment."""
    lo, hi = captured_interval(site, others, y)
    return max(lo, x0) <= min(hi, x1)


class _TwoLineSolver:
    def __init__(self, tl):
        self.tl = tl
        xs = [x for x, _ in tl.P] + [x for x, _ in tl.Q]
        lo, hi = min(xs), max(xs)
        far = 3 * (hi - lo) + 1
        fresh = max(c for _, c in tl.P + tl.Q) + 1
        # dummies p-, p+, q-, q+ with four new colors
        self.P = [(lo - far, fresh)] + list(tl.P) + [(hi + far, fresh + 1)]
        self.Q = [(lo - far, fresh + 2)] + list(tl.Q) + [(hi + far, fresh + 3)]
        pts = [(x, tl.yP) for x, _ in self.P] + [(x, tl.yQ) for x, _ in self.Q]
        self.pts = pts
        self.col = [c for _, c in self.P] + [c for _, c in self.Q]
        self.nP = len(self.P)
        self.lines = (list(range(self.nP)), list(range(self.nP, len(pts))))
        n = len(pts)
        self.D = [[dist2(pts[a], pts[b]) for b in range(n)] for a in range(n)]
        self.table = QuadDPTable()

    # -- helpers on global indices ------------------------------------
    def x(self, g):
        return self.pts[g][0]

    def served(self, members, sites):
        D, col = self.D, self.col
        for w in members:
            row = D[w]
            best = min(row[s] for s in sites)
            if any(row[s] == best and col[s] != col[w] for s in sites):
                return False
        return True

    def _interior(self, line, a, b, xl, xr):
        L = self.lines[line]
        return [L[m] for m in range(a + 1, b) if xl < self.x(L[m]) < xr]

    # -- the four-index table -------------------------------------------
    def S(self, i, j, k, l):
        key = (i, j, k, l)
        tab = self.table
        if key in tab.S:
            return tab.S[key]
        P, Q = self.lines
        pi, pj, qk, ql = P[i], P[j], Q[k], Q[l]
        members = P[i:j + 1] + Q[k:l + 1]
        corners = (pi, pj, qk, ql)
        best, arg = INF, None
        if self.served(members, corners):
            best, arg = 4, ("base",)
        xl = max(self.x(pi), self.x(qk))
        xr = min(self.x(pj), self.x(ql))
        Pm = [m for m in range(i + 1, j) if xl < self.x(P[m]) < xr]
        Qm = [m for m in range(k + 1, l) if xl < self.x(Q[m]) < xr]
        # both lines contribute: split at the closest interior pair
        for s in Pm:
            for t in Qm:
                left = self.S(i, s, k, t)
                if left >= best:
                    continue
                val = left + self.S(s, j, t, l) - 2
                if val < best:
                    best, arg = val, ("split", s, t)
        for side, mids in ((1, Qm), (0, Pm)):
            val, choice = self._one_side(side, mids, (i, j, k, l), members, best)
            if val < best:
                best, arg = val, choice
        tab.S[key] = best
        tab.back[key] = arg
        return best

    def _one_side(self, side, mids, ijkl, members, bound):
        """Interior picks only on line ``side`` (1 = Q, 0 = P)."""
        i, j, k, l = ijkl
        P, Q = self.lines
        if side == 1:
            a0, a1, b0, b1 = Q[k], Q[l], P[i], P[j]      # own ends, opposite ends
            own = Q
            yo = self.tl.yP
        else:
            a0, a1, b0, b1 = P[i], P[j], Q[k], Q[l]
            own = P
            yo = self.tl.yQ
        lo_idx, hi_idx = (k, l) if side == 1 else (i, j)
        corners = (b0, b1, a0, a1)
        best, arg = bound, None
        # exactly one interior pick
        for t in mids:
            if 5 < best and self.served(members, corners + (own[t],)):
                best, arg = 5, ("one", side, t)
        if len(mids) < 2:
            return best, arg
        xo0, xo1 = self.x(b0), self.x(b1)
        # the end site a0 serves nothing on the opposite segment: drop it
        for s in mids[:-1]:
            qs = own[s]
            if cell_meets_segment(self.pts[a0], (self.pts[b0], self.pts[qs]), yo, xo0, xo1):
                continue
            if not self.served(own[lo_idx + 1:s], (b0, b1, a0, qs)):
                continue
            sub = self.S(i, j, s, l) if side == 1 else self.S(s, j, k, l)
            if sub + 1 < best:
                best, arg = sub + 1, ("drop-left", side, s)
        for t in mids[1:]:
            qt = own[t]
            if cell_meets_segment(self.pts[a1], (self.pts[b1], self.pts[qt]), yo, xo0, xo1):
                continue
            if not self.served(own[t + 1:hi_idx], (b0, b1, a1, qt)):
                continue
            sub = self.S(i, j, k, t) if side == 1 else self.S(i, t, k, l)
            if sub + 1 < best:
                best, arg = sub + 1, ("drop-right", side, t)
        # both end cells reach the opposite segment: collinear core between s and t
        opp = self.lines[1 - side]
        opp_range = opp[i:j + 1] if side == 1 else opp[k:l + 1]
        for ai, s in enumerate(mids):
            for t in mids[ai + 1:]:
                if self.T(side, s, t) + 4 >= best:
                    continue
                qs, qt = own[s], own[t]
                if not (cell_meets_segment(self.pts[a0], (self.pts[b0], self.pts[qs]), yo, xo0, xo1)
                        and cell_meets_segment(self.pts[a1], (self.pts[b1], self.pts[qt]),
                                               yo, xo0, xo1)):
                    continue
                inner = set(own[s:t + 1])
                inner.update(g for g in opp_range if self.x(qs) < self.x(g) < self.x(qt))
                outside = [g for g in members if g not in inner]
                if self.served(outside, (b0, b1, a0, qs, qt, a1)):
                    best, arg = self.T(side, s, t) + 4, ("core", side, s, t)
        return best, arg

    def T(self, side, s, t):
        key = (side, s, t)
        tab = self.table
        if key in tab.T:
            return tab.T[key][0]
        own = self.lines[side]
        opp = self.lines[1 - side]
        x0, x1 = self.x(own[s]), self.x(own[t])
        merged = sorted([(self.x(g), 0, g) for g in own[s:t + 1]]
                        + [(self.x(g), 1, g) for g in opp if x0 < self.x(g) < x1])
        gl = [g for *_, g in merged]
        xs = [x for x, *_ in merged]
        cols = [self.col[g] for g in gl]
        forbidden = {m for m, (_, f, _) in enumerate(merged) if f}
        res = _constrained(xs, cols, forbidden, (gl.index(own[s]), gl.index(own[t])))
        if res is None:
            tab.T[key] = (INF, ())
        else:
            tab.T[key] = (len(res), tuple(gl[m] for m in res))
        return tab.T[key][0]

    # -- reconstruction ---------------------------------------------------
    def collect(self, i, j, k, l, out):
        P, Q = self.lines
        out.update((P[i], P[j], Q[k], Q[l]))
        arg = self.table.back[(i, j, k, l)]
        kind = arg[0]
        if kind == "split":
            _, s, t = arg
            self.collect(i, s, k, t, out)
            self.collect(s, j, t, l, out)
        elif kind == "one":
            _, side, t = arg
            out.add(self.lines[side][t])
        elif kind == "drop-left":
            _, side, s = arg
            if side == 1:
                self.collect(i, j, s, l, out)
            else:
                self.collect(s, j, k, l, out)
        elif kind == "drop-right":
            _, side, t = arg
            if side == 1:
                self.collect(i, j, k, t, out)
            else:
                self.collect(i, t, k, l, out)
        elif kind == "core":
            _, side, s, t = arg
            self.T(side, s, t)
            out.update(self.table.T[(side, s, t)][1])

    def solve_both(self):
        """Best solution with points on both lines, as global indices (dummies removed)."""
        top = (0, self.nP - 1, 0, len(self.Q) - 1)
        val = self.S(*top)
        if val == INF:
            return INF, None
        out = set()
        self.collect(*top, out)
        real = {g for g in out if g not in self._dummies()}
        return val - 4, real

    def _dummies(self):
        P, Q = self.lines
        return {P[0], P[-1], Q[0], Q[-1]}


def solve_single_line_case(tl, which):
    """Best solution drawn from one line only; positions index that line's list.

    Raises Infeasible when no such solution exists.
    """
    own, other = (tl.Q, tl.P) if which == "Q" else (tl.P, tl.Q)
    if not own:
        raise Infeasible("line is empty")
    merged = sorted([(x, 0, c, m) for m, (x, c) in enumerate(own)]
                    + [(x, 1, c, m) for m, (x, c) in enumerate(other)])
    xs = [x for x, *_ in merged]
    cols = [c for _, _, c, _ in merged]
    forbidden = {m for m, (_, f, _, _) in enumerate(merged) if f}
    res = _constrained(xs, cols, forbidden, None)
    if res is None:
        raise Infeasible(f"no solution on line {which} alone")
    return [merged[m][3] for m in res]


def solve_two_lines_table(tl):
    """(size, picks) with picks as ('P'|'Q', position) pairs."""
    if not tl.P or not tl.Q:
        own, name = (tl.P, "P") if tl.P else (tl.Q, "Q")
        if not own:
            return 0, []
        sol = solve_collinear_linear([x for x, _ in own], [c for _, c in own])
        return sol.size, [(name, m) for m in sol.indices]
    best, picks = INF, None
    for name in ("Q", "P"):
        try:
            res = solve_single_line_case(tl, name)
        except Infeasible:
            continue
        if len(res) < best:
            best, picks = len(res), [(name, m) for m in res]
    solver = _TwoLineSolver(tl)
    val, real = solver.solve_both()
    if val < best:
        nP = solver.nP
        best = val
        picks = sorted(("P", g - 1) if g < nP else ("Q", g - nP - 1) for g in real)
    return best, picks


def solve_two_lines(inst):
    """Minimum consistent subset of an Instance whose points lie on two horizontal lines."""
    tl, top_idx, bot_idx = to_two_lines(inst)
    _, picks = solve_two_lines_table(tl)
    return SubsetSolution((top_idx if name == "P" else bot_idx)[m] for name, m in picks)
