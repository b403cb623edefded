"""Red points on one horizontal line, blue points on another: O(n^4) DP."""
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction

from .geom import dist2
from .instance import SubsetSolution

INF = float("inf")


@dataclass
class PairDPTable:
    """T[(i, j)] with r_i and b_j the two rightmost selected points."""

    T: dict = field(default_factory=dict)
    back: dict = field(default_factory=dict)


def _closer_to_any(p, mine, theirs):
    """p strictly closer to some point of ``mine`` than to every point of ``theirs``."""
    return min(dist2(p, q) for q in mine) < min(dist2(p, q) for q in theirs)


def captured_interval(q, anchors):
    """x-range of points p on the anchors' horizontal line with |pq| <= |p a| for every anchor."""
    lo, hi = -INF, INF
    for r in anchors:
        # |pq|^2 - |pr|^2 <= 0  <=>  2x(r.x - q.x) <= r.x^2 - q.x^2 - (r.y - q.y)^2
        slope = 2 * (r[0] - q[0])
        rhs = r[0] ** 2 - q[0] ** 2 - (r[1] - q[1]) ** 2
        if slope > 0:
            hi = min(hi, Fraction(rhs, slope))
        elif slope < 0:
            lo = max(lo, Fraction(rhs, slope))
        elif rhs < 0:
            return INF, -INF
    return lo, hi


class _Solver:
    def __init__(self, red, blue):
        self.lines = (sorted(red), sorted(blue))
        self.xs = tuple([p[0] for p in line] for line in self.lines)
        self.table = PairDPTable()

    def _orient(self, i, j):
        """(u, a, b): side u holds the rightmost of the pair at index a; b on the other side."""
        r, b = self.lines[0][i], self.lines[1][j]
        if r[0] >= b[0]:
            return 0, i, j
        return 1, j, i

    @staticmethod
    def _key(u, a, b):
        return (a, b) if u == 0 else (b, a)

    def pair_valid(self, u, a, s, b):
        """Side-u points strictly between s and a prefer {s, a} over the other side's b."""
        pa = self.lines[u]
        pb = self.lines[1 - u][b]
        return all(_closer_to_any(pa[x], (pa[s], pa[a]), (pb,)) for x in range(s + 1, a))

    def quad_valid_scan(self, u, a, s, b, t):
        pa, pb = self.lines[u], self.lines[1 - u]
        return all(_closer_to_any(pa[x], (pa[s], pa[a]), (pb[t], pb[b]))
                   for x in range(s + 1, a))

    def quad_valid_flanking(self, u, a, s, b, t):
        """Check only the side-u points flanking the verticals through pb[t] and pb[b].

        Not sufficient in general; kept to compare against the exact checks.
        """
        pa, pb = self.lines[u], self.lines[1 - u]
        xs = self.xs[u]
        for q in (pb[t], pb[b]):
            lo = bisect_left(xs, q[0], s + 1, a)
            hi = bisect_right(xs, q[0], s + 1, a)
            for w in {lo - 1, lo, hi}:
                if s < w < a and not _closer_to_any(pa[w], (pa[s], pa[a]), (pb[t], pb[b])):
                    return False
        return True

    def quad_valid_witness(self, u, a, s, b, t):
        """Exact O(log n) check of the pair (s, t).

        Along side u the points at least as close to a foreign point q as to
        both pa[s] and pa[a] form one closed x-interval (squared-distance
        differences are linear along a line), so one binary search per
        foreign point finds any offender.
        """
        pa, pb = self.lines[u], self.lines[1 - u]
        xs = self.xs[u]
        for q in (pb[t], pb[b]):
            lo, hi = captured_interval(q, (pa[s], pa[a]))
            if lo > hi:
                continue
            k = bisect_left(xs, lo, s + 1, a) if lo != -INF else s + 1
            if k < a and xs[k] <= hi:
                return False
        return True

    def base_valid(self, u, a, b):
        pa, pb = self.lines[u], self.lines[1 - u]
        return (all(dist2(p, pa[a]) < dist2(p, pb[b]) for p in pa[:a + 1])
                and all(dist2(p, pb[b]) < dist2(p, pa[a]) for p in pb[:b + 1]))

    def T(self, i, j):
        tab = self.table
        if (i, j) in tab.T:
            return tab.T[(i, j)]
        u, a, b = self._orient(i, j)
        best, arg = (2, None) if self.base_valid(u, a, b) else (INF, None)
        xb = self.lines[1 - u][b][0]
        last = bisect_left(self.xs[u], xb) - 1     # i': last side-u point left of the vertical at b
        for s in range(last + 1):
            if self.pair_valid(u, a, s, b):
                val = self.T(*self._key(u, s, b)) + 1
                if val < best:
                    best, arg = val, (self._key(u, s, b),)
            first = bisect_right(self.xs[1 - u], self.xs[u][s])   # j'
            for t in range(first, b):
                if self.quad_valid_witness(u, a, s, b, t):
                    val = self.T(*self._key(u, s, t)) + 2
                    if val < best:
                        best, arg = val, (self._key(u, s, t),)
        tab.T[(i, j)] = best
        tab.back[(i, j)] = arg
        return best

    def chosen(self, i, j):
        out = [(0, i), (1, j)]
        nxt = self.table.back[(i, j)]
        while nxt:
            (i, j), = nxt
            out += [(0, i), (1, j)]
            nxt = self.table.back[(i, j)]
        return sorted(set(out))

    def suffix_valid(self, i, j):
        red, blue = self.lines
        return (all(dist2(p, red[i]) < dist2(p, blue[j]) for p in red[i + 1:])
                and all(dist2(p, blue[j]) < dist2(p, red[i]) for p in blue[j + 1:]))

    def solve(self):
        best, arg = INF, None
        for i in range(len(self.lines[0])):
            for j in range(len(self.lines[1])):
                if not self.suffix_valid(i, j):
                    continue
                val = self.T(i, j)
                if val < best:
                    best, arg = val, (i, j)
        return best, arg


def split_bichromatic(inst):
    """(red indices, blue indices) for a two-color instance on two horizontal lines."""
    palette = inst.palette
    if len(palette) != 2:
        raise ValueError("bichromatic instance needs exactly two colors")
    red = [i for i, c in enumerate(inst.colors) if c == palette[0]]
    blue = [i for i, c in enumerate(inst.colors) if c == palette[1]]
    for group in (red, blue):
        if len(set(inst.points[i][1] for i in group)) != 1:
            raise ValueError("each color must occupy a single horizontal line")
    if inst.points[red[0]][1] == inst.points[blue[0]][1]:
        raise ValueError("the two colors must lie on different lines")
    return red, blue


def solve_bichromatic_lines(inst):
    """Minimum consistent subset when every red is on one line and every blue on another."""
    red, blue = split_bichromatic(inst)
    solver = _Solver([inst.points[i] for i in red], [inst.points[i] for i in blue])
    _, arg = solver.solve()
    lookup = {inst.points[i]: i for i in range(len(inst))}
    picked = [lookup[solver.lines[side][k]] for side, k in solver.chosen(*arg)]
    return SubsetSolution(picked)
