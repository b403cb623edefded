"""Minimum consistent subsets of points on a line.

All solvers take the points as parallel sequences ``xs`` (strictly
increasing coordinates along the line) and ``colors``, and return a
:class:`SubsetSolution` of indices into them.
"""
from dataclasses import dataclass, field

from .instance import SubsetSolution

INF = float("inf")


class NotSorted(ValueError):
    pass


class Infeasible(RuntimeError):
    """No selection satisfies the constraints."""


@dataclass
class LinearDPTable:
    """T[k]: best size for the prefix ending at k with k selected."""

    T: list
    back: list
    cached_idx: list = field(default_factory=list)


@dataclass(frozen=True)
class Block:
    start: int
    end: int
    color: int


def blocks(colors):
    """Maximal runs of equal colors as inclusive index ranges."""
    out = []
    start = 0
    for k in range(1, len(colors) + 1):
        if k == len(colors) or colors[k] != colors[start]:
            out.append(Block(start, k - 1, colors[start]))
            start = k
    return out


def _check_sorted(xs, strict=True):
    for a, b in zip(xs, xs[1:]):
        if b < a or (strict and b == a):
            raise NotSorted("coordinates must be increasing")


def _with_sentinel(xs, colors):
    xs = list(xs)
    colors = list(colors)
    xs.append(xs[-1] + 2 * (xs[-1] - xs[0]) + 1)
    colors.append(max(colors) + 1)
    return xs, colors


def _trace(back, k):
    out = []
    while k >= 0:
        out.append(k)
        k = back[k]
    return out


def linear_table(xs, colors):
    """Fill the table in one left-to-right pass, O(1) amortized per point.

    ``cached_idx[j]`` is the nearest index left of ``j`` inside its block
    whose T value is strictly smaller than ``T[j]``, or ``j`` when there is
    none.  Because T never exceeds a block-range minimum by more than one,
    that index always holds the minimum of any block range ending at ``j``
    that reaches it.
    """
    n = len(xs)
    T = [0] * n
    back = [-1] * n
    cache = list(range(n))
    # block bookkeeping
    prev_start = prev_end = -1   # previous block B_{m-1}
    cur_start = 0                # current block B_m
    lo = hi = -1                 # window pointers into B_{m-1}
    for k in range(n):
        if k > 0 and colors[k] != colors[k - 1]:
            prev_start, prev_end, cur_start = cur_start, k - 1, k
            lo = hi = prev_end
        if prev_start < 0:
            T[k] = 1
            if k > cur_start:
                cache[k] = k
            continue
        xk = xs[k]
        best, arg = INF, -1
        if k > cur_start:
            j = k - 1
            c = cache[j]
            arg = c if T[c] < T[j] else j
            best = T[arg]
        xa, xb = xs[prev_end], xs[cur_start]
        left = 2 * xa - xk          # strictly right of this: rightmost blue served
        right = 2 * xb - xk         # strictly left of this: leftmost red served
        while hi >= prev_start and not xs[hi] < right:
            hi -= 1
        while lo - 1 >= prev_start and xs[lo - 1] > left:
            lo -= 1
        if lo > hi or not xs[lo] > left:
            pass
        else:
            c = cache[hi]
            cand = c if (c >= lo and T[c] < T[hi]) else hi
            if T[cand] < best or (T[cand] == best and cand < arg):
                best, arg = T[cand], cand
        T[k] = best + 1
        back[k] = arg
        if k > cur_start:
            j = k - 1
            if T[j] < T[k]:
                cache[k] = j
            elif T[j] == T[k]:
                cache[k] = cache[j]
            else:
                cache[k] = k
    return LinearDPTable(T, back, cache)


def solve_collinear_linear(xs, colors):
    """O(n) dynamic program; ``xs`` strictly increasing."""
    if not xs:
        return SubsetSolution(())
    _check_sorted(xs)
    xs2, cols2 = _with_sentinel(xs, colors)
    table = linear_table(xs2, cols2)
    chosen = _trace(table.back, len(xs2) - 1)
    return SubsetSolution(i for i in chosen if i < len(xs))


def valid_by_scan(xs, colors, i, k):
    """Direct check that every point strictly between i and k is served by {i, k}."""
    twice_mid = xs[i] + xs[k]
    for j in range(i + 1, k):
        if colors[j] == colors[i] and colors[j] == colors[k]:
            continue
        if colors[j] == colors[i] and 2 * xs[j] < twice_mid:
            continue
        if colors[j] == colors[k] and 2 * xs[j] > twice_mid:
            continue
        return False
    return True


def valid_by_midpoint(xs, colors, i, k):
    """Same verdict from the two points flanking the midpoint (two colors between)."""
    if colors[i] == colors[k]:
        return True
    twice_mid = xs[i] + xs[k]
    # first point at or beyond the midpoint, by binary search; the point
    # before it must take i's color, it must take k's color and not sit
    # exactly on the midpoint
    lo, hi = i + 1, k
    while lo < hi:
        mid = (lo + hi) // 2
        if 2 * xs[mid] < twice_mid:
            lo = mid + 1
        else:
            hi = mid
    left = lo
    if left - 1 > i and colors[left - 1] != colors[i]:
        return False
    if left < k:
        if 2 * xs[left] == twice_mid or colors[left] != colors[k]:
            return False
    return True


def quadratic_table(xs, colors):
    """Reference DP: every candidate in the two trailing blocks, midpoint check."""
    n = len(xs)
    T = [0] * n
    back = [-1] * n
    bl = blocks(colors)
    owner = [0] * n
    for b, blk in enumerate(bl):
        for j in range(blk.start, blk.end + 1):
            owner[j] = b
    for k in range(n):
        m = owner[k]
        if m == 0:
            T[k] = 1
            continue
        best, arg = INF, -1
        for i in range(bl[m - 1].start, k):
            if T[i] < best and valid_by_midpoint(xs, colors, i, k):
                best, arg = T[i], i
        T[k] = best + 1
        back[k] = arg
    return LinearDPTable(T, back)


def solve_collinear_quadratic(xs, colors):
    if not xs:
        return SubsetSolution(())
    _check_sorted(xs)
    xs2, cols2 = _with_sentinel(xs, colors)
    table = quadratic_table(xs2, cols2)
    chosen = _trace(table.back, len(xs2) - 1)
    return SubsetSolution(i for i in chosen if i < len(xs))


def constrained_size(xs, colors, forbidden=(), forced_ends=None):
    """Size of the best constrained selection, or INF; see solve_collinear_constrained."""
    res = _constrained(xs, colors, forbidden, forced_ends)
    return INF if res is None else len(res)


def _constrained(xs, colors, forbidden, forced_ends):
    n = len(xs)
    if n == 0:
        return ()
    _check_sorted(xs, strict=False)
    forbidden = set(forbidden)
    selectable = [k not in forbidden for k in range(n)]
    for a, b in zip(range(n), range(1, n)):
        if xs[a] == xs[b] and selectable[a] and selectable[b]:
            raise NotSorted("two selectable points share a coordinate")
    if forced_ends is not None:
        s, t = forced_ends
        if not (selectable[s] and selectable[t]) or s > t:
            return None
        first_ok = [k == s for k in range(n)]
        last = t
        lo_sel, hi_sel = s, t
    else:
        first_ok = None
        last = None
        lo_sel, hi_sel = 0, n - 1
    T = [INF] * n
    back = [-1] * n
    # prefix_mono[k]: every point before k has colors[k]
    for k in range(lo_sel, hi_sel + 1):
        if not selectable[k]:
            continue
        if first_ok is None or first_ok[k]:
            if all(colors[j] == colors[k] for j in range(k)):
                T[k] = 1
        if first_ok is not None and first_ok[k]:
            continue
        # scan candidates leftwards keeping per-color extreme coordinates
        seen_max = {}
        seen_min = {}
        ck = colors[k]
        for i in range(k - 1, lo_sel - 1, -1):
            if selectable[i] and T[i] + 1 < T[k]:
                ci = colors[i]
                twice = xs[i] + xs[k]
                ok = True
                for c in seen_max:
                    if c != ci and c != ck:
                        ok = False
                        break
                if ok and ci != ck:
                    if ci in seen_max and not 2 * seen_max[ci] < twice:
                        ok = False
                    elif ck in seen_min and not 2 * seen_min[ck] > twice:
                        ok = False
                if ok:
                    T[k] = T[i] + 1
                    back[k] = i
            c = colors[i]
            if c not in seen_max:
                seen_max[c] = xs[i]
            seen_min[c] = xs[i]
            if len(seen_max) > 2:
                break
    if last is None:
        # sentinel-free finish: the last selected point serves everything after it
        best, arg = INF, -1
        for k in range(n):
            if selectable[k] and T[k] < best and all(colors[j] == colors[k] for j in range(k + 1, n)):
                best, arg = T[k], k
        if arg < 0:
            return None
        return tuple(sorted(_trace(back, arg)))
    if T[last] == INF or any(colors[j] != colors[last] for j in range(last + 1, n)):
        return None
    return tuple(sorted(_trace(back, last)))


def solve_collinear_constrained(xs, colors, forbidden=(), forced_ends=None):
    """Minimum selection that avoids ``forbidden`` but still serves it.

    ``xs`` may repeat a coordinate only between a forbidden and another point.
    With ``forced_ends=(s, t)`` both are selected and nothing outside
    ``[s, t]`` is.  Raises :class:`Infeasible` when no selection exists.
    """
    res = _constrained(xs, colors, forbidden, forced_ends)
    if res is None:
        raise Infeasible("no valid constrained selection")
    return SubsetSolution(res)


def project_line(points):
    """Order collinear points along their line; returns (order, coordinates).

    The coordinate is x (or y for a vertical line); distances along the line
    are a fixed multiple of it, so nearest-point comparisons are unchanged.
    """
    order = sorted(range(len(points)), key=lambda i: points[i])
    if len(points) >= 2 and points[order[0]][0] == points[order[-1]][0]:
        coords = [points[i][1] for i in order]
    else:
        coords = [points[i][0] for i in order]
    return order, coords


def solve_collinear(inst):
    """Solve a collinear :class:`Instance` with the linear-time DP."""
    order, coords = project_line(inst.points)
    sol = solve_collinear_linear(coords, [inst.colors[i] for i in order])
    return SubsetSolution(order[i] for i in sol.indices)
