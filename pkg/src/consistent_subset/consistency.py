"""Consistency verification and exhaustive minimum-subset search."""
from itertools import chain, combinations, islice
from math import lcm

import numpy as np

from .geom import dist2
from .instance import SubsetSolution


class NoSolutionWithinCap(RuntimeError):
    pass


def _indices(sol):
    return sol.indices if isinstance(sol, SubsetSolution) else tuple(sol)


def is_consistent(inst, sol):
    """Every point's nearest selected points all carry its color.

    Ties between differently colored nearest points count as a failure.
    """
    idx = _indices(sol)
    if not idx:
        return len(inst) == 0
    n = len(inst)
    if any(i < 0 or i >= n for i in idx):
        raise IndexError("solution index out of range")
    pts, cols = inst.points, inst.colors
    for p, c in zip(pts, cols):
        best = None
        ok = True
        for j in idx:
            d = dist2(p, pts[j])
            if best is None or d < best:
                best, ok = d, cols[j] == c
            elif d == best and cols[j] != c:
                ok = False
        if not ok:
            return False
    return True


def distance_matrix(points):
    """Exact squared distances as an int64 array (object dtype on overflow)."""
    scale = 1
    for x, y in points:
        for v in (x, y):
            den = getattr(v, "denominator", 1)
            if den != 1:
                scale = lcm(scale, den)
    ip = [(int(x * scale), int(y * scale)) for x, y in points]
    rows = [[dist2(p, q) for q in ip] for p in ip]
    top = max((max(r) for r in rows), default=0)
    dtype = np.int64 if top < 2 ** 62 else object
    return np.array(rows, dtype=dtype).reshape(len(ip), len(ip))


def _consistent_rows(dmat, colors, combos):
    """Boolean mask over the rows of ``combos`` (m x k index matrix)."""
    alive = np.arange(len(combos))
    ccols = colors[combos]
    for p in range(len(dmat)):
        rows = combos[alive]
        d = dmat[p][rows]
        dmin = d.min(axis=1)
        clash = (d == dmin[:, None]) & (ccols[alive] != colors[p])
        alive = alive[~clash.any(axis=1)]
        if not alive.size:
            break
    mask = np.zeros(len(combos), dtype=bool)
    mask[alive] = True
    return mask


def _search(inst, sizes, allowed=None, forced=(), chunk=4096):
    n = len(inst)
    if n == 0:
        return ()
    dmat = distance_matrix(inst.points)
    colors = np.array(inst.colors)
    forced = tuple(sorted(forced))
    pool = [i for i in (range(n) if allowed is None else sorted(allowed)) if i not in forced]
    ncolors = len(set(inst.colors))
    for k in sizes:
        extra = k - len(forced)
        if k < ncolors or extra < 0 or extra > len(pool):
            continue
        gen = chain.from_iterable(combinations(pool, extra))
        fixed = np.array(forced, dtype=np.intp)
        while True:
            flat = np.fromiter(islice(gen, chunk * extra), dtype=np.intp)
            if extra and not flat.size:
                break
            rows = flat.reshape(-1, extra) if extra else np.empty((1, 0), np.intp)
            if forced:
                rows = np.sort(np.hstack([np.broadcast_to(fixed, (len(rows), len(forced))),
                                          rows]), axis=1)
            hits = np.flatnonzero(_consistent_rows(dmat, colors, rows))
            if hits.size:
                return tuple(int(i) for i in rows[hits[0]])
            if not extra:
                break
    return None


def brute_min_consistent(inst, size_cap=None):
    """Minimum consistent subset by enumeration in order of increasing size.

    Within one size the lexicographically first consistent index set wins
    when ``forced`` is empty.  Exponential; meant for n up to about 20.
    """
    cap = len(inst) if size_cap is None else size_cap
    found = _search(inst, range(1, cap + 1))
    if found is None:
        if len(inst) == 0:
            return SubsetSolution(())
        raise NoSolutionWithinCap(f"no consistent subset of size <= {cap}")
    return SubsetSolution(found)


def brute_min_restricted(inst, allowed, forced=()):
    """Smallest consistent subset drawn from ``allowed`` that contains ``forced``.

    Validity is checked against every point of the instance.  Returns None
    when no such subset exists.
    """
    allowed = set(allowed) | set(forced)
    found = _search(inst, range(len(forced), len(allowed) + 1), allowed, forced)
    return None if found is None else SubsetSolution(found)


def decide_k(inst, k):
    """Some consistent subset of exactly ``k`` points, or None."""
    if k < 1 or k > len(inst):
        return None
    found = _search(inst, [k])
    return None if found is None else SubsetSolution(found)
