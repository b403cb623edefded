"""Seeded instance generators and shared checks for the test suite."""
import random

from consistent_subset.cone_sweep import Halfspace3
from consistent_subset.consistency import is_consistent
from consistent_subset.instance import Instance

CHECKS = {"count": 0, "failures": []}


def record(inst, sol, label):
    """Consistency check that also feeds the final acceptance tally."""
    CHECKS["count"] += 1
    ok = is_consistent(inst, sol)
    if not ok:
        CHECKS["failures"].append((label, inst, sol.indices))
    return ok


def collinear(rng, n, colors=4, spread=3):
    xs = sorted(rng.sample(range(-spread * n - 5, spread * n + 5), n))
    cols = [rng.randrange(colors) for _ in xs]
    return xs, cols


def collinear_instance(rng, n, colors=4):
    xs, cols = collinear(rng, n, colors)
    return Instance([(x, 0) for x in xs], cols, "collinear"), xs, cols


def two_lines_instance(rng, n, colors=3, width=None):
    width = width or 2 * n + 2
    gap = rng.randint(1, 6)
    seen, pts = set(), []
    while len(pts) < n:
        p = (rng.randint(-width, width), rng.choice((0, gap)))
        if p not in seen:
            seen.add(p)
            pts.append(p)
    return Instance(pts, [rng.randrange(colors) for _ in pts], "two-lines", (0, gap))


def bichromatic_instance(rng, n, width=None):
    width = width or 2 * n + 2
    gap = rng.randint(1, 6)
    k = rng.randint(1, n - 1)
    red = rng.sample(range(-width, width + 1), k)
    blue = rng.sample(range(-width, width + 1), n - k)
    pts = [(x, gap) for x in red] + [(x, 0) for x in blue]
    return Instance(pts, [0] * k + [1] * (n - k), "two-lines", (0, gap))


def one_red_instance(rng, n, width=None):
    width = width or 3 * n
    seen, pts = set(), []
    while len(pts) < n:
        p = (rng.randint(-width, width), rng.randint(-width, width))
        if p not in seen:
            seen.add(p)
            pts.append(p)
    return Instance(pts, [0] + [1] * (n - 1), "one-red")


def separated_colors(rng, n):
    """Reds shifted left of blues by a random gap, so hulls are often disjoint."""
    W = rng.choice([5, 20, 100, 1000])
    gap = rng.randint(-W // 3, W)
    while True:
        pts = set()
        while len(pts) < n:
            pts.add((rng.randint(-W, W), rng.randint(-W, W)))
        pts = sorted(pts, key=lambda p: (p[0] + rng.randint(-W // 4, W // 4), p))
        k = rng.randint(1, n - 1)
        R = [(x - gap, y) for x, y in pts[:k]]
        B = list(pts[k:])
        rng.shuffle(R)
        rng.shuffle(B)
        if not set(R) & set(B):
            return R, B


def cone_family(rng, ncones, nqueries, open_=False, width=1000):
    """A random cone through apexes[0], its translates, and queries near the apexes."""
    d0 = [rng.randint(-3, 3) for _ in range(3)]
    if d0 == [0, 0, 0]:
        d0 = [0, 0, 1]
    apex0 = tuple(rng.randint(-width, width) for _ in range(3))
    hs = []
    for _ in range(rng.randint(2, 7)):
        n = [rng.randint(-30, 30) for _ in range(3)]
        s = sum(a * b for a, b in zip(n, d0))
        if s == 0:
            continue
        if s > 0:
            n = [-v for v in n]
        hs.append(Halfspace3(*n, sum(a * b for a, b in zip(n, apex0)), open_))
    if not hs:
        n = [-v for v in d0]
        hs.append(Halfspace3(*n, sum(a * b for a, b in zip(n, apex0)), open_))
    apexes = [apex0] + [tuple(rng.randint(-width, width) for _ in range(3)) for _ in range(ncones - 1)]
    queries = []
    for _ in range(nqueries):
        a = rng.choice(apexes)
        queries.append(tuple(a[k] + rng.randint(-150, 150) for k in range(3)))
    return hs, apexes, queries


def inside_cone(hs, apexes, ci, q):
    base = apexes[0]
    return all(h.contains(tuple(q[k] - apexes[ci][k] + base[k] for k in range(3))) for h in hs)


def balanced_family(rng, ncones, nqueries, want_hit):
    """Queries that miss every cone, plus one hitting query when ``want_hit``."""
    hs, ap, qs = cone_family(rng, ncones, 3 * nqueries, rng.random() < 0.5)
    hits = [q for q in qs if any(inside_cone(hs, ap, c, q) for c in range(len(ap)))]
    miss = [q for q in qs if q not in hits][:nqueries]
    if want_hit and hits:
        miss.insert(rng.randint(0, len(miss)), rng.choice(hits))
    return hs, ap, miss or qs[:1]


def rng_for(*key):
    return random.Random(":".join(map(str, key)))
