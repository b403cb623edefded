"""Command line front end: instance files, generators, dispatch, cross-checks, SVG.

Instance format::

    <tag>                  general | collinear | two-lines | one-red
    lines <y1> <y2>        only for two-lines
    <x> <y> <color>        one point per line; x, y as integers, decimals or p/q

Blank lines and lines starting with ``#`` are ignored.
"""
import argparse
import json
import os
import random
import sys
import time
from fractions import Fraction

from .bichromatic import solve_bichromatic_lines
from .collinear import solve_collinear, solve_collinear_quadratic, project_line
from .consistency import brute_min_consistent, is_consistent
from .geom import as_coord
from .instance import TAGS, Instance, SubsetSolution, TagMismatch
from .one_red import solve_one_red
from .pair_cs import solve_size_two
from .parallel_lines import solve_two_lines


class ParseError(ValueError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


def parse_instance(text):
    """Instance from the text format; raises ParseError or TagMismatch."""
    rows = [(k + 1, raw.strip()) for k, raw in enumerate(text.splitlines())]
    rows = [(k, r) for k, r in rows if r and not r.startswith("#")]
    if not rows:
        raise ParseError("empty input", 1)
    lineno, tag = rows[0]
    if tag not in TAGS:
        raise ParseError(f"unknown tag {tag!r}", lineno)
    rows = rows[1:]
    lines = None
    if tag == "two-lines":
        if not rows or not rows[0][1].startswith("lines"):
            raise ParseError("two-lines needs a 'lines y1 y2' header", rows[0][0] if rows else lineno)
        lineno, head = rows[0]
        parts = head.split()
        if len(parts) != 3:
            raise ParseError("expected 'lines y1 y2'", lineno)
        try:
            lines = (as_coord(parts[1]), as_coord(parts[2]))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(str(exc), lineno) from exc
        rows = rows[1:]
    points, colors = [], []
    for lineno, row in rows:
        parts = row.split()
        if len(parts) != 3:
            raise ParseError("expected 'x y color'", lineno)
        try:
            points.append((as_coord(parts[0]), as_coord(parts[1])))
            colors.append(int(parts[2]))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(str(exc), lineno) from exc
        if colors[-1] < 0:
            raise ParseError("colors must be non-negative", lineno)
    try:
        inst = Instance(points, colors, tag, lines)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return inst.validate_tag()


def _fmt(v):
    return str(Fraction(v))


def render(inst):
    """Text form of an instance; ``parse_instance(render(x)) == x``."""
    out = [inst.tag]
    if inst.tag == "two-lines":
        out.append(f"lines {_fmt(inst.lines[0])} {_fmt(inst.lines[1])}")
    out += [f"{_fmt(x)} {_fmt(y)} {c}" for (x, y), c in zip(inst.points, inst.colors)]
    return "\n".join(out) + "\n"


# ------------------------------------------------------------------ generators
def _distinct(rng, n, draw):
    seen, out = set(), []
    while len(out) < n:
        p = draw()
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def generate(cls, n, seed, colors=3):
    """Seeded instance of a structural class; identical arguments give identical output."""
    rng = random.Random(f"{cls}:{n}:{seed}:{colors}")
    W = max(4, 3 * n)
    if cls == "general":
        pts = _distinct(rng, n, lambda: (rng.randint(-W, W), rng.randint(-W, W)))
        return Instance(pts, [rng.randrange(colors) for _ in pts])
    if cls == "collinear":
        dx, dy = rng.choice([(1, 0), (0, 1), (1, 1), (2, -1), (3, 2)])
        ts = sorted(rng.sample(range(-W, W + 1), n))
        return Instance([(t * dx, t * dy) for t in ts], [rng.randrange(colors) for _ in ts], "collinear")
    if cls in ("two-lines", "bichromatic"):
        y0, y1 = 0, rng.randint(1, 6)
        if cls == "bichromatic":
            k = rng.randint(1, n - 1) if n > 1 else 1
            pts = (_distinct(rng, k, lambda: (rng.randint(-W, W), y0))
                   + _distinct(rng, n - k, lambda: (rng.randint(-W, W), y1)))
            cols = [0] * k + [1] * (n - k)
        else:
            pts = _distinct(rng, n, lambda: (rng.randint(-W, W), rng.choice((y0, y1))))
            cols = [rng.randrange(colors) for _ in pts]
        return Instance(pts, cols, "two-lines", (y0, y1))
    if cls == "one-red":
        pts = _distinct(rng, n, lambda: (rng.randint(-W, W), rng.randint(-W, W)))
        return Instance(pts, [0] + [1] * (n - 1), "one-red")
    if cls == "pair":
        gap = rng.randint(-W // 4, W)
        pts = _distinct(rng, n, lambda: (rng.randint(-W, W), rng.randint(-W, W)))
        pts.sort()
        k = rng.randint(1, n - 1) if n > 1 else 1
        pts = [(x - gap, y) for x, y in pts[:k]] + pts[k:]
        if len(set(pts)) != len(pts):
            return generate(cls, n, seed + 10 ** 6, colors)
        return Instance(pts, [0] * k + [1] * (n - k))
    raise ValueError(f"unknown class {cls!r}")


# ------------------------------------------------------------------ dispatch
def _brute(inst):
    return brute_min_consistent(inst)


def _pair(inst):
    return solve_size_two(inst)


def _pair_naive(inst):
    return solve_size_two(inst, naive=True)


def _collinear_quadratic(inst):
    order, coords = project_line(inst.points)
    sol = solve_collinear_quadratic(coords, [inst.colors[i] for i in order])
    return SubsetSolution(order[i] for i in sol.indices)


ALGOS = {
    "brute": _brute,
    "collinear": solve_collinear,
    "collinear-quadratic": _collinear_quadratic,
    "two-lines": solve_two_lines,
    "bichromatic": solve_bichromatic_lines,
    "one-red": solve_one_red,
    "pair": _pair,
}
DEFAULT_ALGO = {"general": "brute", "collinear": "collinear", "two-lines": "two-lines", "one-red": "one-red"}
GEN_CLASS = {"brute": "general", "collinear": "collinear", "collinear-quadratic": "collinear",
             "two-lines": "two-lines", "bichromatic": "bichromatic", "one-red": "one-red", "pair": "pair"}
ORACLE = {"pair": _pair_naive}


def solve(inst, algo=None):
    """Run one solver and build the JSON-ready report."""
    algo = algo or DEFAULT_ALGO[inst.tag]
    t0 = time.perf_counter()
    sol = ALGOS[algo](inst)
    ms = (time.perf_counter() - t0) * 1000
    if sol is None:
        return {"algo": algo, "n": len(inst), "size": None, "indices": [],
                "elapsed_ms": round(ms, 3), "verified": None}
    return {"algo": algo, "n": len(inst), "size": sol.size, "indices": list(sol.indices),
            "elapsed_ms": round(ms, 3), "verified": is_consistent(inst, sol)}


def xcheck(algo, seeds, n, start=0):
    """Fast solver against its oracle over a seed range; returns the report dict."""
    oracle = ORACLE.get(algo, _brute)
    mismatches = []
    for seed in range(start, start + seeds):
        inst = generate(GEN_CLASS[algo], n, seed)
        fast, slow = ALGOS[algo](inst), oracle(inst)
        fs = None if fast is None else fast.size
        ss = None if slow is None else slow.size
        ok = fs == ss and (fast is None or is_consistent(inst, fast))
        if not ok:
            mismatches.append({"seed": seed, "fast": fs, "oracle": ss})
    return {"algo": algo, "seeds": seeds, "n": n, "mismatches": mismatches}


def bench(algo, sizes, seed=0):
    rows = []
    for n in sizes:
        inst = generate(GEN_CLASS[algo], n, seed)
        t0 = time.perf_counter()
        ALGOS[algo](inst)
        rows.append({"n": n, "elapsed_ms": round((time.perf_counter() - t0) * 1000, 3)})
    return {"algo": algo, "rows": rows}


# ------------------------------------------------------------------ SVG
PALETTE = ["#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"]


def _clip(poly, a, b, c):
    """Keep the part of ``poly`` with a x + b y <= c (exact)."""
    out = []
    for k in range(len(poly)):
        p, q = poly[k], poly[(k + 1) % len(poly)]
        vp, vq = a * p[0] + b * p[1] - c, a * q[0] + b * q[1] - c
        if vp <= 0:
            out.append(p)
        if (vp < 0 < vq) or (vq < 0 < vp):
            t = Fraction(vp) / (vp - vq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def voronoi_cells(points, sites, box):
    """Voronoi cell of each site inside the box, by halfplane clipping."""
    x0, y0, x1, y1 = box
    cells = []
    for s in sites:
        poly = [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]
        for t in sites:
            if t == s or not poly:
                continue
            # |p - s|^2 <= |p - t|^2  <=>  2 (t - s) . p <= |t|^2 - |s|^2
            poly = _clip(poly, 2 * (t[0] - s[0]), 2 * (t[1] - s[1]),
                         t[0] ** 2 + t[1] ** 2 - s[0] ** 2 - s[1] ** 2)
        cells.append(poly)
    return cells


def emit_svg(inst, sol, path, cells=True, size=480):
    """Write an SVG: points colored by id, chosen points ringed, optional cells of the chosen set."""
    pts = inst.points
    xs, ys = [p[0] for p in pts] or [0], [p[1] for p in pts] or [0]
    pad = max(1, (max(xs) - min(xs) + max(ys) - min(ys)) / 10)
    box = (min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad)
    span = max(box[2] - box[0], box[3] - box[1])

    def sx(v):
        return f"{float((v - box[0]) * size / span):.3f}"

    def sy(v):
        return f"{float((box[3] - v) * size / span):.3f}"

    chosen = list(sol.indices) if sol is not None else []
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
           f'viewBox="0 0 {size} {size}">']
    if cells and chosen:
        for i, poly in zip(chosen, voronoi_cells(pts, [pts[i] for i in chosen], box)):
            if len(poly) >= 3:
                d = " ".join(f"{sx(x)},{sy(y)}" for x, y in poly)
                color = PALETTE[inst.colors[i] % len(PALETTE)]
                out.append(f'<polygon points="{d}" fill="{color}" fill-opacity="0.12" stroke="#888"/>')
    for k, (p, c) in enumerate(zip(pts, inst.colors)):
        color = PALETTE[c % len(PALETTE)]
        out.append(f'<circle cx="{sx(p[0])}" cy="{sy(p[1])}" r="4" fill="{color}"/>')
        if k in chosen:
            out.append(f'<circle cx="{sx(p[0])}" cy="{sy(p[1])}" r="8" fill="none" '
                       f'stroke="{color}" stroke-width="2"/>')
    out.append("</svg>")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(out) + "\n")
    return path


# ------------------------------------------------------------------ main
def _parser():
    seed = int(os.environ.get("CS_SEED", "0"))
    p = argparse.ArgumentParser(prog="python -m consistent_subset")
    sub = p.add_subparsers(dest="cmd", required=True)
    s = sub.add_parser("solve", help="solve an instance file")
    s.add_argument("file")
    s.add_argument("--algo", choices=sorted(ALGOS))
    s.add_argument("--svg")
    v = sub.add_parser("verify", help="check a subset for consistency")
    v.add_argument("file")
    v.add_argument("--indices", required=True, help="comma separated point indices")
    g = sub.add_parser("gen", help="print a seeded instance")
    g.add_argument("--class", dest="cls", required=True,
                   choices=["general", "collinear", "two-lines", "bichromatic", "one-red", "pair"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=seed)
    g.add_argument("--colors", type=int, default=3)
    x = sub.add_parser("xcheck", help="compare a solver with its oracle on seeded instances")
    x.add_argument("--algo", required=True, choices=sorted(ALGOS))
    x.add_argument("--seeds", type=int, default=100)
    x.add_argument("--n", type=int, default=10)
    x.add_argument("--start", type=int, default=seed)
    b = sub.add_parser("bench", help="timing table")
    b.add_argument("--algo", required=True, choices=sorted(ALGOS))
    b.add_argument("--sizes", default="100,1000")
    b.add_argument("--seed", type=int, default=seed)
    return p


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def main(argv=None):
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.cmd == "solve":
            inst = _read(args.file)
            report = solve(inst, args.algo)
            if args.svg:
                idx = report["indices"]
                emit_svg(inst, SubsetSolution(idx) if idx else None, args.svg)
            print(json.dumps(report))
            return 0
        if args.cmd == "verify":
            inst = _read(args.file)
            idx = [int(t) for t in args.indices.split(",") if t.strip()]
            ok = is_consistent(inst, SubsetSolution(idx))
            print(json.dumps({"n": len(inst), "indices": sorted(idx), "verified": ok}))
            return 0 if ok else 1
        if args.cmd == "gen":
            sys.stdout.write(render(generate(args.cls, args.n, args.seed, args.colors)))
            return 0
        if args.cmd == "xcheck":
            report = xcheck(args.algo, args.seeds, args.n, args.start)
            print(json.dumps(report))
            return 1 if report["mismatches"] else 0
        if args.cmd == "bench":
            sizes = [int(t) for t in args.sizes.split(",")]
            print(json.dumps(bench(args.algo, sizes, args.seed)))
            return 0
    except (ParseError, TagMismatch, OSError, ValueError, IndexError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return 2
    return 2
