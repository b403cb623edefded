from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from consistent_subset.geom import (HullsIntersect, as_coord, bisector_separates, chains_between_tangents,
                                    cmp_dist, convex_hull, disk_condition, dist2, hulls_intersect, orient,
                                    point_in_hull, separating_tangents)

from helpers import rng_for, separated_colors

coords = st.integers(-50, 50)
points = st.tuples(coords, coords)


def test_as_coord_parses_exactly():
    assert as_coord("3/6") == Fraction(1, 2)
    assert as_coord("0.25") == Fraction(1, 4)
    assert as_coord("4/2") == 2 and isinstance(as_coord("4/2"), int)
    with pytest.raises(TypeError):
        as_coord(0.5)


@given(points, points, points)
def test_orient_is_antisymmetric(a, b, c):
    assert orient(a, b, c) == -orient(b, a, c) == orient(b, c, a)


def test_cmp_dist_signs():
    assert cmp_dist((0, 0), (1, 0), (2, 0)) < 0
    assert cmp_dist((0, 0), (1, 0), (0, 1)) == 0
    assert dist2((0, 0), (3, 4)) == 25


@settings(max_examples=200)
@given(st.lists(points, min_size=1, max_size=25, unique=True))
def test_hull_contains_everything_and_turns_left(pts):
    hull = convex_hull(pts)
    v = hull.vertices
    assert set(v) <= set(pts)
    if len(v) >= 3:
        assert all(orient(v[k], v[(k + 1) % len(v)], v[(k + 2) % len(v)]) > 0 for k in range(len(v)))
    assert all(point_in_hull(p, hull) for p in pts)


def _brute_intersect(A, B):
    # disjoint hulls have a separating axis normal to, or along, a segment
    # between two input points; try every such axis
    pairs = [(p, q) for p, q in combinations(A + B, 2) if p != q]
    dirs = [(q[1] - p[1], p[0] - q[0]) for p, q in pairs] + [(q[0] - p[0], q[1] - p[1]) for p, q in pairs]
    for d in dirs:
        pa = [d[0] * x + d[1] * y for x, y in A]
        pb = [d[0] * x + d[1] * y for x, y in B]
        if max(pa) < min(pb) or max(pb) < min(pa):
            return False
    return bool(dirs) or A[0] == B[0]


def test_hulls_intersect_matches_separating_direction_search():
    for seed in range(300):
        rng = rng_for("hull", seed)
        A = list({(rng.randint(-6, 6), rng.randint(-6, 6)) for _ in range(rng.randint(1, 5))})
        B = list({(rng.randint(-6, 6) + rng.randint(0, 8), rng.randint(-6, 6)) for _ in range(rng.randint(1, 5))})
        assert hulls_intersect(convex_hull(A), convex_hull(B)) == _brute_intersect(A, B), (A, B)


def test_separating_tangents_leave_hulls_on_opposite_sides():
    for seed in range(200):
        R, B = separated_colors(rng_for("tan", seed), rng_for("tan", seed).randint(2, 20))
        hr, hb = convex_hull(R), convex_hull(B)
        if hulls_intersect(hr, hb):
            with pytest.raises(HullsIntersect):
                separating_tangents(hr, hb)
            continue
        (u1, v1), (u2, v2) = separating_tangents(hr, hb)
        assert all(orient(u1, v1, p) >= 0 for p in R) and all(orient(u1, v1, p) <= 0 for p in B)
        assert all(orient(u2, v2, p) <= 0 for p in R) and all(orient(u2, v2, p) >= 0 for p in B)


def test_bisector_separation_is_the_definition():
    R, B = [(0, 0), (0, 2)], [(4, 0), (4, 2)]
    assert bisector_separates((0, 0), (4, 0), R, B)
    for r in R:
        for b in B:
            want = all(dist2(p, r) < dist2(p, b) for p in R) and all(dist2(p, b) < dist2(p, r) for p in B)
            assert bisector_separates(r, b, R, B) == want


def test_equidistant_point_breaks_separation():
    assert not bisector_separates((0, 0), (2, 0), [(0, 0), (1, 5)], [(2, 0)])


def test_disk_condition_on_chains_agrees_with_bisector():
    for seed in range(100):
        rng = rng_for("disk", seed)
        R, B = separated_colors(rng, rng.randint(2, 14))
        if hulls_intersect(convex_hull(R), convex_hull(B)):
            continue
        Rc, Bc = chains_between_tangents(R, B)
        assert set(Rc) <= set(convex_hull(R).vertices)
        for r in R:
            for b in B:
                assert disk_condition(r, b, Rc, Bc) == bisector_separates(r, b, R, B)
