from fractions import Fraction

import pytest

from consistent_subset.consistency import brute_min_consistent, is_consistent
from consistent_subset.geom import dist2
from consistent_subset.instance import Instance
from consistent_subset.one_red import (BadColorProfile, CyclicArcSystem, NotCoverable, RadialOrder,
                                       RangeFarthestTree, build_arcs, compute_c_cc, compute_c_cc_naive,
                                       invert, min_circle_cover, min_circle_cover_brute, solve_one_red)

from helpers import one_red_instance, rng_for


def test_inversion_is_an_involution():
    r = (2, -3)
    for p in [(5, 1), (-7, 4), (2, 9), (3, -3)]:
        w = invert(r, p)
        assert invert(r, w) == (Fraction(p[0]), Fraction(p[1]))
        # radius times inverted radius is one
        assert dist2(r, p) * dist2(r, w) == 1


def test_serving_matches_inverse_disk():
    # s serves b (|bs| < |br|) iff <b - r, s* - r> > 1/2
    rng = rng_for("inv")
    r = (0, 0)
    for _ in range(500):
        b = (rng.randint(-9, 9), rng.randint(-9, 9))
        s = (rng.randint(-9, 9), rng.randint(-9, 9))
        if b == r or s == r:
            continue
        w = invert(r, s)
        assert (dist2(b, s) < dist2(b, r)) == (b[0] * w[0] + b[1] * w[1] > Fraction(1, 2))


def test_radial_order_is_clockwise():
    r = (0, 0)
    order = RadialOrder.build(r, [(0, 1), (1, 0), (-1, 0), (0, -1), (1, -1)])
    assert order.blues == [(1, 0), (1, -1), (0, -1), (-1, 0), (0, 1)]
    assert not order.ties
    assert RadialOrder.build(r, [(1, 1), (2, 2), (0, 3)]).ties


def test_farthest_scans_hull_correctly():
    rng = rng_for("far")
    pts = list({(rng.randint(-30, 30), rng.randint(-30, 30)) for _ in range(40)} - {(0, 0)})
    tree = RangeFarthestTree(pts, (0, 0), offsets=pts)
    for v in range(1, 2 * tree.size):
        leaves = set()
        stack = [v]
        while stack:
            u = stack.pop()
            if u >= tree.size:
                if u - tree.size < 2 * tree.m:
                    leaves.add((u - tree.size) % tree.m)
            else:
                stack += [2 * u, 2 * u + 1]
        if not leaves:
            continue
        q = (rng.randint(-40, 40), rng.randint(-40, 40))
        assert tree.farthest(v, q)[0] == max(dist2(pts[k], q) for k in leaves)


def test_tree_arcs_equal_quadratic_scan():
    for seed in range(150):
        rng = rng_for("cc", seed)
        inst = one_red_instance(rng, rng.randint(2, 60))
        order = RadialOrder.build(inst.points[0], list(inst.points[1:]))
        assert compute_c_cc(order.r, order.blues) == compute_c_cc_naive(order.r, order.blues)


def test_whole_circle_arc():
    # a blue far out whose disk holds everything else
    sys_ = build_arcs([None, (0, 0)])
    assert sys_.covered(0) == set(range(4))
    assert min_circle_cover(sys_) == (0,)


def test_cover_matches_brute():
    rng = rng_for("cover")
    for _ in range(200):
        m = rng.randint(1, 8)
        arcs = [(rng.randrange(2 * m), rng.randrange(2 * m)) for _ in range(rng.randint(1, m + 2))]
        system = CyclicArcSystem(m, arcs)
        try:
            fast = min_circle_cover(system)
        except NotCoverable:
            with pytest.raises(NotCoverable):
                min_circle_cover_brute(system)
            continue
        assert set().union(*(system.covered(i) for i in fast)) == set(range(2 * m))
        assert len(fast) == len(min_circle_cover_brute(system))


def test_end_to_end_against_brute():
    for seed in range(100):
        rng = rng_for("e2e", seed)
        inst = one_red_instance(rng, rng.randint(2, 12))
        sol = solve_one_red(inst)
        assert is_consistent(inst, sol)
        assert sol.size == brute_min_consistent(inst).size == solve_one_red(inst, naive=True).size


def test_color_profile_checked():
    with pytest.raises(BadColorProfile):
        solve_one_red(Instance([(0, 0), (1, 0), (2, 0), (3, 1)], [0, 0, 1, 1]))
    with pytest.raises(BadColorProfile):
        solve_one_red(Instance([(0, 0), (1, 0), (2, 0)], [0, 1, 2]))
