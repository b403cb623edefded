from consistent_subset.bichromatic import _Solver, captured_interval, solve_bichromatic_lines, split_bichromatic
from consistent_subset.consistency import brute_min_consistent, is_consistent
from consistent_subset.geom import dist2
from consistent_subset.instance import Instance

import pytest

from helpers import bichromatic_instance, rng_for

RED = [(x, 4) for x in (3, 9, 11, 14, 18)]
BLUE = [(x, 0) for x in (2, 14, 15, 18)]


def test_flanking_witnesses_miss_an_offender():
    # s = r(3), a = r(18), t = b(15), b = b(18): r(11) is closer to b(15)
    # than to either red end, yet the reds flanking x = 15 and x = 18 pass
    sol = _Solver(RED, BLUE)
    assert sol.quad_valid_flanking(0, 4, 0, 3, 2)
    assert not sol.quad_valid_scan(0, 4, 0, 3, 2)
    assert not sol.quad_valid_witness(0, 4, 0, 3, 2)
    assert dist2((11, 4), (15, 0)) < min(dist2((11, 4), (3, 4)), dist2((11, 4), (18, 4)))


def test_witness_check_matches_scan():
    for seed in range(150):
        rng = rng_for("bw", seed)
        inst = bichromatic_instance(rng, rng.randint(4, 14))
        red, blue = split_bichromatic(inst)
        sol = _Solver([inst.points[i] for i in red], [inst.points[i] for i in blue])
        for u in (0, 1):
            na, nb = len(sol.lines[u]), len(sol.lines[1 - u])
            for a in range(na):
                for s in range(a):
                    for b in range(nb):
                        for t in range(b):
                            assert sol.quad_valid_witness(u, a, s, b, t) == sol.quad_valid_scan(u, a, s, b, t)


def test_captured_interval_is_exact():
    rng = rng_for("cap")
    for _ in range(300):
        q = (rng.randint(-20, 20), 0)
        anchors = [(rng.randint(-20, 20), 5) for _ in range(2)]
        lo, hi = captured_interval(q, anchors)
        for x in range(-40, 41):
            p = (x, 5)
            inside = all(dist2(p, q) <= dist2(p, a) for a in anchors)
            assert inside == (lo <= x <= hi)


def test_matches_brute_force_and_is_consistent():
    for seed in range(80):
        rng = rng_for("bb", seed)
        inst = bichromatic_instance(rng, rng.randint(2, 11))
        sol = solve_bichromatic_lines(inst)
        assert is_consistent(inst, sol)
        assert sol.size == brute_min_consistent(inst).size


def test_rejects_mixed_lines():
    inst = Instance([(0, 0), (1, 1), (2, 0), (3, 1)], [0, 0, 1, 1])
    with pytest.raises(ValueError):
        solve_bichromatic_lines(inst)
