import pytest

from consistent_subset.geom import bisector_separates, dist2
from consistent_subset.instance import Instance
from consistent_subset.pair_cs import (NoCandidate, build_cone_spec, circle_plane, inside_halfspace, lift,
                                       outside_halfspace, solve_pair, solve_pair_naive, solve_size_two,
                                       translation_holds)

from helpers import rng_for, separated_colors


def test_circle_lifts_onto_its_plane():
    n, d = circle_plane((1, 2), (4, 6))      # radius 5
    for p in [(6, 2), (-4, 2), (1, 7), (1, -3), (4, 6), (-2, -2)]:
        X = lift(p)
        assert sum(a * b for a, b in zip(n, X)) == d


def test_halfspaces_match_distance_tests():
    rng = rng_for("hs")
    for _ in range(500):
        c, a, p = [(rng.randint(-12, 12), rng.randint(-12, 12)) for _ in range(3)]
        assert inside_halfspace(c, a).contains(lift(p)) == (dist2(p, c) < dist2(a, c))
        assert outside_halfspace(c, a).contains(lift(p)) == (dist2(p, c) > dist2(a, c))


def test_wedge_single_points():
    # one red and one blue: always a pair, cone is a wedge of two halfspaces
    assert solve_pair([(0, 0)], [(5, 1)]) == (0, 0)
    assert len(build_cone_spec([(0, 0)], [(5, 1)]).halfspaces) == 2


def test_interlocking_hulls_have_no_pair():
    R = [(0, 0), (4, 4)]
    B = [(0, 4), (4, 0)]
    assert solve_pair(R, B) is None
    with pytest.raises(NoCandidate):
        build_cone_spec(R, B)


def test_far_clusters_always_pair():
    R = [(x, y) for x in range(3) for y in range(3)]
    B = [(x + 1000, y) for x, y in R]
    got = solve_pair(R, B)
    assert got is not None and bisector_separates(R[got[0]], B[got[1]], R, B)


def test_full_boundary_and_translation_agree():
    for seed in range(120):
        rng = rng_for("pf", seed)
        R, B = separated_colors(rng, rng.randint(2, 25))
        want = solve_pair_naive(R, B)
        for full in (False, True):
            got = solve_pair(R, B, full_boundary=full)
            assert (got is None) == (want is None)
            if got is not None:
                assert bisector_separates(R[got[0]], B[got[1]], R, B)
        try:
            assert translation_holds(R, B)
        except NoCandidate:
            pass


def test_size_two_on_instance():
    inst = Instance([(0, 0), (1, 0), (10, 0), (11, 1)], [0, 0, 1, 1])
    sol = solve_size_two(inst)
    assert sol.size == 2 and sorted(inst.colors[i] for i in sol.indices) == [0, 1]
    assert solve_size_two(Instance([(0, 0), (1, 0), (2, 0)], [0, 1, 2])) is None
