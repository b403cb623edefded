from itertools import combinations

import pytest

from consistent_subset.consistency import (NoSolutionWithinCap, brute_min_consistent, brute_min_restricted,
                                           decide_k, distance_matrix, is_consistent)
from consistent_subset.geom import dist2
from consistent_subset.instance import Instance, SubsetSolution, TagMismatch

from helpers import rng_for


def test_instance_rejects_bad_input():
    with pytest.raises(ValueError):
        Instance([(0, 0), (0, 0)], [0, 1])
    with pytest.raises(ValueError):
        Instance([(0, 0)], [0, 1])
    with pytest.raises(ValueError):
        Instance([(0, 0)], [0], tag="spiral")


def test_tags_are_validated():
    Instance([(0, 0), (1, 1), (2, 2)], [0, 0, 1], "collinear").validate_tag()
    with pytest.raises(TagMismatch):
        Instance([(0, 0), (1, 1), (2, 3)], [0, 0, 1], "collinear").validate_tag()
    with pytest.raises(TagMismatch):
        Instance([(0, 0), (1, 3)], [0, 1], "two-lines", (0, 1)).validate_tag()
    with pytest.raises(TagMismatch):
        Instance([(0, 0), (1, 3), (2, 2), (5, 5)], [0, 0, 1, 1], "one-red").validate_tag()
    Instance([(0, 0), (1, 3), (2, 2)], [0, 1, 1], "one-red").validate_tag()


def test_solution_normalizes_and_rejects_duplicates():
    assert SubsetSolution([3, 1]).indices == (1, 3)
    with pytest.raises(ValueError):
        SubsetSolution([1, 1])


def test_ties_between_colors_are_inconsistent():
    inst = Instance([(0, 0), (2, 0), (1, 0)], [0, 1, 0])
    assert not is_consistent(inst, [0, 1])
    assert is_consistent(inst, [0, 1, 2])


def test_single_color_needs_one_point():
    inst = Instance([(0, 0), (5, 1), (2, 7)], [4, 4, 4])
    assert brute_min_consistent(inst).size == 1


def _reference_min(inst):
    n = len(inst)
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            ok = True
            for p, c in zip(inst.points, inst.colors):
                best = min(dist2(p, inst.points[j]) for j in combo)
                if any(dist2(p, inst.points[j]) == best and inst.colors[j] != c for j in combo):
                    ok = False
                    break
            if ok:
                return k
    return 0


def test_brute_force_matches_plain_enumeration():
    for seed in range(150):
        rng = rng_for("brute", seed)
        n = rng.randint(1, 9)
        pts = list({(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(n)})
        inst = Instance(pts, [rng.randrange(3) for _ in pts])
        sol = brute_min_consistent(inst)
        assert sol.size == _reference_min(inst)
        assert is_consistent(inst, sol)
        assert decide_k(inst, sol.size) is not None
        if sol.size > 1:
            assert decide_k(inst, sol.size - 1) is None


def test_cap_and_restriction():
    inst = Instance([(0, 0), (1, 0), (2, 0), (3, 0)], [0, 1, 0, 1])
    with pytest.raises(NoSolutionWithinCap):
        brute_min_consistent(inst, size_cap=3)
    assert brute_min_restricted(inst, [0, 1, 2, 3], forced=[0]).size == 4
    assert brute_min_restricted(inst, [0, 1]) is None


def test_distance_matrix_is_exact():
    d = distance_matrix([(0, 0), (3, 4)])
    assert d[0][1] == 25 and d[1][0] == 25 and d[0][0] == 0
