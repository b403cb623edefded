"""Minimum consistent subsets of colored planar point sets, in exact arithmetic."""
from .bichromatic import solve_bichromatic_lines
from .collinear import (solve_collinear, solve_collinear_constrained, solve_collinear_linear,
                        solve_collinear_quadratic)
from .cone_sweep import (DegeneracyDetected, EmptyInterior, Halfspace3, canonicalize,
                         naive_incidence, point_cone_incidence, sweep_incidence)
from .consistency import brute_min_consistent, decide_k, is_consistent
from .geom import bisector_separates, convex_hull, orient
from .instance import Instance, SubsetSolution, TagMismatch
from .one_red import solve_one_red
from .pair_cs import NoCandidate, build_cone_spec, solve_pair, solve_pair_naive, solve_size_two
from .parallel_lines import solve_two_lines

__all__ = [
    "Instance", "SubsetSolution", "TagMismatch", "is_consistent", "brute_min_consistent", "decide_k",
    "orient", "convex_hull", "bisector_separates",
    "solve_collinear", "solve_collinear_linear", "solve_collinear_quadratic", "solve_collinear_constrained",
    "solve_two_lines", "solve_bichromatic_lines", "solve_one_red",
    "solve_pair", "solve_pair_naive", "solve_size_two", "build_cone_spec", "NoCandidate",
    "Halfspace3", "canonicalize", "sweep_incidence", "naive_incidence", "point_cone_incidence",
    "EmptyInterior", "DegeneracyDetected",
]
