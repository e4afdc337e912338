"""Tour construction and improvement algorithms plus the exact oracle."""

from tspkit.solvers.base import Seed, SolveResult, make_rng
from tspkit.solvers.exact import EXACT_MAX_N, exact_tour
from tspkit.solvers.genetic import GaParams, genetic
from tspkit.solvers.greedy import construction_trace, greedy_tour
from tspkit.solvers.random_path import random_tour
from tspkit.solvers.two_opt import (
    BEST_IMPROVEMENT,
    FIRST_IMPROVEMENT,
    IMPROVEMENT_THRESHOLD,
    TwoOptParams,
    two_opt,
)

__all__ = [
    "BEST_IMPROVEMENT",
    "EXACT_MAX_N",
    "FIRST_IMPROVEMENT",
    "GaParams",
    "IMPROVEMENT_THRESHOLD",
    "Seed",
    "SolveResult",
    "TwoOptParams",
    "construction_trace",
    "exact_tour",
    "genetic",
    "greedy_tour",
    "make_rng",
    "random_tour",
    "two_opt",
]
