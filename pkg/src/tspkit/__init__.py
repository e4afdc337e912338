"""Euclidean TSP toolkit.

Construction and improvement heuristics (random baseline, greedy edge
selection, 2-opt local search, genetic algorithm), an exhaustive oracle for
small instances, dataset ingestion/generation, and a benchmark harness that
compares runtime and tour quality against a random-tour upper bound.
"""

from tspkit.bench import BenchConfig, BenchRecord, SummaryRow, emit, run_benchmark, summarize
from tspkit.core import (
    Instance,
    Point,
    Tour,
    count_edges,
    count_tours,
    distance,
    tour_length,
    validate_tour,
)
from tspkit.data import GeneratorConfig, fixture, generate_random, parse_instance, write_instance
from tspkit.solvers import (
    GaParams,
    Seed,
    SolveResult,
    TwoOptParams,
    exact_tour,
    genetic,
    greedy_tour,
    random_tour,
    two_opt,
)

__version__ = "0.1.0"

__all__ = [
    "BenchConfig",
    "BenchRecord",
    "GaParams",
    "GeneratorConfig",
    "Instance",
    "Point",
    "Seed",
    "SolveResult",
    "SummaryRow",
    "Tour",
    "TwoOptParams",
    "count_edges",
    "count_tours",
    "distance",
    "emit",
    "exact_tour",
    "fixture",
    "generate_random",
    "genetic",
    "greedy_tour",
    "parse_instance",
    "random_tour",
    "run_benchmark",
    "summarize",
    "tour_length",
    "two_opt",
    "validate_tour",
    "write_instance",
]
