"""Uniform random tours: the upper-bound baseline."""

from __future__ import annotations

import time

import numpy as np

from tspkit import kernels
from tspkit.core import Instance, Tour
from tspkit.solvers.base import Seed, SolveResult, make_rng


def random_tour(inst: Instance, seed: Seed) -> SolveResult:
    """Draw one uniformly random tour (Fisher-Yates shuffle of the indices).

    Deterministic for a fixed seed. The mean length over many draws serves
    as the upper-bound reference the benchmark normalizes against.
    """
    rng = make_rng(seed)
    t0 = time.perf_counter()
    order = rng.permutation(inst.n).astype(np.int64, copy=False)
    length = kernels.tour_length(inst.coords, order, inst.cached_distance_matrix())
    wall = time.perf_counter() - t0
    return SolveResult("random", Tour(order), float(length), wall, seed, 0)
