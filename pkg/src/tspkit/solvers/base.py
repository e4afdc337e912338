"""Shared solver plumbing: seeds, RNG construction, the result record."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from tspkit.core import Tour
from tspkit.errors import ConfigurationError

# Seeds are 64-bit unsigned integers. The generator is numpy's PCG64;
# reproducibility is guaranteed within this implementation.
Seed = int


def make_rng(seed: Seed) -> np.random.Generator:
    """Deterministic generator for a seed; same seed, same stream."""
    if not isinstance(seed, (int, np.integer)) or isinstance(seed, bool):
        raise ConfigurationError(f"seed must be an integer, got {type(seed).__name__}")
    if seed < 0:
        raise ConfigurationError(f"seed must be a nonnegative 64-bit integer, got {seed}")
    return np.random.Generator(np.random.PCG64(int(seed)))


@dataclass(frozen=True)
class SolveResult:
    """One solver run: the tour, its length, and run metadata.

    `iterations` counts scanning passes for 2-opt and generations for the
    genetic algorithm; constructive methods report 0.
    """

    algorithm: str
    tour: Tour
    length: float
    wall_time: float
    seed: Seed | None
    iterations: int
