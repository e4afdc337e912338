"""Shared fixtures and the independent brute-force oracle."""

from __future__ import annotations

import math
from itertools import permutations

import pytest

from tspkit.core import Instance
from tspkit.data import GeneratorConfig, generate_random

UNIT_SQUARE = [(0.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, 0.0)]


@pytest.fixture
def square() -> Instance:
    return Instance("square", UNIT_SQUARE)


def rand_instance(n: int, seed: int, extent: float = 4000.0) -> Instance:
    return generate_random(GeneratorConfig(n=n, extent=extent, seed=seed))


def brute_force_optimum(inst: Instance) -> float:
    """Exhaustive minimum tour length, written independently of the package
    kernels: plain itertools enumeration and math.dist."""
    pts = [tuple(row) for row in inst.coords]
    n = len(pts)
    best = math.inf
    for rest in permutations(range(1, n)):
        if rest[0] > rest[-1]:
            continue
        length = math.dist(pts[0], pts[rest[0]])
        for a, b in zip(rest, rest[1:]):
            length += math.dist(pts[a], pts[b])
        length += math.dist(pts[rest[-1]], pts[0])
        if length < best:
            best = length
    return best
