"""2-opt local search: uncross a tour by reversing segments.

A move replaces route[0..i-1] + route[i..k] + route[k+1..] with
route[0..i-1] + reverse(route[i..k]) + route[k+1..] and is evaluated in
O(1) from the two removed and two added edges. Moves are accepted only when
they shorten the tour by more than `IMPROVEMENT_THRESHOLD`, which keeps the
search from looping on floating-point noise and guarantees termination.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from tspkit import kernels
from tspkit.core import Instance, Tour, ensure_valid_tour
from tspkit.errors import ConfigurationError
from tspkit.solvers.base import SolveResult

FIRST_IMPROVEMENT = "first-improvement"
BEST_IMPROVEMENT = "best-improvement"

# Minimum strict decrease for a move to be accepted (absolute).
IMPROVEMENT_THRESHOLD = 1e-10


@dataclass(frozen=True)
class TwoOptParams:
    """first-improvement restarts its scan after each accepted move;
    best-improvement applies the single best move of each full scan.
    max_passes None means run to a local optimum."""

    strategy: str = FIRST_IMPROVEMENT
    max_passes: int | None = None

    def validate(self) -> None:
        if self.strategy not in (FIRST_IMPROVEMENT, BEST_IMPROVEMENT):
            raise ConfigurationError(
                f"strategy must be '{FIRST_IMPROVEMENT}' or '{BEST_IMPROVEMENT}', "
                f"got {self.strategy!r}"
            )
        if self.max_passes is not None and self.max_passes < 1:
            raise ConfigurationError(f"max_passes must be >= 1 when bounded, got {self.max_passes}")


def two_opt(inst: Instance, initial: Tour, params: TwoOptParams | None = None) -> SolveResult:
    """Improve `initial` until 2-optimal (or the pass budget runs out).

    The result is never longer than the input. Sizes below 4 have no
    productive move and come back unchanged after one scanning pass.
    """
    p = params or TwoOptParams()
    p.validate()
    ensure_valid_tour(inst, initial)
    t0 = time.perf_counter()
    D = inst.distance_matrix()
    order, passes = kernels.two_opt(
        inst.coords,
        initial.order,
        D,
        first_improvement=p.strategy == FIRST_IMPROVEMENT,
        threshold=IMPROVEMENT_THRESHOLD,
        max_passes=-1 if p.max_passes is None else p.max_passes,
    )
    length = kernels.tour_length(inst.coords, order, D)
    wall = time.perf_counter() - t0
    return SolveResult("two_opt", Tour(order), float(length), wall, None, int(passes))
