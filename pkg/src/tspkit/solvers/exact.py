"""Exhaustive search: the exact oracle for small instances.

Enumerates every closed tour once (city 0 fixed first, second index below
the last) and returns a shortest one, breaking ties toward the
lexicographically smallest order. The tour count is (n-1)!/2, so the oracle
refuses anything above n = 12.
"""

from __future__ import annotations

import math
import time

from tspkit import kernels
from tspkit.core import Instance, Tour
from tspkit.errors import DomainError, InstanceTooLargeError
from tspkit.solvers.base import SolveResult

EXACT_MAX_N = 12


def exact_tour(inst: Instance) -> SolveResult:
    """Optimal tour by enumeration; only for 3 <= n <= 12."""
    n = inst.n
    if n < 3:
        raise DomainError(f"exact_tour requires n >= 3, got {n}")
    if n > EXACT_MAX_N:
        orderings = math.factorial(n - 1)
        raise InstanceTooLargeError(
            f"exhaustive search refused for n={n}: (n-1)! = {orderings} orderings, "
            f"{orderings // 2} distinct tours ((n-1)!/2); cap is n <= {EXACT_MAX_N}"
        )
    t0 = time.perf_counter()
    D = inst.distance_matrix()
    order, length = kernels.exact_search(inst.coords, D)
    wall = time.perf_counter() - t0
    return SolveResult("exact", Tour(order), float(length), wall, None, 0)
