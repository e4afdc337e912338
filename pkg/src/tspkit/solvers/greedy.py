"""Greedy edge construction: cheapest feasible edges first, one closed cycle.

All n(n-1)/2 edges are sorted ascending by weight, then scanned once. An
edge is accepted iff neither endpoint already has degree 2 and it does not
close a cycle unless it is the n-th accepted edge; the accepted edges form
exactly one Hamiltonian cycle. Equal-weight edges keep (min index, max
index) ascending order via a stable sort, so the result is deterministic.
O(n^2 log n) overall, dominated by the sort.
"""

from __future__ import annotations

import time

import numpy as np

from tspkit import kernels
from tspkit.core import Instance, Tour
from tspkit.errors import DomainError, TspkitError
from tspkit.kernels import pure as _pure
from tspkit.solvers.base import SolveResult


def _sorted_edges(coords: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    n = coords.shape[0]
    u, v = np.triu_indices(n, 1)
    u = u.astype(np.int64, copy=False)
    v = v.astype(np.int64, copy=False)
    diff = coords[u] - coords[v]
    sq = diff * diff
    w = sq[:, 0].copy()
    for j in range(1, sq.shape[1]):
        w += sq[:, j]
    np.sqrt(w, out=w)
    rank = np.argsort(w, kind="stable")
    return np.ascontiguousarray(u[rank]), np.ascontiguousarray(v[rank])


def _neighbors_to_order(nbr: np.ndarray) -> np.ndarray:
    """Walk the degree-2 neighbor table from city 0 toward its lower neighbor."""
    n = nbr.shape[0]
    if (nbr < 0).any():
        raise TspkitError("greedy construction did not produce a closed cycle")
    order = np.empty(n, dtype=np.int64)
    order[0] = 0
    prev = 0
    cur = int(min(nbr[0, 0], nbr[0, 1]))
    for idx in range(1, n):
        order[idx] = cur
        nxt = int(nbr[cur, 0]) if nbr[cur, 0] != prev else int(nbr[cur, 1])
        prev, cur = cur, nxt
    return order


def greedy_tour(inst: Instance) -> SolveResult:
    """Build a tour by Kruskal-style cheapest-edge selection. Deterministic."""
    n = inst.n
    if n < 3:
        raise DomainError(f"greedy_tour requires n >= 3, got {n}")
    t0 = time.perf_counter()
    u, v = _sorted_edges(inst.coords)
    nbr = kernels.greedy_scan(u, v, n)
    order = _neighbors_to_order(nbr)
    length = kernels.tour_length(inst.coords, order, inst.cached_distance_matrix())
    wall = time.perf_counter() - t0
    return SolveResult("greedy", Tour(order), float(length), wall, None, 0)


def construction_trace(inst: Instance) -> list[tuple[int, int, bool]]:
    """Instrumented construction: every examined edge with its accept decision.

    Returns (u, v, accepted) triples in scan order so tests can independently
    verify that no vertex exceeds degree 2 and no early cycle forms. Runs on
    the pure backend regardless of the active one.
    """
    n = inst.n
    if n < 3:
        raise DomainError(f"greedy construction requires n >= 3, got {n}")
    u, v = _sorted_edges(inst.coords)
    trace: list[tuple[int, int, bool]] = []
    _pure.greedy_scan_traced(u, v, n, trace)
    return trace
