"""Pure numpy kernels: the fallback backend.

These functions define the reference semantics for the compiled backend in
`_ckernels.pyx`. Floating-point expression shapes are kept identical in both
(sequential left-to-right summation, same parenthesization of 2-opt deltas)
so the two backends produce bit-identical results; tests assert this.

All kernels take raw arrays: `coords` is an (n, d) C-contiguous float64
array, `order`/`orders` are int64 index arrays, and `D` is an optional dense
distance matrix (None means distances are computed on demand from coords).
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

NAME = "pure"


def _seq_sq_sum(sq: np.ndarray) -> np.ndarray:
    """Sum squared differences over the last axis, sequentially per dimension."""
    acc = sq[..., 0].copy()
    for j in range(1, sq.shape[-1]):
        acc += sq[..., j]
    return acc


def _dists(coords: np.ndarray, a: np.ndarray | int, b: np.ndarray | int) -> np.ndarray:
    diff = coords[a] - coords[b]
    return np.sqrt(_seq_sq_sum(diff * diff))


def tour_length(coords: np.ndarray, order: np.ndarray, D: np.ndarray | None = None) -> float:
    """Closed-tour length: legs in visiting order, closing edge added last."""
    if D is not None:
        legs = D[order[:-1], order[1:]]
        closing = D[order[-1], order[0]]
    else:
        legs = _dists(coords, order[:-1], order[1:])
        closing = float(_dists(coords, order[-1:], order[:1])[0])
    return float(np.cumsum(legs)[-1] + closing)


def batch_tour_lengths(
    coords: np.ndarray, orders: np.ndarray, D: np.ndarray | None = None
) -> np.ndarray:
    """Lengths of many tours at once; orders has shape (m, n)."""
    if D is not None:
        legs = D[orders[:, :-1], orders[:, 1:]]
        closing = D[orders[:, -1], orders[:, 0]]
    else:
        legs = _dists(coords, orders[:, :-1], orders[:, 1:])
        closing = _dists(coords, orders[:, -1], orders[:, 0])
    return np.cumsum(legs, axis=1)[:, -1] + closing


def two_opt(
    coords: np.ndarray,
    order: np.ndarray,
    D: np.ndarray | None = None,
    first_improvement: bool = True,
    threshold: float = 1e-10,
    max_passes: int = -1,
) -> tuple[np.ndarray, int]:
    """Segment-reversal local search until no move shortens the tour.

    A move reverses order[i..k] (1 <= i < k <= n-1) and is accepted only when
    it shortens the tour by more than `threshold`. Under first-improvement
    the scan runs (i ascending, k ascending) and a new pass starts after each
    accepted move; under best-improvement each pass applies the single best
    move. Returns the improved order and the number of passes performed.
    `max_passes` < 0 means unbounded.
    """
    t = np.array(order, dtype=np.int64)
    n = t.shape[0]
    passes = 0
    while True:
        passes += 1
        move = (
            _scan_first(t, n, coords, D, threshold)
            if first_improvement
            else _scan_best(t, n, coords, D, threshold)
        )
        if move is None:
            break
        i, k = move
        t[i : k + 1] = t[i : k + 1][::-1]
        if 0 <= max_passes == passes:
            break
    return t, passes


def _row_deltas(t, n, i, coords, D):
    """Deltas for all moves (i, k), k in i+1..n-1, against the current order."""
    a = t[i - 1]
    b = t[i]
    c = t[i + 1 :]
    dnext = np.empty_like(c)
    dnext[:-1] = t[i + 2 :]
    dnext[-1] = t[0]
    if D is not None:
        return (D[a, c] + D[b, dnext]) - (D[a, b] + D[c, dnext])
    d_ac = _dists(coords, a, c)
    d_bd = _dists(coords, b, dnext)
    d_ab = float(_dists(coords, t[i - 1 : i], t[i : i + 1])[0])
    d_cd = _dists(coords, c, dnext)
    return (d_ac + d_bd) - (d_ab + d_cd)


def _scan_first(t, n, coords, D, threshold):
    for i in range(1, n - 1):
        delta = _row_deltas(t, n, i, coords, D)
        hits = np.flatnonzero(delta < -threshold)
        if hits.size:
            return i, i + 1 + int(hits[0])
    return None


def _scan_best(t, n, coords, D, threshold):
    best_delta = -threshold
    best = None
    for i in range(1, n - 1):
        delta = _row_deltas(t, n, i, coords, D)
        j = int(np.argmin(delta))
        dj = float(delta[j])
        if dj < best_delta:
            best_delta = dj
            best = (i, i + 1 + j)
    return best


def greedy_scan(u: np.ndarray, v: np.ndarray, n: int) -> np.ndarray:
    """Accept edges in the given (pre-sorted) order under cycle/degree rules.

    An edge is accepted iff neither endpoint has degree 2 and it does not
    close a cycle unless it is the n-th accepted edge. Returns an (n, 2)
    neighbor table (two tour neighbors per vertex).
    """
    nbr, _ = _greedy_scan_impl(u, v, n, trace=None)
    return nbr


def greedy_scan_traced(u, v, n, trace: list) -> np.ndarray:
    """As greedy_scan, appending (u, v, accepted) per examined edge to `trace`.

    Test instrumentation hook; the compiled backend has no traced variant.
    """
    nbr, _ = _greedy_scan_impl(u, v, n, trace=trace)
    return nbr


def _greedy_scan_impl(u, v, n, trace):
    parent = list(range(n))
    rank = [0] * n
    deg = [0] * n
    nbr = np.full((n, 2), -1, dtype=np.int64)

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    accepted = 0
    ul = u.tolist()
    vl = v.tolist()
    for a, b in zip(ul, vl):
        if accepted == n:
            break
        if deg[a] == 2 or deg[b] == 2:
            if trace is not None:
                trace.append((a, b, False))
            continue
        ra, rb = find(a), find(b)
        if ra == rb and accepted != n - 1:
            if trace is not None:
                trace.append((a, b, False))
            continue
        if ra != rb:
            if rank[ra] < rank[rb]:
                ra, rb = rb, ra
            parent[rb] = ra
            if rank[ra] == rank[rb]:
                rank[ra] += 1
        nbr[a, deg[a]] = b
        nbr[b, deg[b]] = a
        deg[a] += 1
        deg[b] += 1
        accepted += 1
        if trace is not None:
            trace.append((a, b, True))
    return nbr, accepted


def exact_search(coords: np.ndarray, D: np.ndarray) -> tuple[np.ndarray, float]:
    """Exhaustive minimum over all (n-1)!/2 closed tours.

    City 0 is fixed first and only orderings with order[1] < order[n-1] are
    evaluated (each undirected tour once). Ties keep the lexicographically
    smallest order, which is the first one found in enumeration order.
    """
    n = D.shape[0]
    rows = [r.tolist() for r in D]
    row0 = rows[0]
    best_len = np.inf
    best = None
    for rest in permutations(range(1, n)):
        if rest[0] > rest[-1]:
            continue
        total = row0[rest[0]]
        prev = rest[0]
        for city in rest[1:]:
            total += rows[prev][city]
            prev = city
        total += rows[prev][0]
        if total < best_len:
            best_len = total
            best = rest
    return np.array((0,) + best, dtype=np.int64), float(best_len)
