# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: semantics mirror tspkit.kernels.pure exactly.

Floating-point expression shapes (summation order, delta parenthesization)
are kept identical to the pure backend so results are bit-identical.
"""

import numpy as np

cimport cython
cimport numpy as cnp
from libc.math cimport INFINITY, sqrt

cnp.import_array()

NAME = "compiled"

ctypedef cnp.int64_t i64


cdef inline double _cdist(const double[:, ::1] C, Py_ssize_t a, Py_ssize_t b) noexcept nogil:
    cdef double s = 0.0
    cdef double d
    cdef Py_ssize_t j
    for j in range(C.shape[1]):
        d = C[a, j] - C[b, j]
        s += d * d
    return sqrt(s)


def tour_length(const double[:, ::1] coords, const i64[::1] order, D=None):
    """Closed-tour length: legs in visiting order, closing edge added last."""
    cdef Py_ssize_t n = order.shape[0]
    cdef Py_ssize_t i
    cdef double s = 0.0
    cdef const double[:, :] Dm
    if D is not None:
        Dm = D
        for i in range(n - 1):
            s += Dm[order[i], order[i + 1]]
        s += Dm[order[n - 1], order[0]]
    else:
        for i in range(n - 1):
            s += _cdist(coords, order[i], order[i + 1])
        s += _cdist(coords, order[n - 1], order[0])
    return s


def batch_tour_lengths(const double[:, ::1] coords, const i64[:, ::1] orders, D=None):
    """Lengths of many tours at once; orders has shape (m, n)."""
    cdef Py_ssize_t m = orders.shape[0]
    cdef Py_ssize_t n = orders.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(m, dtype=np.float64)
    cdef double[::1] ov = out
    cdef const double[:, :] Dm
    cdef Py_ssize_t r, i
    cdef double s
    if D is not None:
        Dm = D
        for r in range(m):
            s = 0.0
            for i in range(n - 1):
                s += Dm[orders[r, i], orders[r, i + 1]]
            s += Dm[orders[r, n - 1], orders[r, 0]]
            ov[r] = s
    else:
        for r in range(m):
            s = 0.0
            for i in range(n - 1):
                s += _cdist(coords, orders[r, i], orders[r, i + 1])
            s += _cdist(coords, orders[r, n - 1], orders[r, 0])
            ov[r] = s
    return out


def two_opt(const double[:, ::1] coords, order, D=None,
            bint first_improvement=True, double threshold=1e-10, long max_passes=-1):
    """Segment-reversal local search; see the pure backend for the contract."""
    cdef cnp.ndarray[cnp.int64_t, ndim=1] t = np.array(order, dtype=np.int64)
    cdef i64[::1] tv = t
    cdef Py_ssize_t n = tv.shape[0]
    cdef const double[:, :] Dm
    cdef bint use_matrix = D is not None
    if use_matrix:
        Dm = D
    cdef long passes = 0
    cdef bint found
    cdef Py_ssize_t i, k, lo, hi, bi, bk
    cdef i64 a, b, c, dn, tmp
    cdef double dab, delta, best_delta

    while True:
        passes += 1
        found = False
        if first_improvement:
            for i in range(1, n - 1):
                a = tv[i - 1]
                b = tv[i]
                dab = Dm[a, b] if use_matrix else _cdist(coords, a, b)
                for k in range(i + 1, n):
                    c = tv[k]
                    dn = tv[0] if k == n - 1 else tv[k + 1]
                    if use_matrix:
                        delta = (Dm[a, c] + Dm[b, dn]) - (dab + Dm[c, dn])
                    else:
                        delta = (_cdist(coords, a, c) + _cdist(coords, b, dn)) - (dab + _cdist(coords, c, dn))
                    if delta < -threshold:
                        lo = i
                        hi = k
                        while lo < hi:
                            tmp = tv[lo]
                            tv[lo] = tv[hi]
                            tv[hi] = tmp
                            lo += 1
                            hi -= 1
                        found = True
                        break
                if found:
                    break
        else:
            best_delta = -threshold
            bi = -1
            bk = -1
            for i in range(1, n - 1):
                a = tv[i - 1]
                b = tv[i]
                dab = Dm[a, b] if use_matrix else _cdist(coords, a, b)
                for k in range(i + 1, n):
                    c = tv[k]
                    dn = tv[0] if k == n - 1 else tv[k + 1]
                    if use_matrix:
                        delta = (Dm[a, c] + Dm[b, dn]) - (dab + Dm[c, dn])
                    else:
                        delta = (_cdist(coords, a, c) + _cdist(coords, b, dn)) - (dab + _cdist(coords, c, dn))
                    if delta < best_delta:
                        best_delta = delta
                        bi = i
                        bk = k
            if bi >= 0:
                lo = bi
                hi = bk
                while lo < hi:
                    tmp = tv[lo]
                    tv[lo] = tv[hi]
                    tv[hi] = tmp
                    lo += 1
                    hi -= 1
                found = True
        if not found:
            break
        if max_passes >= 0 and passes == max_passes:
            break
    return t, passes


def greedy_scan(const i64[::1] u, const i64[::1] v, Py_ssize_t n):
    """Accept edges in the given (pre-sorted) order under cycle/degree rules."""
    cdef cnp.ndarray[cnp.int64_t, ndim=1] parent_a = np.arange(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] rank_a = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] deg_a = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=2] nbr_a = np.full((n, 2), -1, dtype=np.int64)
    cdef i64[::1] parent = parent_a
    cdef i64[::1] rank = rank_a
    cdef i64[::1] deg = deg_a
    cdef i64[:, ::1] nbr = nbr_a
    cdef Py_ssize_t m = u.shape[0]
    cdef Py_ssize_t e, accepted = 0
    cdef i64 a, b, ra, rb, root, x, nxt

    for e in range(m):
        if accepted == n:
            break
        a = u[e]
        b = v[e]
        if deg[a] == 2 or deg[b] == 2:
            continue
        # find with path compression
        root = a
        while parent[root] != root:
            root = parent[root]
        x = a
        while parent[x] != root:
            nxt = parent[x]
            parent[x] = root
            x = nxt
        ra = root
        root = b
        while parent[root] != root:
            root = parent[root]
        x = b
        while parent[x] != root:
            nxt = parent[x]
            parent[x] = root
            x = nxt
        rb = root
        if ra == rb and accepted != n - 1:
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
    return nbr_a


cdef double _exact_dfs(const double[:, :] D, i64[::1] perm, cnp.uint8_t[::1] used,
                       i64[::1] best, Py_ssize_t depth, double partial,
                       double best_len) noexcept nogil:
    cdef Py_ssize_t n = D.shape[0]
    cdef Py_ssize_t c
    cdef double total, extended
    if depth == n:
        total = partial + D[perm[n - 1], 0]
        if total < best_len:
            best_len = total
            for c in range(n):
                best[c] = perm[c]
        return best_len
    for c in range(1, n):
        if used[c]:
            continue
        if depth == n - 1 and c < perm[1]:
            continue
        extended = partial + D[perm[depth - 1], c]
        if extended >= best_len:
            continue
        perm[depth] = c
        used[c] = 1
        best_len = _exact_dfs(D, perm, used, best, depth + 1, extended, best_len)
        used[c] = 0
    return best_len


def exact_search(const double[:, ::1] coords, const double[:, :] D):
    """Exhaustive minimum over all (n-1)!/2 closed tours.

    Lexicographic enumeration with city 0 fixed and order[1] < order[n-1];
    partial-sum pruning cannot change the result or the tie-breaking because
    legs are nonnegative and any pruned tour is at least as long as (and
    enumerated after) the incumbent.
    """
    cdef Py_ssize_t n = D.shape[0]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] perm_a = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] best_a = np.zeros(n, dtype=np.int64)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] used_a = np.zeros(n, dtype=np.uint8)
    cdef i64[::1] perm = perm_a
    cdef i64[::1] best = best_a
    cdef cnp.uint8_t[::1] used = used_a
    used[0] = 1
    cdef double best_len = _exact_dfs(D, perm, used, best, 1, 0.0, INFINITY)
    return best_a, best_len
