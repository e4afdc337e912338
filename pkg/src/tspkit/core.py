"""Geometry, tour representation, tour evaluation and combinatorial counting.

Everything here is a pure function over immutable inputs; all of it is safe
to call concurrently. Coordinates and lengths are float64 throughout.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence

import numpy as np

from tspkit.errors import DimensionMismatchError, DomainError, TourValidationError

# Instances up to this size get a cached dense distance matrix; larger ones
# compute distances on demand from coordinates (2048^2 float64 ~= 32 MB).
MATRIX_CAP = 2048


class Point:
    """A city: a point in d-dimensional Euclidean space (d >= 1).

    Coordinates must be finite. Points are immutable and hashable.
    """

    __slots__ = ("_coords",)

    def __init__(self, *coords: float):
        if len(coords) == 0:
            raise DomainError("a point needs at least one coordinate")
        vals = tuple(float(c) for c in coords)
        if not all(math.isfinite(c) for c in vals):
            raise DomainError(f"coordinates must be finite, got {vals}")
        object.__setattr__(self, "_coords", vals)

    def __setattr__(self, name, value):
        raise AttributeError("Point is immutable")

    @property
    def coords(self) -> tuple[float, ...]:
        return self._coords

    @property
    def dimension(self) -> int:
        return len(self._coords)

    def __len__(self) -> int:
        return len(self._coords)

    def __iter__(self):
        return iter(self._coords)

    def __getitem__(self, i: int) -> float:
        return self._coords[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Point) and self._coords == other._coords

    def __hash__(self) -> int:
        return hash(self._coords)

    def __repr__(self) -> str:
        return f"Point{self._coords}"


def distance(a: Point | Sequence[float], b: Point | Sequence[float]) -> float:
    """Euclidean distance between two points: (sum_i (a_i - b_i)^2)^(1/2)."""
    ca = a.coords if isinstance(a, Point) else tuple(a)
    cb = b.coords if isinstance(b, Point) else tuple(b)
    if len(ca) != len(cb):
        raise DimensionMismatchError(len(ca), len(cb))
    s = 0.0
    for x, y in zip(ca, cb):
        d = x - y
        s += d * d
    return math.sqrt(s)


class Instance:
    """A named, immutable collection of same-dimension points.

    The coordinate array is read-only after construction. The dense distance
    matrix is built lazily for instances with at most `MATRIX_CAP` points;
    the benign compute-twice race under concurrent first access is harmless
    because the computed value is identical.
    """

    __slots__ = ("_name", "_coords", "_matrix")

    def __init__(self, name: str, points: Iterable[Point | Sequence[float]] | np.ndarray):
        if not name:
            raise DomainError("instance name must be non-empty")
        if isinstance(points, np.ndarray):
            coords = np.array(points, dtype=np.float64)
        else:
            rows = [tuple(p) for p in points]
            if rows and len({len(r) for r in rows}) > 1:
                dims = sorted({len(r) for r in rows})
                raise DimensionMismatchError(dims[0], dims[-1])
            coords = np.array(rows, dtype=np.float64)
        if coords.ndim != 2:
            raise DomainError(f"points must form an (n, d) table, got shape {coords.shape}")
        n, d = coords.shape
        if n < 2:
            raise DomainError(f"an instance needs at least 2 points, got {n}")
        if d < 1:
            raise DomainError("points need at least one coordinate")
        if not np.isfinite(coords).all():
            raise DomainError("coordinates must be finite (no NaN/inf)")
        coords = np.ascontiguousarray(coords)
        coords.flags.writeable = False
        object.__setattr__(self, "_name", name)
        object.__setattr__(self, "_coords", coords)
        object.__setattr__(self, "_matrix", None)

    def __setattr__(self, name, value):
        raise AttributeError("Instance is immutable")

    @property
    def name(self) -> str:
        return self._name

    @property
    def coords(self) -> np.ndarray:
        """Read-only (n, d) float64 coordinate array."""
        return self._coords

    @property
    def n(self) -> int:
        return self._coords.shape[0]

    @property
    def dimension(self) -> int:
        return self._coords.shape[1]

    def point(self, i: int) -> Point:
        return Point(*self._coords[i])

    @property
    def points(self) -> tuple[Point, ...]:
        return tuple(Point(*row) for row in self._coords)

    def distance_matrix(self, cap: int | None = None) -> np.ndarray | None:
        """Dense symmetric distance matrix, or None when n exceeds the cap."""
        limit = MATRIX_CAP if cap is None else cap
        if self.n > limit:
            return None
        m = self._matrix
        if m is None:
            c = self._coords
            diff = c[:, None, :] - c[None, :, :]
            m = np.sqrt((diff * diff).sum(axis=-1))
            m.flags.writeable = False
            object.__setattr__(self, "_matrix", m)
        return m

    def cached_distance_matrix(self) -> np.ndarray | None:
        """The distance matrix if one was already built, without building it."""
        return self._matrix

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"Instance({self._name!r}, n={self.n}, d={self.dimension})"


class Tour:
    """A visiting order: a sequence of city indices.

    The closing edge from the last index back to the first is implicit.
    Construction does not check the permutation property; `validate_tour`
    reports violations against a concrete instance.
    """

    __slots__ = ("_order",)

    def __init__(self, order: Iterable[int] | np.ndarray):
        arr = np.array(list(order) if not isinstance(order, np.ndarray) else order, dtype=np.int64)
        if arr.ndim != 1 or arr.size == 0:
            raise DomainError("tour order must be a non-empty 1-D index sequence")
        arr = np.ascontiguousarray(arr)
        arr.flags.writeable = False
        object.__setattr__(self, "_order", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Tour is immutable")

    @property
    def order(self) -> np.ndarray:
        """Read-only int64 index array."""
        return self._order

    def as_list(self) -> list[int]:
        return self._order.tolist()

    def __len__(self) -> int:
        return self._order.shape[0]

    def __iter__(self):
        return iter(self._order.tolist())

    def __eq__(self, other) -> bool:
        return isinstance(other, Tour) and np.array_equal(self._order, other._order)

    def __hash__(self) -> int:
        return hash(tuple(self._order.tolist()))

    def __repr__(self) -> str:
        head = self._order[:8].tolist()
        tail = "..." if len(self) > 8 else ""
        return f"Tour({head}{tail}, n={len(self)})"


def validate_tour(inst: Instance, tour: Tour) -> str | None:
    """Check the permutation property against an instance.

    Returns None when valid, otherwise a description of the first failure
    (length mismatch, out-of-range index, duplicate index).
    """
    order = tour.order
    n = inst.n
    if order.shape[0] != n:
        return f"length mismatch: tour has {order.shape[0]} indices, instance has {n} cities"
    seen = np.zeros(n, dtype=bool)
    for idx in order.tolist():
        if idx < 0 or idx >= n:
            return f"out-of-range index {idx} (valid range 0..{n - 1})"
        if seen[idx]:
            return f"duplicate index {idx}"
        seen[idx] = True
    return None


def ensure_valid_tour(inst: Instance, tour: Tour) -> None:
    """Raise TourValidationError when `tour` is not a permutation for `inst`."""
    violation = validate_tour(inst, tour)
    if violation is not None:
        raise TourValidationError(violation)


def tour_length(inst: Instance, tour: Tour) -> float:
    """Closed-tour length: consecutive edges plus the edge back to the start.

    Invariant under rotation and reversal of the order. Raises
    TourValidationError for non-permutations.
    """
    ensure_valid_tour(inst, tour)
    from tspkit import kernels

    return kernels.tour_length(inst.coords, tour.order, inst.cached_distance_matrix())


def count_tours(n: int) -> int:
    """Number of distinct closed tours on n cities: (n-1)!/2, exact integer."""
    if n < 3:
        raise DomainError(f"count_tours requires n >= 3, got {n}")
    return math.factorial(n - 1) // 2


def count_edges(n: int) -> int:
    """Number of undirected edges on n cities: n(n-1)/2."""
    if n < 2:
        raise DomainError(f"count_edges requires n >= 2, got {n}")
    return n * (n - 1) // 2
