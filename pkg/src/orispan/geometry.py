"""Point sets, Euclidean distances, and minimum-perimeter triangles.

The triangle through a pair (i, j) with the cheapest third point is the
yardstick every dilation value in this package is measured against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import GeometryError, TooFewPointsError

# Single tolerance used for every dilation comparison in the package.
REL_TOL = 1e-9

# Points closer than this (absolute, Euclidean) are rejected as duplicates:
# the minimum triangle through a coincident pair degenerates.
DUPLICATE_EPS = 1e-12


class PointSet:
    """Immutable ordered list of 1D or 2D points.

    Indices are stable 0-based handles; graphs, triangulations and reports
    all refer to points through them.  Construction rejects duplicate
    points (within ``DUPLICATE_EPS``) and non-finite coordinates.
    """

    __slots__ = ("dim", "coords", "sorted_ascending", "_dist")

    def __init__(self, points, dim: int | None = None):
        arr = np.array(points, dtype=float)
        if arr.ndim == 1:
            arr = arr.reshape(-1, 1)
        if arr.ndim != 2 or arr.shape[0] == 0:
            raise GeometryError("point set must be a non-empty list of points")
        if dim is not None and dim != arr.shape[1]:
            raise GeometryError(f"expected dimension {dim}, got {arr.shape[1]}")
        if arr.shape[1] not in (1, 2):
            raise GeometryError(f"only 1D and 2D point sets are supported, got dim={arr.shape[1]}")
        if not np.all(np.isfinite(arr)):
            raise GeometryError("coordinates must be finite")
        _reject_duplicates(arr)
        arr.flags.writeable = False
        self.coords = arr
        self.dim = int(arr.shape[1])
        if self.dim == 1:
            xs = arr[:, 0]
            self.sorted_ascending = bool(np.all(np.diff(xs) > 0))
        else:
            self.sorted_ascending = False
        self._dist = None

    def __len__(self) -> int:
        return self.coords.shape[0]

    def __repr__(self) -> str:
        return f"PointSet(n={len(self)}, dim={self.dim})"

    @property
    def xs(self) -> np.ndarray:
        """1D coordinates as a flat array (dim-1 sets only)."""
        if self.dim != 1:
            raise GeometryError("xs is only defined for 1D point sets")
        return self.coords[:, 0]

    def point(self, i: int) -> tuple:
        self.check_index(i)
        return tuple(self.coords[i])

    def as_tuples(self) -> list[tuple]:
        return [tuple(row) for row in self.coords]

    def check_index(self, i: int) -> None:
        if not (isinstance(i, (int, np.integer)) and 0 <= i < len(self)):
            raise IndexError(f"point index {i!r} out of range for n={len(self)}")

    def distance_matrix(self) -> np.ndarray:
        """All pairwise Euclidean distances; cached (the set is immutable)."""
        if self._dist is None:
            diff = self.coords[:, None, :] - self.coords[None, :, :]
            d = np.sqrt((diff * diff).sum(axis=2))
            d.flags.writeable = False
            self._dist = d
        return self._dist


def _reject_duplicates(arr: np.ndarray) -> None:
    # Near-duplicates must sit in a run of near-equal x after a lexicographic
    # sort, so only those (normally empty) runs need pairwise checks.
    n = arr.shape[0]
    if n < 2:
        return
    order = np.lexsort(arr.T[::-1])
    s = arr[order]
    close_x = np.flatnonzero(np.diff(s[:, 0]) <= DUPLICATE_EPS)
    if close_x.size == 0:
        return
    # Group consecutive suspects into runs [a, b] of indices with tiny x-gaps.
    breaks = np.flatnonzero(np.diff(close_x) > 1)
    starts = np.concatenate(([0], breaks + 1))
    ends = np.concatenate((breaks, [close_x.size - 1]))
    for a, b in zip(close_x[starts], close_x[ends] + 1):
        run = s[a : b + 1]
        for u in range(run.shape[0]):
            for v in range(u + 1, run.shape[0]):
                if np.linalg.norm(run[u] - run[v]) <= DUPLICATE_EPS:
                    raise GeometryError(
                        f"duplicate points at indices {order[a + u]} and {order[a + v]} "
                        f"(closer than {DUPLICATE_EPS})"
                    )


@dataclass(frozen=True)
class TrianglePick:
    """Cheapest third point for a pair, with the full triangle perimeter."""

    third: int
    perimeter: float


def distance(pts: PointSet, i: int, j: int) -> float:
    """Euclidean distance between two distinct points."""
    pts.check_index(i)
    pts.check_index(j)
    if i == j:
        raise IndexError("distance requires two distinct indices")
    return float(np.linalg.norm(pts.coords[i] - pts.coords[j]))


def optimal_triangle(pts: PointSet, i: int, j: int) -> TrianglePick:
    """Minimum-perimeter triangle through points i and j.

    Scans every third point; ties broken by the smallest index so results
    are reproducible.  Needs at least three points, otherwise no oriented
    cycle exists.
    """
    pts.check_index(i)
    pts.check_index(j)
    if i == j:
        raise IndexError("optimal_triangle requires two distinct indices")
    if len(pts) < 3:
        raise TooFewPointsError("no oriented cycle exists for fewer than 3 points")
    # Same arithmetic as distance_matrix, so the matrix route in
    # min_triangle_perimeters reproduces these values bit for bit.
    di = _dists_from(pts.coords, i)
    dj = _dists_from(pts.coords, j)
    detour = di + dj
    detour[i] = np.inf
    detour[j] = np.inf
    third = int(np.argmin(detour))  # argmin returns the first minimum
    perimeter = float(detour[third] + dj[i])
    return TrianglePick(third=third, perimeter=perimeter)


def _dists_from(coords: np.ndarray, i: int) -> np.ndarray:
    diff = coords - coords[i]
    return np.sqrt((diff * diff).sum(axis=1))


def min_triangle_perimeters(pts: PointSet) -> np.ndarray:
    """Matrix of optimal_triangle perimeters for all pairs (inf on the diagonal).

    Entry [i, j] equals optimal_triangle(pts, i, j).perimeter bit for bit:
    both routes add d(i, k) + d(k, j) in double precision and minimise over
    the same candidates.
    """
    if len(pts) < 3:
        raise TooFewPointsError("no oriented cycle exists for fewer than 3 points")
    d = pts.distance_matrix()
    masked = d.copy()
    np.fill_diagonal(masked, np.inf)
    n = len(pts)
    detour = np.full((n, n), np.inf)
    for k in range(n):
        np.minimum(detour, np.add.outer(masked[:, k], masked[k, :]), out=detour)
    peri = d + detour
    np.fill_diagonal(peri, np.inf)
    return peri
