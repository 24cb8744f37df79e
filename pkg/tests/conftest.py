import numpy as np
import pytest

from orispan import PointSet


def sorted_points(rng, n, span=100.0) -> PointSet:
    return PointSet(np.sort(rng.uniform(0.0, span, n)))


def planar_points(rng, n, span=100.0) -> PointSet:
    return PointSet(rng.uniform(0.0, span, (n, 2)))


def circle_points(rng, n, radius=1.0, min_gap=1e-4) -> PointSet:
    """Random points on a circle (convex position, no near-duplicates)."""
    while True:
        ang = np.sort(rng.uniform(0.0, 2.0 * np.pi, n))
        gaps = np.diff(np.concatenate([ang, [ang[0] + 2 * np.pi]]))
        if gaps.min() > min_gap:
            break
    return PointSet(np.column_stack([radius * np.cos(ang), radius * np.sin(ang)]))


def worstcase_points(eps: float, n: int = 7) -> PointSet:
    """Gap family (3-5e, 1, e, 1-3e, 1-e, ...) where the greedy one-page
    construction lands close to its factor-5 bound."""
    gaps = [3 - 5 * eps, 1.0, eps, 1 - 3 * eps] + [1 - eps] * (n - 5)
    return PointSet(np.concatenate([[0.0], np.cumsum(gaps)]))


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
