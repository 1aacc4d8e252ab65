"""Point-set primitives for multi-objective solution sets.

All functions assume minimization: lower objective values are better.
Point sets are float arrays of shape (n, m) with n points and m >= 2
objectives; point order is significant because subset masks and index
lists refer to row positions.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "as_point_set",
    "dominates",
    "ideal_point",
    "nadir_point",
    "normalize",
    "denormalize",
    "extreme_solutions",
    "filter_non_dominated",
    "non_dominated_mask",
    "is_non_dominated_set",
]


def as_point_set(points, min_dim: int = 2) -> np.ndarray:
    """Coerce input to a validated (n, m) float64 point array.

    Raises ValueError on wrong rank, m < min_dim, or non-finite entries.
    """
    arr = np.asarray(points, dtype=float)
    if arr.ndim != 2:
        raise ValueError(f"point set must be 2-D (n, m), got shape {arr.shape}")
    if arr.shape[1] < min_dim:
        raise ValueError(f"need at least {min_dim} objectives, got {arr.shape[1]}")
    if not np.isfinite(arr).all():
        raise ValueError("point set contains NaN or infinite values")
    return arr


def _check_same_dim(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape[-1] != b.shape[-1]:
        raise ValueError(
            f"dimension mismatch: {a.shape[-1]} vs {b.shape[-1]} objectives"
        )


def dominates(a, b) -> bool:
    """True iff point a Pareto-dominates point b (minimization).

    a dominates b when a_i <= b_i for every objective and a_j < b_j for
    at least one. Identical points do not dominate each other.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    _check_same_dim(a, b)
    return bool(np.all(a <= b) and np.any(a < b))


def ideal_point(points) -> np.ndarray:
    """Component-wise minimum of a non-empty point set."""
    pts = as_point_set(points)
    if len(pts) == 0:
        raise ValueError("ideal point of an empty set is undefined")
    return pts.min(axis=0)


def nadir_point(points) -> np.ndarray:
    """Component-wise maximum of a non-empty point set."""
    pts = as_point_set(points)
    if len(pts) == 0:
        raise ValueError("nadir point of an empty set is undefined")
    return pts.max(axis=0)


def normalize(points, ideal, nadir) -> np.ndarray:
    """Map each objective linearly so [ideal_i, nadir_i] becomes [0, 1].

    Intended for visualization only; selection runs in the original
    objective space. Raises ValueError on a degenerate axis
    (nadir_i <= ideal_i).
    """
    pts = as_point_set(points)
    ideal = np.asarray(ideal, dtype=float)
    nadir = np.asarray(nadir, dtype=float)
    _check_same_dim(pts, ideal)
    _check_same_dim(pts, nadir)
    span = nadir - ideal
    if np.any(span <= 0):
        bad = int(np.argmax(span <= 0))
        raise ValueError(f"degenerate axis {bad}: nadir must exceed ideal")
    return (pts - ideal) / span


def denormalize(points, ideal, nadir) -> np.ndarray:
    """Inverse of :func:`normalize`."""
    pts = as_point_set(points)
    ideal = np.asarray(ideal, dtype=float)
    nadir = np.asarray(nadir, dtype=float)
    span = nadir - ideal
    if np.any(span <= 0):
        bad = int(np.argmax(span <= 0))
        raise ValueError(f"degenerate axis {bad}: nadir must exceed ideal")
    return pts * span + ideal


def extreme_solutions(points) -> list[int]:
    """Index of the best (minimal) point for each objective.

    Ties are broken by lowest index. The extreme solutions show the
    decision maker the attainable range of each objective.
    """
    pts = as_point_set(points)
    if len(pts) == 0:
        raise ValueError("extreme solutions of an empty set are undefined")
    return [int(i) for i in pts.argmin(axis=0)]


def non_dominated_mask(points) -> np.ndarray:
    """Boolean mask of points kept by :func:`filter_non_dominated`.

    A point is dropped when some other point dominates it, or when an
    identical point occurs at a lower index (duplicates keep one copy).
    O(n^2 m).
    """
    pts = as_point_set(points)
    n = len(pts)
    keep = np.ones(n, dtype=bool)
    for i in range(n):
        p = pts[i]
        le = (pts <= p).all(axis=1)
        lt = (pts < p).any(axis=1)
        if np.any(le & lt):
            keep[i] = False
            continue
        eq = (pts[:i] == p).all(axis=1)
        if eq.any():
            keep[i] = False
    return keep


def filter_non_dominated(points) -> np.ndarray:
    """Return the non-dominated subset, collapsing exact duplicates.

    Keeps the lowest-index copy of duplicated points; output order
    follows input order.
    """
    pts = as_point_set(points)
    return pts[non_dominated_mask(pts)]


def is_non_dominated_set(points) -> bool:
    """True iff no point in the set dominates another (duplicates allowed)."""
    pts = as_point_set(points)
    n = len(pts)
    for i in range(n):
        p = pts[i]
        le = (pts <= p).all(axis=1)
        lt = (pts < p).any(axis=1)
        if np.any(le & lt):
            return False
    return True
