"""Quality indicators and loss functions for subset selection.

Hypervolume (exact dimension-sweep plus two independent oracles), the
single-point substitution loss, its set and expected forms, and the
IGD / IGD+ distance indicators. The expected substitution loss of a
subset equals IGD+ of the subset with the full set as reference; both
public functions share one kernel so the equality is bit-exact.

Everything assumes minimization. Maximization problems are handled by
negating objectives at ingestion (see :mod:`paretopick.io`).
"""

from __future__ import annotations

import math
from bisect import bisect_right

import numpy as np

from .geometry import as_point_set

__all__ = [
    "hv_point",
    "hv",
    "hv_contribution",
    "hv_inclusion_exclusion",
    "hv_monte_carlo",
    "loss_point",
    "loss_subset",
    "expected_loss",
    "weighted_expected_loss",
    "igd",
    "igd_plus",
    "truncated_distance_matrix",
    "euclidean_distance_matrix",
]


# ---------------------------------------------------------------------------
# Hypervolume, exact
# ---------------------------------------------------------------------------

def hv_point(point, ref) -> float:
    """Volume of the box dominated by one point and bounded by ref.

    Zero if the point fails to dominate the reference point in any
    coordinate.
    """
    p = np.asarray(point, dtype=float)
    r = np.asarray(ref, dtype=float)
    if p.shape != r.shape:
        raise ValueError(f"dimension mismatch: {p.shape} vs {r.shape}")
    vol = 1.0
    for pi, ri in zip(p.tolist(), r.tolist()):
        side = ri - pi
        if side <= 0.0:
            return 0.0
        vol *= side
    return vol


def _hv_2d(pts: list[tuple[float, ...]], r0: float, r1: float) -> float:
    """Area of the union of boxes [x, r0] x [y, r1]; all coords < ref."""
    pts = sorted(pts)
    total = 0.0
    best_y = math.inf
    n = len(pts)
    for i in range(n):
        x, y = pts[i][0], pts[i][1]
        if y < best_y:
            best_y = y
        nxt = pts[i + 1][0] if i + 1 < n else r0
        if nxt > x:
            total += (nxt - x) * (r1 - best_y)
    return total


def _hv_3d(pts: list[tuple[float, ...]], ref: tuple[float, ...]) -> float:
    """Sweep the third objective, keeping the 2-D union area incrementally.

    The active projections form a staircase (x ascending, y strictly
    descending); inserting a point adds the strips where it lowers the
    staircase, so each slab reuses the running area.
    """
    r0, r1, r2 = ref
    order = sorted(pts, key=lambda p: p[2])
    n = len(order)
    xs: list[float] = []
    ys: list[float] = []
    area = 0.0
    total = 0.0
    for i in range(n):
        x, y, z = order[i]
        j = bisect_right(xs, x) - 1
        cover = ys[j] if j >= 0 else r1
        if y < cover:
            lo = j if (j >= 0 and xs[j] == x) else j + 1
            hi = j + 1
            delta = 0.0
            seg_start = x
            cur = cover
            while hi < len(xs) and ys[hi] >= y:
                delta += (xs[hi] - seg_start) * (cur - y)
                seg_start = xs[hi]
                cur = ys[hi]
                hi += 1
            seg_end = xs[hi] if hi < len(xs) else r0
            delta += (seg_end - seg_start) * (cur - y)
            del xs[lo:hi]
            del ys[lo:hi]
            xs.insert(lo, x)
            ys.insert(lo, y)
            area += delta
        z_next = order[i + 1][2] if i + 1 < n else r2
        if z_next > z:
            total += (z_next - z) * area
    return total


def _prune_weakly_dominated(pts: list[tuple[float, ...]]) -> list[tuple[float, ...]]:
    """Drop points weakly dominated by another (keeps one duplicate copy)."""
    kept: list[tuple[float, ...]] = []
    for p in pts:
        if any(all(qc <= pc for qc, pc in zip(q, p)) for q in kept):
            continue
        kept = [q for q in kept if not all(pc <= qc for pc, qc in zip(p, q))]
        kept.append(p)
    return kept


def _hv_core(pts: list[tuple[float, ...]], ref: tuple[float, ...]) -> float:
    """Dimension-sweep recursion; every coordinate of pts must be < ref."""
    if not pts:
        return 0.0
    m = len(ref)
    if m == 2:
        return _hv_2d(pts, ref[0], ref[1])
    if m == 3:
        return _hv_3d(pts, ref)
    # Slice on the last objective: slabs between consecutive z values are
    # dominated exactly by the projections of the points below them.
    order = sorted(pts, key=lambda p: p[-1])
    r_last = ref[-1]
    ref_lo = ref[:-1]
    total = 0.0
    active: list[tuple[float, ...]] = []
    n = len(order)
    for i in range(n):
        p = order[i]
        proj = p[:-1]
        if not any(all(qc <= pc for qc, pc in zip(q, proj)) for q in active):
            active = [q for q in active if not all(pc <= qc for pc, qc in zip(proj, q))]
            active.append(proj)
        z = p[-1]
        z_next = order[i + 1][-1] if i + 1 < n else r_last
        if z_next > z:
            total += (z_next - z) * _hv_core(list(active), ref_lo)
    return total


def _filter_inside(pts: np.ndarray, ref: np.ndarray) -> list[tuple[float, ...]]:
    inside = (pts < ref).all(axis=1)
    return [tuple(row) for row in pts[inside].tolist()]


def hv(points, ref) -> float:
    """Exact hypervolume of a point set bounded by a reference point.

    2-D sets are swept as disjoint strips after sorting on the first
    objective; higher dimensions recurse by slicing on the last
    objective. Points that fail to dominate the reference point
    contribute nothing and are silently skipped, so the value is
    defined for any input set; the empty set has hypervolume zero.
    """
    r = np.asarray(ref, dtype=float)
    if np.size(points) == 0:
        return 0.0
    pts = as_point_set(points)
    if pts.shape[1] != r.shape[0]:
        raise ValueError(f"dimension mismatch: {pts.shape[1]} vs {r.shape[0]}")
    return _hv_core(_filter_inside(pts, r), tuple(r.tolist()))


def hv_contribution(i: int, points, ref) -> float:
    """Hypervolume lost when point i is removed from the set."""
    pts = as_point_set(points)
    if not 0 <= i < len(pts):
        raise IndexError(f"point index {i} out of range for {len(pts)} points")
    rest = np.delete(pts, i, axis=0)
    return hv(pts, ref) - hv(rest, ref)


# ---------------------------------------------------------------------------
# Hypervolume oracles (independent computation routes, used in tests)
# ---------------------------------------------------------------------------

def hv_inclusion_exclusion(points, ref, max_points: int = 12) -> float:
    """Exact hypervolume via inclusion-exclusion over all 2^n - 1 subsets.

    Independent of the dimension-sweep route; exponential in n, so
    capped at max_points.
    """
    pts = as_point_set(points)
    r = np.asarray(ref, dtype=float)
    boxes = np.asarray(_filter_inside(pts, r), dtype=float)
    n = len(boxes)
    if n == 0:
        return 0.0
    if n > max_points:
        raise ValueError(f"inclusion-exclusion limited to {max_points} points, got {n}")
    total = 0.0
    for mask in range(1, 1 << n):
        sel = [i for i in range(n) if mask >> i & 1]
        upper = boxes[sel].max(axis=0)
        vol = float(np.prod(np.maximum(r - upper, 0.0)))
        total += vol if len(sel) % 2 == 1 else -vol
    return total


def hv_monte_carlo(points, ref, lower, samples: int, seed: int,
                   chunk: int = 1 << 16) -> tuple[float, float]:
    """Monte-Carlo hypervolume estimate with its binomial standard error.

    Uniform samples in the box [lower, ref]; the estimate is the box
    volume times the fraction of samples dominated by some set member.
    Deterministic for a fixed seed and sample count.
    """
    r = np.asarray(ref, dtype=float)
    lo = np.asarray(lower, dtype=float)
    if samples < 1:
        raise ValueError("need at least one sample")
    if np.any(lo >= r):
        raise ValueError("empty sampling box: lower must be below ref in every axis")
    if np.size(points) == 0:
        return 0.0, 0.0
    pts = as_point_set(points)
    if np.any(pts < lo):
        raise ValueError("lower must bound the point set from below")
    box_vol = float(np.prod(r - lo))
    rng = np.random.Generator(np.random.PCG64(seed))
    hits = 0
    remaining = samples
    while remaining > 0:
        c = min(chunk, remaining)
        u = lo + rng.random((c, pts.shape[1])) * (r - lo)
        dominated = (u[:, None, :] >= pts[None, :, :]).all(axis=2).any(axis=1)
        hits += int(dominated.sum())
        remaining -= c
    p = hits / samples
    estimate = box_vol * p
    stderr = box_vol * math.sqrt(p * (1.0 - p) / samples)
    return estimate, stderr


# ---------------------------------------------------------------------------
# Substitution loss and the IGD family
# ---------------------------------------------------------------------------

def loss_point(a, s) -> float:
    """Deterioration incurred by choosing point a in place of point s.

    Only objectives where a is worse count; improvements are free:
    sqrt(sum_i max(0, a_i - s_i)^2).
    """
    a = np.asarray(a, dtype=float)
    s = np.asarray(s, dtype=float)
    if a.shape != s.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {s.shape}")
    d = np.maximum(a - s, 0.0)
    return float(np.sqrt(np.dot(d, d)))


def _min_truncated_distances(candidates: np.ndarray, references: np.ndarray) -> np.ndarray:
    """For each reference point, distance to its best substitute."""
    diff = candidates[:, None, :] - references[None, :, :]
    np.maximum(diff, 0.0, out=diff)
    d = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
    return d.min(axis=0)

def _check_pair(a, ref) -> tuple[np.ndarray, np.ndarray]:
    if np.size(a) == 0 or np.size(ref) == 0:
        raise ValueError("both point sets must be non-empty")
    a = as_point_set(a)
    ref = as_point_set(ref)
    if a.shape[1] != ref.shape[1]:
        raise ValueError(f"dimension mismatch: {a.shape[1]} vs {ref.shape[1]}")
    return a, ref


def _expected_loss_kernel(subset: np.ndarray, full: np.ndarray) -> float:
    return float(_min_truncated_distances(subset, full).mean())


def loss_subset(subset, s) -> float:
    """Loss of a subset for a decision maker whose preferred point is s.

    The decision maker is assumed to fall back on the subset member with
    the smallest substitution loss.
    """
    if np.size(subset) == 0:
        raise ValueError("subset must be non-empty")
    a = as_point_set(subset)
    s = np.asarray(s, dtype=float)
    if a.shape[1] != s.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape[1]} vs {s.shape[0]}")
    return float(_min_truncated_distances(a, s[None, :])[0])


def expected_loss(subset, full) -> float:
    """Mean substitution loss when any member of the full set may be the
    decision maker's preference, all equally likely."""
    a, s = _check_pair(subset, full)
    return _expected_loss_kernel(a, s)


def weighted_expected_loss(subset, full, weights) -> float:
    """Expected loss with per-point preference weights on the full set.

    Weights must be non-negative with positive sum; the result is the
    weighted average of per-point losses and is invariant to scaling
    all weights.
    """
    a, s = _check_pair(subset, full)
    w = np.asarray(weights, dtype=float)
    if w.shape != (len(s),):
        raise ValueError(f"need {len(s)} weights, got shape {w.shape}")
    if np.any(w < 0):
        raise ValueError("weights must be non-negative")
    total = w.sum()
    if total <= 0:
        raise ValueError("weights must not all be zero")
    losses = _min_truncated_distances(a, s)
    return float(np.dot(w, losses) / total)


def igd(subset, reference) -> float:
    """Inverted generational distance: mean Euclidean distance from each
    reference point to its nearest subset member."""
    a, ref = _check_pair(subset, reference)
    diff = a[:, None, :] - ref[None, :, :]
    d = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
    return float(d.min(axis=0).mean())


def igd_plus(subset, reference) -> float:
    """IGD with per-coordinate distances truncated at zero where the
    subset member is better; weakly Pareto-compliant.

    Identical to :func:`expected_loss` with the reference set as the
    full set (same kernel, bit-for-bit equal).
    """
    a, ref = _check_pair(subset, reference)
    return _expected_loss_kernel(a, ref)


# ---------------------------------------------------------------------------
# Pairwise matrices (shared by the selection strategies)
# ---------------------------------------------------------------------------

def truncated_distance_matrix(points) -> np.ndarray:
    """D[i, j] = substitution loss of point i standing in for point j.

    Row-indexing a subset and reducing min over rows then mean gives
    the subset's expected loss / IGD+ against the full set.
    """
    pts = as_point_set(points)
    diff = pts[:, None, :] - pts[None, :, :]
    np.maximum(diff, 0.0, out=diff)
    return np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))


def euclidean_distance_matrix(points) -> np.ndarray:
    """Symmetric pairwise Euclidean distances, same layout as
    :func:`truncated_distance_matrix`."""
    pts = as_point_set(points)
    diff = pts[:, None, :] - pts[None, :, :]
    return np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
