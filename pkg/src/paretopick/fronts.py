"""Seeded samplers for analytic Pareto fronts used in the experiments.

Each generator draws points directly on a known front instead of
running a multi-objective optimizer, so experiments are reproducible
from a (kind, n, seed) triple. All samplers draw their parameters
i.i.d. uniform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "FRONT_KINDS",
    "WAVE_AMPLITUDE_MAX",
    "FrontSpec",
    "FrontSample",
    "analytic_bounds",
    "dtlz2_2d_point",
    "minus_dtlz2_2d_point",
    "wave_point",
    "wave_knee_intervals",
    "gen_dtlz2_2d",
    "gen_minus_dtlz2_2d",
    "gen_minus_dtlz1_3d",
    "gen_wave",
    "gen_distmin_5",
    "PENTAGON_ANCHORS",
]

FRONT_KINDS = ("dtlz2-2d", "minus-dtlz2-2d", "minus-dtlz1-3d", "wave", "distmin-5")

#: Decision-space anchor points of the five-objective distance problem;
#: objectives are Euclidean distances to these, and the pentagon they
#: span is the Pareto-optimal region.
PENTAGON_ANCHORS = np.array([
    (0.0, 1.0),
    (0.95, 0.31),
    (0.59, -0.81),
    (-0.59, -0.81),
    (-0.95, 0.31),
])


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def dtlz2_2d_point(theta: float) -> tuple[float, float]:
    """Point on the concave quarter-circle front f1^2 + f2^2 = 1."""
    return math.cos(theta), math.sin(theta)


def minus_dtlz2_2d_point(theta: float) -> tuple[float, float]:
    """Point on the convex front (1 - f1)^2 + (1 - f2)^2 = 1."""
    return 1.0 - math.cos(theta), 1.0 - math.sin(theta)


#: Supremum of the wave amplitude parameter; at WAVE_AMPLITUDE_MAX the
#: front's steep faces become vertical and monotonicity is lost.
WAVE_AMPLITUDE_MAX = 0.05

#: Fraction of each wave cycle spent on the concave run-up between
#: knees. The remaining fraction is the convex descent (the knee).
_WAVE_SKEW = 1.0 / 3.0


def _wave_layout(j: int) -> tuple[float, float, float]:
    """(decel, accel, cycle) parameter lengths of the wave staircase."""
    ratio = _WAVE_SKEW / (1.0 - _WAVE_SKEW)
    decel = 1.0 / (j + (j - 1) * ratio)
    accel = ratio * decel
    return decel, accel, decel + accel


def _wave_oscillation(j: int, u: np.ndarray) -> np.ndarray:
    """Antiderivative of the slope modulation, zero at segment joints."""
    decel, accel, cycle = _wave_layout(j)
    ell = np.minimum(np.floor(u / cycle), j - 1)
    rel = u - ell * cycle
    down = rel <= decel
    return np.where(
        down,
        (decel / np.pi) * np.sin(np.pi * np.clip(rel, 0.0, decel) / decel),
        -(accel / np.pi) * np.sin(np.pi * np.clip(rel - decel, 0.0, accel) / accel),
    )


def wave_point(j: int, amplitude: float, t: float) -> tuple[float, float]:
    """Point on the wave front at curve parameter t in [0, 1].

    The front runs from (0, 1) to (1, 0) as a staircase of j convex
    descents (knees) joined by shorter concave run-ups: both objectives
    are strictly monotone in t, and the trade-off rate swings between
    steep and flat with contrast controlled by the amplitude. At
    amplitude 0 the front is the straight line f2 = 1 - f1.
    """
    c = _wave_contrast(j, amplitude)
    s = float(_wave_oscillation(j, np.array([t]))[0])
    return t - c * s, 1.0 - t - c * s


def _wave_contrast(j: int, amplitude: float) -> float:
    if j < 1:
        raise ValueError("need at least one oscillation")
    if not 0.0 <= amplitude < WAVE_AMPLITUDE_MAX:
        raise ValueError(
            f"amplitude {amplitude} violates the monotonicity bound "
            f"0 <= A < {WAVE_AMPLITUDE_MAX}"
        )
    return amplitude / WAVE_AMPLITUDE_MAX


def wave_knee_intervals(j: int) -> list[tuple[float, float]]:
    """The j first-objective intervals where the wave front is convex.

    The convex descents are the knee regions: they bulge toward the
    ideal point, and each ends in a flat 'pocket' that is the locally
    best trade-off. Interval ends coincide in parameter and in f1, so
    containment of a selected point can be checked on its f1 value.
    """
    decel, _, cycle = _wave_layout(j)
    return [(l * cycle, l * cycle + decel) for l in range(j)]


def gen_dtlz2_2d(n: int, seed: int) -> np.ndarray:
    """Sample the concave quarter-circle front, theta uniform in [0, pi/2]."""
    if n < 1:
        raise ValueError("need n >= 1 samples")
    theta = _rng(seed).random(n) * (math.pi / 2.0)
    return np.column_stack([np.cos(theta), np.sin(theta)])


def gen_minus_dtlz2_2d(n: int, seed: int) -> np.ndarray:
    """Sample the convex unit-circle front, ideal point (0, 0)."""
    if n < 1:
        raise ValueError("need n >= 1 samples")
    theta = _rng(seed).random(n) * (math.pi / 2.0)
    return np.column_stack([1.0 - np.cos(theta), 1.0 - np.sin(theta)])


def gen_minus_dtlz1_3d(n: int, seed: int) -> np.ndarray:
    """Sample the linear front f1 + f2 + f3 = 2 with 0 <= f_i <= 1.

    Uniform via rejection: draw uniformly on the simplex sum(f) = 2,
    f >= 0, and keep draws inside the unit cube (acceptance rate 1/4).
    """
    if n < 1:
        raise ValueError("need n >= 1 samples")
    rng = _rng(seed)
    out = np.empty((n, 3))
    have = 0
    while have < n:
        want = max(n - have, 16)
        e = rng.exponential(size=(4 * want, 3))
        f = 2.0 * e / e.sum(axis=1, keepdims=True)
        f = f[(f <= 1.0).all(axis=1)]
        take = min(len(f), n - have)
        out[have:have + take] = f[:take]
        have += take
    return out


def gen_wave(j: int, amplitude: float, n: int, seed: int) -> np.ndarray:
    """Sample the wave front of :func:`wave_point`, t uniform in [0, 1].

    Both objectives are strictly monotone in the parameter for any
    amplitude below the monotonicity bound, so every sampled pair is
    mutually non-dominated.
    """
    if n < 1:
        raise ValueError("need n >= 1 samples")
    c = _wave_contrast(j, amplitude)
    u = _rng(seed).random(n)
    osc = c * _wave_oscillation(j, u)
    return np.column_stack([u - osc, 1.0 - u - osc])


def gen_distmin_5(n: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Sample the five-objective distance-minimization problem.

    Draws n decision points uniformly inside the anchor pentagon (fan
    triangulation from the centroid, area-weighted) and maps each to
    its vector of Euclidean distances to the five anchors. Returns
    (objectives (n, 5), decisions (n, 2)).
    """
    if n < 1:
        raise ValueError("need n >= 1 samples")
    rng = _rng(seed)
    anchors = PENTAGON_ANCHORS
    centroid = anchors.mean(axis=0)
    m = len(anchors)
    tri_a = anchors
    tri_b = np.roll(anchors, -1, axis=0)
    areas = 0.5 * np.abs(
        (tri_a[:, 0] - centroid[0]) * (tri_b[:, 1] - centroid[1])
        - (tri_b[:, 0] - centroid[0]) * (tri_a[:, 1] - centroid[1])
    )
    probs = areas / areas.sum()
    which = rng.choice(m, size=n, p=probs)
    u = rng.random(n)
    v = rng.random(n)
    flip = u + v > 1.0
    u[flip] = 1.0 - u[flip]
    v[flip] = 1.0 - v[flip]
    decisions = (
        centroid
        + u[:, None] * (tri_a[which] - centroid)
        + v[:, None] * (tri_b[which] - centroid)
    )
    objectives = np.sqrt(
        ((decisions[:, None, :] - anchors[None, :, :]) ** 2).sum(axis=2)
    )
    return objectives, decisions


def analytic_bounds(kind: str) -> tuple[np.ndarray, np.ndarray]:
    """Analytic (ideal, nadir) of a front kind, for figure normalization."""
    if kind in ("dtlz2-2d", "minus-dtlz2-2d", "wave"):
        return np.zeros(2), np.ones(2)
    if kind == "minus-dtlz1-3d":
        return np.zeros(3), np.ones(3)
    if kind == "distmin-5":
        gaps = np.sqrt(
            ((PENTAGON_ANCHORS[:, None, :] - PENTAGON_ANCHORS[None, :, :]) ** 2).sum(axis=2)
        )
        return np.zeros(5), gaps.max(axis=1)
    raise ValueError(f"unknown front kind '{kind}'")


@dataclass(frozen=True)
class FrontSample:
    """A generated solution set plus, when available, its decision view."""

    points: np.ndarray
    decisions: np.ndarray | None = None


@dataclass(frozen=True)
class FrontSpec:
    """Identifier and parameters of one reproducible front sample."""

    kind: str
    n: int = 500
    seed: int = 0
    wave_j: int = 3
    wave_amplitude: float = 0.04

    def __post_init__(self):
        if self.kind not in FRONT_KINDS:
            raise ValueError(f"unknown front kind '{self.kind}' (choose from {FRONT_KINDS})")
        if self.n < 1:
            raise ValueError("need n >= 1 samples")

    def generate(self) -> FrontSample:
        if self.kind == "dtlz2-2d":
            return FrontSample(gen_dtlz2_2d(self.n, self.seed))
        if self.kind == "minus-dtlz2-2d":
            return FrontSample(gen_minus_dtlz2_2d(self.n, self.seed))
        if self.kind == "minus-dtlz1-3d":
            return FrontSample(gen_minus_dtlz1_3d(self.n, self.seed))
        if self.kind == "wave":
            return FrontSample(gen_wave(self.wave_j, self.wave_amplitude, self.n, self.seed))
        objectives, decisions = gen_distmin_5(self.n, self.seed)
        return FrontSample(objectives, decisions)

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "n": self.n, "seed": self.seed}
        if self.kind == "wave":
            d["wave_j"] = self.wave_j
            d["wave_amplitude"] = self.wave_amplitude
        return d
