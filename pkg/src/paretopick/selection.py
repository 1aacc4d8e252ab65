"""Subset-selection strategies over a chosen quality indicator.

A selection run picks exactly k of the n input points. Strategies:

- exhaustive: enumerate all C(n, k) subsets (budget-capped), exact.
- greedy: grow the subset one point at a time, always adding the point
  that best improves the indicator of the growing subset.
- ga: fixed-cardinality genetic algorithm on bit masks (binary
  tournament, one-point crossover, biased bit-flip mutation with a
  repair step, (mu + mu) truncation with duplicate removal).
- distance: indicator-free max-min-distance selection seeded with the
  per-objective extreme solutions.

Hypervolume is maximized; IGD and IGD+ are minimized against the full
input set as the reference set. All stochastic choices derive from a
single numpy PCG64 generator per run, so a (points, spec) pair fully
determines the result.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import as_point_set, extreme_solutions
from .indicators import (
    _hv_core,
    euclidean_distance_matrix,
    hv,
    igd,
    igd_plus,
    truncated_distance_matrix,
)

__all__ = [
    "INDICATORS",
    "STRATEGIES",
    "DEFAULT_SUBSET_BUDGET",
    "BudgetExceededError",
    "GaParams",
    "SelectionSpec",
    "SelectionResult",
    "PipelineStage",
    "evaluate_subset",
    "select",
    "select_exhaustive",
    "select_greedy",
    "select_ga",
    "select_distance",
    "select_pipeline",
    "optimal_hv_subset_2d",
]

INDICATORS = ("hv", "igd", "igdplus")
STRATEGIES = ("exhaustive", "greedy", "ga", "distance")

#: Maximum number of subsets select_exhaustive will enumerate.
DEFAULT_SUBSET_BUDGET = 10_000_000

RNG_ALGORITHM = "numpy-pcg64"


class BudgetExceededError(RuntimeError):
    """Raised when an enumeration would exceed its configured budget."""


@dataclass(frozen=True)
class GaParams:
    """Genetic-algorithm parameters; defaults follow the experiment setup."""

    mu: int = 100
    generations: int = 2000
    crossover_prob: float = 1.0

    def __post_init__(self):
        if self.mu < 2:
            raise ValueError("population size mu must be >= 2")
        if self.generations < 1:
            raise ValueError("need at least one generation")
        if not 0.0 <= self.crossover_prob <= 1.0:
            raise ValueError("crossover probability must be in [0, 1]")


@dataclass(frozen=True)
class SelectionSpec:
    """Everything that determines one selection run apart from the points."""

    indicator: str = "igdplus"
    strategy: str = "ga"
    k: int = 9
    reference_point: tuple[float, ...] | None = None
    ga: GaParams = field(default_factory=GaParams)
    seed: int = 0

    def __post_init__(self):
        if self.indicator not in INDICATORS:
            raise ValueError(f"unknown indicator '{self.indicator}' (choose from {INDICATORS})")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy '{self.strategy}' (choose from {STRATEGIES})")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.indicator == "hv" and self.reference_point is None:
            raise ValueError("hypervolume selection requires a reference point")
        if self.indicator != "hv" and self.reference_point is not None:
            raise ValueError("reference point is only meaningful for hypervolume")
        if self.reference_point is not None:
            object.__setattr__(
                self, "reference_point", tuple(float(x) for x in self.reference_point)
            )

    def with_seed(self, seed: int) -> "SelectionSpec":
        return SelectionSpec(self.indicator, self.strategy, self.k,
                             self.reference_point, self.ga, seed)

    def to_dict(self) -> dict:
        return {
            "indicator": self.indicator,
            "strategy": self.strategy,
            "k": self.k,
            "reference_point": list(self.reference_point) if self.reference_point else None,
            "ga": {"mu": self.ga.mu, "generations": self.ga.generations,
                   "crossover_prob": self.ga.crossover_prob},
            "seed": self.seed,
            "rng": RNG_ALGORITHM,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SelectionSpec":
        ref = d.get("reference_point")
        ga = d.get("ga") or {}
        return cls(
            indicator=d["indicator"],
            strategy=d["strategy"],
            k=d["k"],
            reference_point=tuple(ref) if ref else None,
            ga=GaParams(ga.get("mu", 100), ga.get("generations", 2000),
                        ga.get("crossover_prob", 1.0)),
            seed=d.get("seed", 0),
        )


@dataclass(eq=False)
class SelectionResult:
    """Outcome of one selection run.

    mask is a boolean vector over the input points with exactly k True
    entries; history holds the best indicator value after each GA
    generation (None for deterministic strategies).
    """

    mask: np.ndarray
    indicator_value: float
    history: list[float] | None
    seed: int
    rng_algorithm: str = RNG_ALGORITHM

    @property
    def indices(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.mask)]

    @property
    def k(self) -> int:
        return int(np.count_nonzero(self.mask))


def _mask_from_indices(n: int, indices) -> np.ndarray:
    mask = np.zeros(n, dtype=bool)
    mask[list(indices)] = True
    return mask


def evaluate_subset(points, indices, indicator: str,
                    reference_point=None, reference_set=None) -> float:
    """Value of one indicator on the subset points[indices].

    IGD and IGD+ default to the full input set as the reference set.
    """
    pts = as_point_set(points)
    sub = pts[list(indices)]
    if indicator == "hv":
        if reference_point is None:
            raise ValueError("hypervolume needs a reference point")
        return hv(sub, reference_point)
    ref = pts if reference_set is None else as_point_set(reference_set)
    if indicator == "igd":
        return igd(sub, ref)
    if indicator == "igdplus":
        return igd_plus(sub, ref)
    raise ValueError(f"unknown indicator '{indicator}'")


# ---------------------------------------------------------------------------
# Internal objective plumbing
# ---------------------------------------------------------------------------


class _HvObjective:
    maximize = True

    def __init__(self, points: np.ndarray, ref):
        r = np.asarray(ref, dtype=float)
        if points.shape[1] != r.shape[0]:
            raise ValueError(
                f"reference point has {r.shape[0]} components for "
                f"{points.shape[1]} objectives"
            )
        self._pts = [tuple(row) for row in points.tolist()]
        self._ref = tuple(r.tolist())
        self._cache: dict[tuple[int, ...], float] = {}

    def raw(self, idx: tuple[int, ...]) -> float:
        ref = self._ref
        inside = []
        for i in idx:
            p = self._pts[i]
            if all(c < rc for c, rc in zip(p, ref)):
                inside.append(p)
        return _hv_core(inside, ref)

    def cached(self, idx: tuple[int, ...]) -> float:
        v = self._cache.get(idx)
        if v is None:
            v = self.raw(idx)
            self._cache[idx] = v
        return v

    def score(self, value: float) -> float:
        return -value


class _MatrixObjective:
    maximize = False

    def __init__(self, matrix: np.ndarray):
        self.matrix = matrix
        self._cache: dict[tuple[int, ...], float] = {}

    def raw(self, idx: tuple[int, ...]) -> float:
        return float(np.take(self.matrix, idx, axis=0).min(axis=0).mean())

    def cached(self, idx: tuple[int, ...]) -> float:
        v = self._cache.get(idx)
        if v is None:
            v = self.raw(idx)
            self._cache[idx] = v
        return v

    def score(self, value: float) -> float:
        return value


def _make_objective(points: np.ndarray, spec: SelectionSpec):
    if spec.indicator == "hv":
        return _HvObjective(points, spec.reference_point)
    if spec.indicator == "igd":
        return _MatrixObjective(euclidean_distance_matrix(points))
    return _MatrixObjective(truncated_distance_matrix(points))


def _check_k(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"k={k} must be between 1 and the set size {n}")


# ---------------------------------------------------------------------------
# Exhaustive enumeration
# ---------------------------------------------------------------------------


def select_exhaustive(points, spec: SelectionSpec,
                      budget: int = DEFAULT_SUBSET_BUDGET) -> SelectionResult:
    """True optimum of the indicator over all C(n, k) subsets.

    Ties are broken by the lexicographically smallest selection mask.
    Raises BudgetExceededError when C(n, k) exceeds the budget.
    """
    pts = as_point_set(points)
    n = len(pts)
    _check_k(n, spec.k)
    total = math.comb(n, spec.k)
    if total > budget:
        raise BudgetExceededError(
            f"C({n},{spec.k}) = {total} subsets exceeds the budget of {budget}"
        )
    obj = _make_objective(pts, spec)
    best_idx: tuple[int, ...] | None = None
    best_score = math.inf
    for idx in itertools.combinations(range(n), spec.k):
        s = obj.score(obj.raw(idx))
        # A lexicographically larger index tuple is a lexicographically
        # smaller mask (its early bits are zero), hence preferred on ties.
        if s < best_score or (s == best_score and idx > best_idx):
            best_score = s
            best_idx = idx
    value = obj.raw(best_idx)
    return SelectionResult(_mask_from_indices(n, best_idx), value, None, spec.seed)


# ---------------------------------------------------------------------------
# Incremental greedy
# ---------------------------------------------------------------------------


def select_greedy(points, spec: SelectionSpec) -> SelectionResult:
    """Grow the subset point by point, best indicator improvement first.

    For hypervolume this is the classic incremental greedy (first the
    best single point, then maximal contribution). The same framework
    extends to IGD/IGD+: each step adds the point whose inclusion
    yields the lowest indicator against the full set. Ties pick the
    lowest index.
    """
    pts = as_point_set(points)
    n = len(pts)
    _check_k(n, spec.k)
    obj = _make_objective(pts, spec)
    selected: list[int] = []
    if isinstance(obj, _MatrixObjective):
        dist = np.full(n, math.inf)
        chosen = np.zeros(n, dtype=bool)
        for _ in range(spec.k):
            vals = np.minimum(obj.matrix, dist[None, :]).mean(axis=1)
            vals[chosen] = math.inf
            c = int(np.argmin(vals))
            selected.append(c)
            chosen[c] = True
            dist = np.minimum(dist, obj.matrix[c])
    else:
        taken = set()
        for _ in range(spec.k):
            best_c = -1
            best_v = -math.inf
            for c in range(n):
                if c in taken:
                    continue
                v = obj.raw(tuple(sorted(selected + [c])))
                if v > best_v:
                    best_v = v
                    best_c = c
            selected.append(best_c)
            taken.add(best_c)
    idx = tuple(sorted(selected))
    return SelectionResult(_mask_from_indices(n, idx), obj.raw(idx), None, spec.seed)


# ---------------------------------------------------------------------------
# Genetic algorithm
# ---------------------------------------------------------------------------


def _random_k_mask(n: int, k: int, rng: np.random.Generator) -> np.ndarray:
    mask = np.zeros(n, dtype=np.uint8)
    mask[rng.choice(n, size=k, replace=False)] = 1
    return mask


def _mutate(child: np.ndarray, k: int, rng: np.random.Generator) -> None:
    """Biased bit-flip: 1-bits flip w.p. 1/k, 0-bits w.p. 1/(n - k)."""
    _mutate_with(child, k, rng.random(child.shape[0]))


def _mutate_with(child: np.ndarray, k: int, u: np.ndarray) -> None:
    n = child.shape[0]
    ones = child == 1
    flip = (ones & (u < 1.0 / k)) | (~ones & (u < 1.0 / (n - k)))
    child ^= flip.astype(np.uint8)


def _repair(child: np.ndarray, k: int, rng: np.random.Generator) -> None:
    """Force exactly k ones by flipping uniformly chosen surplus bits.

    Flip positions are sampled without replacement by rejection, which
    is cheap because only a few bits ever need correction.
    """
    c = int(child.sum())
    if c == k:
        return
    if c > k:
        eligible = np.flatnonzero(child)
        need, new_bit = c - k, 0
    else:
        eligible = np.flatnonzero(child == 0)
        need, new_bit = k - c, 1
    m = len(eligible)
    picked: set[int] = set()
    while len(picked) < need:
        cand = int(rng.integers(0, m))
        if cand not in picked:
            picked.add(cand)
            child[eligible[cand]] = new_bit


def _evaluate(mask: np.ndarray, obj) -> tuple[float, bytes, np.ndarray]:
    idx = tuple(np.flatnonzero(mask).tolist())
    return obj.score(obj.cached(idx)), mask.tobytes(), mask


def select_ga(points, spec: SelectionSpec) -> SelectionResult:
    """Fixed-cardinality GA search for the best size-k subset.

    Per generation: mu offspring from mu/2 pairings of binary-tournament
    parents, one-point crossover, biased bit-flip mutation, repair to
    exactly k ones, then (mu + mu) truncation keeping the best distinct
    masks (refilled with fresh random masks if duplicates leave fewer
    than mu). Deterministic for a fixed seed: each generation draws, in
    order, the tournament indices, crossover coins, cut points, the
    mutation matrix, and finally any repair picks, all from one PCG64
    stream. History records the best indicator value per generation.
    """
    pts = as_point_set(points)
    n = len(pts)
    k = spec.k
    _check_k(n, k)
    params = spec.ga
    obj = _make_objective(pts, spec)
    if k == n:
        idx = tuple(range(n))
        value = obj.raw(idx)
        return SelectionResult(np.ones(n, dtype=bool), value,
                               [value] * params.generations, spec.seed)
    if params.mu > math.comb(n, k):
        raise ValueError(
            f"cannot build {params.mu} distinct masks: only "
            f"C({n},{k}) = {math.comb(n, k)} exist"
        )
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    mu = params.mu

    pop: list[tuple[float, bytes, np.ndarray]] = []
    seen: set[bytes] = set()
    while len(pop) < mu:
        mask = _random_k_mask(n, k, rng)
        key = mask.tobytes()
        if key in seen:
            continue
        seen.add(key)
        pop.append(_evaluate(mask, obj))

    best = min(pop, key=lambda ind: (ind[0], ind[1]))
    history: list[float] = []
    inv = -1.0 if obj.maximize else 1.0
    pairs = (mu + 1) // 2

    for _ in range(params.generations):
        first = rng.integers(0, mu, size=(pairs, 2))
        second = rng.integers(0, mu - 1, size=(pairs, 2))
        second += second >= first
        coins = rng.random(pairs)
        cuts = rng.integers(1, n, size=pairs)
        flips = rng.random((2 * pairs, n))

        offspring_masks: list[np.ndarray] = []
        for p in range(pairs):
            p1 = _tournament(pop, first[p, 0], second[p, 0])
            p2 = _tournament(pop, first[p, 1], second[p, 1])
            if coins[p] < params.crossover_prob:
                cut = int(cuts[p])
                c1 = np.concatenate([p1[:cut], p2[cut:]])
                c2 = np.concatenate([p2[:cut], p1[cut:]])
            else:
                c1, c2 = p1.copy(), p2.copy()
            offspring_masks.extend((c1, c2))
        del offspring_masks[mu:]

        offspring = []
        for i, child in enumerate(offspring_masks):
            _mutate_with(child, k, flips[i])
            _repair(child, k, rng)
            assert int(child.sum()) == k
            offspring.append(_evaluate(child, obj))

        pool = pop + offspring
        unique: list[tuple[float, bytes, np.ndarray]] = []
        keys: set[bytes] = set()
        for ind in pool:
            if ind[1] not in keys:
                keys.add(ind[1])
                unique.append(ind)
        unique.sort(key=lambda ind: (ind[0], ind[1]))
        pop = unique[:mu]
        while len(pop) < mu:
            mask = _random_k_mask(n, k, rng)
            key = mask.tobytes()
            if key in keys:
                continue
            keys.add(key)
            pop.append(_evaluate(mask, obj))

        gen_best = pop[0]
        if (gen_best[0], gen_best[1]) < (best[0], best[1]):
            best = gen_best
        history.append(inv * best[0])

    mask = best[2].astype(bool)
    return SelectionResult(mask, inv * best[0], history, spec.seed)


def _tournament(pop, i, j) -> np.ndarray:
    """Binary tournament on a pre-drawn distinct index pair.

    The better (score, mask-bytes) tuple wins, so score ties resolve to
    the lexicographically smaller mask.
    """
    a, b = pop[int(i)], pop[int(j)]
    winner = a if (a[0], a[1]) <= (b[0], b[1]) else b
    return winner[2].copy()


# ---------------------------------------------------------------------------
# Distance-based selection
# ---------------------------------------------------------------------------


def select_distance(points, k: int, seed: int = 0,
                    spec: SelectionSpec | None = None) -> SelectionResult:
    """Indicator-free diverse selection by greedy max-min distance.

    Starts from the per-objective extreme solutions (deduplicated,
    truncated to k if they already exceed it), then repeatedly adds the
    point with the largest minimum Euclidean distance to the current
    selection. Deterministic; ties pick the lowest index.

    The reported indicator value is the spec's indicator when a spec is
    given, else the subset's expected loss (IGD+) against the input set.
    """
    pts = as_point_set(points)
    n = len(pts)
    _check_k(n, k)
    extremes = list(dict.fromkeys(extreme_solutions(pts)))
    selected = extremes[:k]
    if len(selected) < k:
        dmat = euclidean_distance_matrix(pts)
        chosen = np.zeros(n, dtype=bool)
        chosen[selected] = True
        dist = dmat[selected].min(axis=0)
        while int(chosen.sum()) < k:
            vals = dist.copy()
            vals[chosen] = -math.inf
            c = int(np.argmax(vals))
            selected.append(c)
            chosen[c] = True
            dist = np.minimum(dist, dmat[c])
    idx = tuple(sorted(selected))
    if spec is not None:
        value = evaluate_subset(pts, idx, spec.indicator, spec.reference_point)
    else:
        value = igd_plus(pts[list(idx)], pts)
    return SelectionResult(_mask_from_indices(n, idx), value, None, seed)


# ---------------------------------------------------------------------------
# Staged reduction pipeline
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PipelineStage:
    """One reduction stage: strategy, target size, and indicator setup."""

    strategy: str
    k: int
    indicator: str = "igdplus"
    reference_point: tuple[float, ...] | None = None
    ga: GaParams = field(default_factory=GaParams)

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy '{self.strategy}'")
        if self.k < 1:
            raise ValueError("stage k must be >= 1")


def select(points, spec: SelectionSpec) -> SelectionResult:
    """Dispatch one selection run by strategy."""
    if spec.strategy == "exhaustive":
        return select_exhaustive(points, spec)
    if spec.strategy == "greedy":
        return select_greedy(points, spec)
    if spec.strategy == "ga":
        return select_ga(points, spec)
    return select_distance(points, spec.k, spec.seed, spec)


def select_pipeline(points, stages: list[PipelineStage], seed: int = 0) -> SelectionResult:
    """Apply reduction stages in sequence, each on the previous output.

    Stage sizes must be strictly decreasing; IGD/IGD+ stages use their
    own input set as the reference set, so later stages measure loss
    relative to what survived earlier ones. Stage i runs with seed
    seed + i. The returned mask indexes the original point set.
    """
    pts = as_point_set(points)
    if not stages:
        raise ValueError("need at least one pipeline stage")
    ks = [stage.k for stage in stages]
    if any(b >= a for a, b in zip(ks, ks[1:])):
        raise ValueError(f"stage sizes must be strictly decreasing, got {ks}")
    current = np.arange(len(pts))
    result = None
    for i, stage in enumerate(stages):
        if stage.k > len(current):
            raise ValueError(
                f"stage {i} wants k={stage.k} from only {len(current)} points"
            )
        stage_spec = SelectionSpec(
            indicator=stage.indicator,
            strategy=stage.strategy,
            k=stage.k,
            reference_point=stage.reference_point,
            ga=stage.ga,
            seed=seed + i,
        )
        result = select(pts[current], stage_spec)
        current = current[result.mask]
    return SelectionResult(
        _mask_from_indices(len(pts), current),
        result.indicator_value,
        result.history,
        seed,
    )


# ---------------------------------------------------------------------------
# Exact 2-D optimum (test oracle)
# ---------------------------------------------------------------------------


def optimal_hv_subset_2d(points, ref, k: int) -> SelectionResult:
    """Exact hypervolume-optimal k-subset of a 2-D non-dominated set.

    Sorting a mutually non-dominated 2-D set by the first objective
    makes its hypervolume a sum over consecutive selected points, so
    the optimum is found by dynamic programming over sorted positions
    in O(k n^2) instead of C(n, k) enumeration. Used as the exact
    baseline when certifying greedy suboptimality at sizes where
    enumeration is infeasible.

    Requires every point to strictly dominate the reference point and
    the set to be mutually non-dominated with no duplicates.
    """
    pts = as_point_set(points)
    n = len(pts)
    _check_k(n, k)
    if pts.shape[1] != 2:
        raise ValueError("the DP optimum applies to 2-D sets only")
    r = np.asarray(ref, dtype=float)
    if np.any(pts >= r):
        raise ValueError("every point must strictly dominate the reference point")
    order = np.argsort(pts[:, 0], kind="stable")
    x = pts[order, 0]
    y = pts[order, 1]
    if np.any(np.diff(x) <= 0) or np.any(np.diff(y) >= 0):
        raise ValueError("points must be mutually non-dominated and distinct")

    # dp[i] = best hypervolume of a subset ending at sorted position i;
    # the strip of point i spans (r0 - x_i) wide from the predecessor's
    # second objective (or r1 for the first selected point).
    dp = (r[0] - x) * (r[1] - y)
    parent = [np.full(n, -1, dtype=int)]
    for _ in range(1, k):
        ndp = np.full(n, -math.inf)
        npar = np.full(n, -1, dtype=int)
        for i in range(1, n):
            cand = dp[:i] + (r[0] - x[i]) * (y[:i] - y[i])
            p = int(np.argmax(cand))
            ndp[i] = cand[p]
            npar[i] = p
        dp = ndp
        parent.append(npar)

    end = int(np.argmax(dp))
    chain = []
    i = end
    for level in range(k - 1, -1, -1):
        chain.append(i)
        i = int(parent[level][i])
    idx = tuple(sorted(int(order[i]) for i in chain))
    value = hv(pts[list(idx)], r)
    return SelectionResult(_mask_from_indices(n, idx), value, None, 0)
