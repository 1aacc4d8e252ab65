"""Seeded repetition harness for selection experiments.

Runs a selection spec over a batch of seeds and picks the run with the
median indicator value (the lower median for even batch sizes), which
is the run whose artifacts get reported. Repetitions are independent,
so they may execute in parallel worker processes.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .selection import SelectionResult, SelectionSpec, select

__all__ = ["ExperimentReport", "run_repeats"]


@dataclass
class ExperimentReport:
    """Per-seed results of a repeated selection experiment."""

    spec: SelectionSpec
    seeds: list[int]
    results: list[SelectionResult]
    median_index: int

    @property
    def values(self) -> list[float]:
        return [r.indicator_value for r in self.results]

    @property
    def median_result(self) -> SelectionResult:
        return self.results[self.median_index]

    @property
    def median_value(self) -> float:
        return self.results[self.median_index].indicator_value


def _run_one(args) -> SelectionResult:
    points, spec = args
    return select(points, spec)


def median_index(values: list[float], seeds: list[int]) -> int:
    """Position of the median run: the (r+1)//2-th smallest of r values
    (16th of 31), ties resolved by seed for determinism."""
    order = sorted(range(len(values)), key=lambda i: (values[i], seeds[i]))
    return order[(len(values) - 1) // 2]


def run_repeats(points, spec: SelectionSpec, repeats: int = 31,
                workers: int = 1) -> ExperimentReport:
    """Run the spec with seeds spec.seed .. spec.seed + repeats - 1."""
    if repeats < 1:
        raise ValueError("need at least one repetition")
    pts = np.asarray(points, dtype=float)
    seeds = [spec.seed + i for i in range(repeats)]
    specs = [spec.with_seed(s) for s in seeds]
    if workers > 1 and repeats > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, [(pts, s) for s in specs]))
    else:
        results = [select(pts, s) for s in specs]
    mi = median_index([r.indicator_value for r in results], seeds)
    return ExperimentReport(spec, seeds, results, mi)
