"""paretopick: decision-ready subset selection from non-dominated sets.

Selects a small subset of k solutions from a large multi-objective
solution set by minimizing the expected substitution loss (equivalently
the IGD+ indicator), with hypervolume- and IGD-based selection as
baselines, plus analytic front generators and a seeded experiment
harness.
"""

from .geometry import (
    as_point_set,
    denormalize,
    dominates,
    extreme_solutions,
    filter_non_dominated,
    ideal_point,
    is_non_dominated_set,
    nadir_point,
    non_dominated_mask,
    normalize,
)
from .indicators import (
    expected_loss,
    hv,
    hv_contribution,
    hv_inclusion_exclusion,
    hv_monte_carlo,
    hv_point,
    igd,
    igd_plus,
    loss_point,
    loss_subset,
    weighted_expected_loss,
)
from .selection import (
    BudgetExceededError,
    GaParams,
    PipelineStage,
    SelectionResult,
    SelectionSpec,
    evaluate_subset,
    optimal_hv_subset_2d,
    select,
    select_distance,
    select_exhaustive,
    select_ga,
    select_greedy,
    select_pipeline,
)
from .fronts import (
    PENTAGON_ANCHORS,
    WAVE_AMPLITUDE_MAX,
    FrontSample,
    FrontSpec,
    analytic_bounds,
    dtlz2_2d_point,
    gen_distmin_5,
    gen_dtlz2_2d,
    gen_minus_dtlz1_3d,
    gen_minus_dtlz2_2d,
    gen_wave,
    minus_dtlz2_2d_point,
    wave_knee_intervals,
    wave_point,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
