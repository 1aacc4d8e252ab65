"""Command-line interface.

Subcommands: generate (sample an analytic front), select (one selection
run), evaluate (indicator values of a subset), pipeline (staged
reduction), experiment (seeded repetitions with median reporting), and
plot (SVG scatter of a set plus selection).

Exit codes: 0 success, 2 usage error, 3 input error, 4 enumeration
budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .fronts import FRONT_KINDS, FrontSpec
from .harness import run_repeats
from .io import InputFormatError, RunRecord, read_points, read_result, write_points, write_result
from .selection import (
    DEFAULT_SUBSET_BUDGET,
    BudgetExceededError,
    GaParams,
    PipelineStage,
    SelectionSpec,
    select,
    select_exhaustive,
    select_pipeline,
)
from .svgplot import scatter_svg

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_BUDGET = 4

AUTO_REFERENCE = {2: (1.125, 1.125), 5: (2.0, 2.0, 2.0, 2.0, 2.0)}


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paretopick",
        description="Decision-ready subset selection from non-dominated solution sets.",
    )
    parser.add_argument("--version", action="version", version=f"paretopick {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="sample an analytic Pareto front")
    gen.add_argument("--front", required=True, choices=FRONT_KINDS)
    gen.add_argument("--n", type=int, default=500)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--wave-j", type=int, default=3)
    gen.add_argument("--wave-amp", type=float, default=0.04)
    gen.add_argument("--out", required=True)
    gen.add_argument("--decisions-out",
                     help="CSV for the 2-D decision samples (distmin-5 only)")

    def add_input_args(p):
        p.add_argument("--input", required=True, help="point-set file")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--maximize", action="store_true",
                       help="objectives are maximized; negate on ingestion")

    def add_select_args(p):
        p.add_argument("--indicator", choices=("hv", "igd", "igdplus"), default="igdplus")
        p.add_argument("--strategy", choices=("exhaustive", "greedy", "ga", "distance"),
                       default="ga")
        p.add_argument("--k", type=int, default=9)
        p.add_argument("--ref", help="HV reference point as comma tuple, or 'auto'")
        p.add_argument("--normalized", action="store_true",
                       help="assert inputs match the normalized setting assumed "
                            "by --ref auto")
        p.add_argument("--mu", type=int, default=100)
        p.add_argument("--generations", type=int, default=2000)
        p.add_argument("--crossover-prob", type=float, default=1.0)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget", type=int, default=DEFAULT_SUBSET_BUDGET,
                       help="max subsets for exhaustive enumeration")

    sel = sub.add_parser("select", help="run one subset selection")
    add_input_args(sel)
    add_select_args(sel)
    sel.add_argument("--out", required=True, help="run-record JSON")
    sel.add_argument("--points-out", help="selected-points CSV (default: <out>.csv)")

    ev = sub.add_parser("evaluate", help="indicator values of a subset")
    ev.add_argument("--input", required=True, help="subset point file")
    ev.add_argument("--format", choices=("csv", "json"), default="csv")
    ev.add_argument("--maximize", action="store_true")
    ev.add_argument("--full-set", required=True, help="full point set (IGD reference)")
    ev.add_argument("--ref", help="HV reference point (omit to skip HV)")
    ev.add_argument("--normalized", action="store_true")

    pipe = sub.add_parser("pipeline", help="staged reduction")
    add_input_args(pipe)
    pipe.add_argument("--stages", required=True, help="JSON stage list")
    pipe.add_argument("--seed", type=int, default=0)
    pipe.add_argument("--out", required=True)
    pipe.add_argument("--points-out")

    exp = sub.add_parser("experiment", help="seeded repetitions, median run reported")
    add_input_args(exp)
    add_select_args(exp)
    exp.add_argument("--repeats", type=int, default=31)
    exp.add_argument("--workers", type=int, default=1)
    exp.add_argument("--out", required=True, help="median run-record JSON")
    exp.add_argument("--points-out")
    exp.add_argument("--report", help="per-seed report JSON (default: <out>.report.json)")

    plot = sub.add_parser("plot", help="SVG scatter of a set and a selection")
    plot.add_argument("--input", required=True)
    plot.add_argument("--format", choices=("csv", "json"), default="csv")
    plot.add_argument("--record", help="run-record JSON; its mask marks the selection")
    plot.add_argument("--selected", help="CSV of selected points (alternative to --record)")
    plot.add_argument("--axis-prefix", default="f")
    plot.add_argument("--out", required=True)

    return parser


def _resolve_reference(args, m: int) -> tuple[float, ...] | None:
    if args.ref is None:
        return None
    if args.ref == "auto":
        if not args.normalized:
            raise _UsageError("--ref auto requires --normalized (the built-in "
                              "reference constants assume normalized inputs)")
        if m not in AUTO_REFERENCE:
            raise _UsageError(f"no auto reference point for {m} objectives; pass --ref")
        return AUTO_REFERENCE[m]
    try:
        ref = tuple(float(tok) for tok in args.ref.split(","))
    except ValueError:
        raise _UsageError(f"cannot parse reference point '{args.ref}'") from None
    if len(ref) != m:
        raise _UsageError(f"reference point has {len(ref)} components for {m} objectives")
    return ref


def _build_spec(args, m: int) -> SelectionSpec:
    ref = _resolve_reference(args, m)
    if args.indicator == "hv" and ref is None:
        raise _UsageError("indicator 'hv' requires --ref")
    if args.indicator != "hv" and ref is not None:
        raise _UsageError(f"--ref conflicts with indicator '{args.indicator}'")
    return SelectionSpec(
        indicator=args.indicator,
        strategy=args.strategy,
        k=args.k,
        reference_point=ref,
        ga=GaParams(args.mu, args.generations, args.crossover_prob),
        seed=args.seed,
    )


def cmd_generate(args) -> int:
    spec = FrontSpec(args.front, args.n, args.seed,
                     wave_j=args.wave_j, wave_amplitude=args.wave_amp)
    sample = spec.generate()
    write_points(sample.points, args.out)
    if sample.decisions is not None:
        dec_out = args.decisions_out or str(Path(args.out).with_suffix(".decisions.csv"))
        write_points(sample.decisions, dec_out)
        print(f"wrote {len(sample.points)} points to {args.out}, decisions to {dec_out}")
    elif args.decisions_out:
        raise _UsageError(f"front '{args.front}' has no decision-space view")
    else:
        print(f"wrote {len(sample.points)} points to {args.out}")
    return EXIT_OK


def _run_selection(points, spec: SelectionSpec, budget: int) -> tuple:
    t0 = time.perf_counter()
    if spec.strategy == "exhaustive":
        result = select_exhaustive(points, spec, budget)
    else:
        result = select(points, spec)
    return result, time.perf_counter() - t0


def cmd_select(args) -> int:
    points = read_points(args.input, args.format, args.maximize)
    spec = _build_spec(args, points.shape[1])
    result, wall = _run_selection(points, spec, args.budget)
    record = RunRecord(
        spec=spec, result=result, points=points, wall_time=wall,
        provenance={"input": str(args.input), "format": args.format},
        maximize=args.maximize,
    )
    write_result(record, args.out)
    points_out = args.points_out or str(Path(args.out).with_suffix(".csv"))
    selected = points[result.mask]
    write_points(-selected if args.maximize else selected, points_out)
    print(f"{spec.strategy}/{spec.indicator} k={spec.k} seed={spec.seed}: "
          f"value={result.indicator_value!r} -> {args.out}")
    return EXIT_OK


def cmd_evaluate(args) -> int:
    from .indicators import hv, igd, igd_plus

    subset = read_points(args.input, args.format, args.maximize)
    full = read_points(args.full_set, args.format, args.maximize)
    if subset.shape[1] != full.shape[1]:
        raise _UsageError("subset and full set have different dimensions")
    ref = _resolve_reference(args, subset.shape[1])
    out = {
        "igd": igd(subset, full),
        "igdplus": igd_plus(subset, full),
    }
    if ref is not None:
        out["hv"] = hv(subset, ref)
    json.dump(out, sys.stdout, indent=1)
    print()
    return EXIT_OK


def _parse_stages(path) -> list[PipelineStage]:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputFormatError(f"{path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path}: {exc}") from None
    if not isinstance(data, list):
        raise InputFormatError(f"{path}: expected a JSON list of stages")
    stages = []
    for i, entry in enumerate(data):
        try:
            stages.append(PipelineStage(
                strategy=entry["strategy"],
                k=int(entry["k"]),
                indicator=entry.get("indicator", "igdplus"),
                reference_point=tuple(entry["ref"]) if entry.get("ref") else None,
                ga=GaParams(int(entry.get("mu", 100)),
                            int(entry.get("generations", 2000)),
                            float(entry.get("crossover_prob", 1.0))),
            ))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputFormatError(f"{path}: stage {i}: {exc}") from None
    return stages


def cmd_pipeline(args) -> int:
    points = read_points(args.input, args.format, args.maximize)
    stages = _parse_stages(args.stages)
    t0 = time.perf_counter()
    result = select_pipeline(points, stages, args.seed)
    wall = time.perf_counter() - t0
    final = stages[-1]
    spec = SelectionSpec(indicator=final.indicator, strategy=final.strategy,
                         k=final.k, reference_point=final.reference_point,
                         ga=final.ga, seed=args.seed)
    record = RunRecord(
        spec=spec, result=result, points=points, wall_time=wall,
        provenance={"input": str(args.input), "format": args.format,
                    "stages": [{"strategy": s.strategy, "indicator": s.indicator,
                                "k": s.k} for s in stages]},
        maximize=args.maximize,
    )
    write_result(record, args.out)
    if args.points_out:
        selected = points[result.mask]
        write_points(-selected if args.maximize else selected, args.points_out)
    print(f"pipeline {'->'.join(str(s.k) for s in stages)}: "
          f"value={result.indicator_value!r} -> {args.out}")
    return EXIT_OK


def cmd_experiment(args) -> int:
    points = read_points(args.input, args.format, args.maximize)
    spec = _build_spec(args, points.shape[1])
    t0 = time.perf_counter()
    report = run_repeats(points, spec, args.repeats, args.workers)
    wall = time.perf_counter() - t0
    median = report.median_result
    record = RunRecord(
        spec=spec.with_seed(median.seed), result=median, points=points,
        wall_time=wall,
        provenance={"input": str(args.input), "format": args.format,
                    "repeats": args.repeats, "seeds": report.seeds},
        maximize=args.maximize,
    )
    write_result(record, args.out)
    points_out = args.points_out or str(Path(args.out).with_suffix(".csv"))
    selected = points[median.mask]
    write_points(-selected if args.maximize else selected, points_out)
    report_path = args.report or str(Path(args.out).with_suffix(".report.json"))
    with open(report_path, "w") as fh:
        json.dump({
            "repeats": args.repeats,
            "seeds": report.seeds,
            "values": report.values,
            "median_seed": median.seed,
            "median_value": median.indicator_value,
            "wall_time": wall,
        }, fh, indent=1)
        fh.write("\n")
    print(f"{args.repeats} runs of {spec.strategy}/{spec.indicator}: median "
          f"value={median.indicator_value!r} (seed {median.seed}) -> {args.out}")
    return EXIT_OK


def cmd_plot(args) -> int:
    points = read_points(args.input, args.format)
    selected = None
    if args.record and args.selected:
        raise _UsageError("pass either --record or --selected, not both")
    if args.record:
        doc = read_result(args.record)
        mask = doc["mask"]
        if max(mask, default=-1) >= len(points):
            raise InputFormatError(f"{args.record}: mask index out of range for input")
        selected = points[mask]
    elif args.selected:
        selected = read_points(args.selected, args.format)
    scatter_svg(points, selected, args.out, axis_prefix=args.axis_prefix)
    print(f"wrote {args.out}")
    return EXIT_OK


_COMMANDS = {
    "generate": cmd_generate,
    "select": cmd_select,
    "evaluate": cmd_evaluate,
    "pipeline": cmd_pipeline,
    "experiment": cmd_experiment,
    "plot": cmd_plot,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
