"""Subset selection on the concave vs convex 2-D fronts.

For each front and indicator, runs the GA over repeated seeds, keeps
the median-value run, and writes an SVG of the 500-point front with the
9 selected points highlighted. The convex front should show HV and the
expected loss concentrating picks near the center while IGD spreads
them uniformly.
"""

import argparse
from pathlib import Path

from paretopick import FrontSpec, GaParams, SelectionSpec
from paretopick.harness import run_repeats
from paretopick.svgplot import scatter_svg


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="results/shape")
    ap.add_argument("--n", type=int, default=500)
    ap.add_argument("--k", type=int, default=9)
    ap.add_argument("--front-seed", type=int, default=42)
    ap.add_argument("--repeats", type=int, default=31)
    ap.add_argument("--workers", type=int, default=2)
    ap.add_argument("--generations", type=int, default=2000)
    args = ap.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    ga = GaParams(generations=args.generations)

    for kind in ("dtlz2-2d", "minus-dtlz2-2d"):
        points = FrontSpec(kind, args.n, args.front_seed).generate().points
        for indicator in ("hv", "igd", "igdplus"):
            ref = (1.125, 1.125) if indicator == "hv" else None
            spec = SelectionSpec(indicator, "ga", args.k, ref, ga, seed=0)
            report = run_repeats(points, spec, args.repeats, args.workers)
            best = report.median_result
            name = f"{kind}-{indicator}"
            scatter_svg(points, points[best.mask], out / f"{name}.svg")
            print(f"{name}: median {indicator} = {best.indicator_value:.6f} "
                  f"(seed {best.seed}) -> {out / (name + '.svg')}")


if __name__ == "__main__":
    main()
