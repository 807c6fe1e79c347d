#!/usr/bin/env python3
"""Sweep the fractional order against the truncated zeta series and list
every distinct zero reached from the single initial condition 0.5 + 31.51i.

Takes a couple of seconds; prints one row per deduplicated root in the
order the sweep first saw it.
"""

import argparse
import time

import numpy as np

from fracroots import AlphaGrid, FpnConfig, hasse_zeta, parse_complex, run_sweep
from fracroots.cli import format_complex


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=50, help="series truncation")
    parser.add_argument("--grid", default="-1.2:0.35:0.005", help="order grid lo:hi:step")
    parser.add_argument("--x0", default="0.5+31.51i", help="initial condition")
    args = parser.parse_args()

    lo, hi, step = (float(p) for p in args.grid.split(":"))
    grid = AlphaGrid(lo=lo, hi=hi, step=step)
    target = hasse_zeta(args.k)
    x0 = np.array([parse_complex(args.x0)])

    start = time.perf_counter()
    report = run_sweep(target, x0, grid, FpnConfig(alpha=grid.values()[0]))
    elapsed = time.perf_counter() - start

    converged = sum(1 for r in report.records if r.status.name == "Converged")
    print(f"# {len(report.records)} runs, {converged} converged, "
          f"{len(report.unique_roots)} unique roots, {elapsed:.1f} s")
    print(f"{'alpha':>10} {'x_n':>32} {'step':>12} {'residual':>12} {'n':>5} {'hits':>5}")
    for unique in report.unique_roots:
        best = unique.best_record
        print(
            f"{best.alpha:>10.5f} {format_complex(complex(unique.root[0])):>32} "
            f"{best.step_norm:>12.3e} {best.residual_norm:>12.3e} "
            f"{best.iterations:>5d} {unique.multiplicity_count:>5d}"
        )


if __name__ == "__main__":
    main()
