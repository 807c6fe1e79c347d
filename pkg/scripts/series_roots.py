#!/usr/bin/env python3
"""Order sweeps for the truncated cosine/sine-integral series and the 2-d
exponential-sine system, all from the single initial conditions used in the
zeta experiment's companion tables."""

import time

import numpy as np

from fracroots import AlphaGrid, FpnConfig, ci_series, example3_system, run_sweep, si_series
from fracroots.cli import format_complex


def show(title, target, x0, grids):
    start = time.perf_counter()
    uniques = []
    total = 0
    for grid in grids:
        report = run_sweep(target, x0, grid, FpnConfig(alpha=grid.values()[0]))
        uniques.extend(report.unique_roots)
        total += len(report.records)
    elapsed = time.perf_counter() - start
    print(f"== {title}: {total} runs, {len(uniques)} unique roots, {elapsed:.1f} s")
    for unique in uniques:
        best = unique.best_record
        root = ", ".join(format_complex(complex(z)) for z in unique.root)
        print(
            f"  alpha={best.alpha:+.5f}  ({root})  residual={best.residual_norm:.3e} "
            f"n={best.iterations} hits={unique.multiplicity_count}"
        )


def main() -> None:
    show(
        "cosine-integral tail, k=50, x0=0.018",
        ci_series(50),
        np.array([0.018 + 0j]),
        [AlphaGrid(-1.2, 1.2, 0.002)],
    )
    show(
        "sine-integral tail, k=50, x0=1.85",
        si_series(50),
        np.array([1.85 + 0j]),
        [AlphaGrid(-0.9, 1.5, 0.002), AlphaGrid(-0.85, -0.80, 2e-5)],
    )
    show(
        "2-d exponential-sine system, x0=(0.86, 0.86)",
        example3_system(),
        np.array([0.86 + 0j, 0.86 + 0j]),
        [AlphaGrid(0.65, 1.3, 5e-4), AlphaGrid(0.725, 0.732, 1e-5)],
    )


if __name__ == "__main__":
    main()
