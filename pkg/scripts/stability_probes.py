#!/usr/bin/env python3
"""Residual blow-up around deep trivial zeros of zeta.

At x = -2m the functional-equation product vanishes exactly, but a 1e-12
nudge along the real axis already produces residuals that grow explosively
with m: the deep trivial zeros are numerically unstable targets.
"""

import numpy as np

from fracroots import stability_probe, zeta_functional_target


def main() -> None:
    target = zeta_functional_target(k=50)
    delta = 1e-12
    print(f"{'xi':>8} {'|f(xi-d)|':>14} {'|f(xi)|':>10} {'|f(xi+d)|':>14}")
    for xi in (-10.0, -20.0, -30.0, -40.0, -50.0, -60.0):
        probes = stability_probe(target, np.array([xi + 0j]), [-delta, 0.0, delta])
        left, center, right = (value for _, value in probes)
        print(f"{xi:>8.0f} {left:>14.4e} {center:>10.1e} {right:>14.4e}")


if __name__ == "__main__":
    main()
