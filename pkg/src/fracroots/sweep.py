"""Sweep of the solver over a grid of fractional orders.

One initial condition, many orders: different orders land on different
roots.  Converged roots are deduplicated by greedy clustering; failures stay
in the report as data.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .solver import FpnConfig, RootRecord, SolveStatus, as_complex_vector, fpn_solve
from .targets import TargetFunction

__all__ = ["AlphaGrid", "UniqueRoot", "SweepReport", "run_sweep", "stability_probe"]


@dataclass(frozen=True)
class AlphaGrid:
    """Evenly spaced fractional orders in [lo, hi], minus an exclusion band
    around every integer."""

    lo: float
    hi: float
    step: float
    integer_exclusion: float = 0.01

    def __post_init__(self) -> None:
        if not (-2.0 <= self.lo < self.hi <= 2.0):
            raise DomainError(
                f"grid must satisfy -2 <= lo < hi <= 2, got lo={self.lo!r}, hi={self.hi!r}"
            )
        if not self.step > 0.0:
            raise DomainError(f"grid step must be positive, got {self.step!r}")
        if not self.integer_exclusion >= 1e-9:
            raise DomainError("integer exclusion must be at least 1e-9")
        if not self.values():
            raise DomainError("grid is empty after integer exclusion")

    def values(self) -> list[float]:
        count = int(math.floor((self.hi - self.lo) / self.step + 1e-9))
        out = []
        for k in range(count + 1):
            v = self.lo + k * self.step
            if abs(v - round(v)) >= self.integer_exclusion:
                out.append(v)
        return out


@dataclass(frozen=True)
class UniqueRoot:
    """One deduplicated root: the cluster representative, how many runs hit
    it, and the member record with the smallest residual."""

    root: np.ndarray
    multiplicity_count: int
    best_record: RootRecord


@dataclass(frozen=True)
class SweepReport:
    records: list[RootRecord]
    unique_roots: list[UniqueRoot]


def _cluster_converged(records: list[RootRecord], cluster_tol: float) -> list[UniqueRoot]:
    reps: list[np.ndarray] = []
    members: list[list[RootRecord]] = []
    for rec in records:
        if rec.status is not SolveStatus.Converged:
            continue
        best_j = -1
        best_dist = math.inf
        for j, rep in enumerate(reps):
            d = float(np.linalg.norm(rec.root - rep))
            if d < best_dist:
                best_dist = d
                best_j = j
        if best_j >= 0 and best_dist < cluster_tol:
            members[best_j].append(rec)
        else:
            reps.append(rec.root)
            members.append([rec])
    out = []
    for rep, group in zip(reps, members):
        best = min(group, key=lambda r: r.residual_norm)
        out.append(UniqueRoot(root=rep, multiplicity_count=len(group), best_record=best))
    return out


def run_sweep(
    f: TargetFunction,
    x0,
    grid: AlphaGrid,
    base_config: FpnConfig,
    cluster_tol: float = 1e-4,
) -> SweepReport:
    """Solve once per grid order from the same initial condition.

    Per-run failures are recorded, never raised; the unique-root list keeps
    the first-seen representative of each cluster and its best record.
    """
    if not cluster_tol > 0.0:
        raise DomainError(f"cluster_tol must be positive, got {cluster_tol!r}")
    x0v = as_complex_vector(x0)
    records = []
    for alpha in grid.values():
        config = dataclasses.replace(base_config, alpha=alpha)
        record, _ = fpn_solve(f, x0v, config)
        records.append(record)
    return SweepReport(records=records, unique_roots=_cluster_converged(records, cluster_tol))


def stability_probe(
    f: TargetFunction, xi, deltas
) -> list[tuple[float, float]]:
    """Residual norms at xi shifted along the real axis by each delta."""
    xiv = as_complex_vector(xi)
    out = []
    for d in deltas:
        shifted = xiv + complex(float(d), 0.0)
        value = float(np.linalg.norm(f.evaluate(shifted)))
        out.append((float(d), value))
    return out
