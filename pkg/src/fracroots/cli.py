"""Command-line front end.

Subcommands: solve (single order), sweep (order grid), stability (residual
probes around a point), validate (fractional-derivative oracle suites).
Results print as a table or go to csv/jsonl with full-precision fields.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Sequence, TextIO

import numpy as np

from .errors import DomainError, EvaluationError, QuadratureError
from .solver import FpnConfig, RootRecord, SolveStatus, fpn_solve
from .sweep import AlphaGrid, SweepReport, run_sweep, stability_probe
from .targets import (
    REGISTRY_NAMES,
    make_target,
    parse_complex_vector,
    zeta_functional_target,
)
from .validation import SUITES, run_suites

__all__ = [
    "main",
    "entrypoint",
    "parse_grid",
    "load_manifest",
    "format_complex",
    "write_records_csv",
    "read_records_csv",
    "write_records_jsonl",
    "read_records_jsonl",
]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_CONVERGED = 2
EXIT_IO = 3

_CONFIG_KEYS = ("epsilon", "tol_step", "tol_residual", "max_iter", "round_m")
_MANIFEST_KEYS = (
    "target",
    "k",
    "coeffs",
    "x0",
    "alpha",
    "grid",
    "cluster_tol",
    "output",
    "format",
    "xi",
    "delta",
    "suite",
    "trace",
) + _CONFIG_KEYS


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1, not argparse's default 2
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # accept values like "-1.2:0.35:0.005" or "-0.15,1.14" without
        # forcing --flag=value; no option name starts with a digit
        self._negative_number_matcher = re.compile(r"^-(\d|\.\d)")

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_grid(text: str) -> AlphaGrid:
    """Parse 'lo:hi:step' into an AlphaGrid."""
    parts = text.split(":")
    if len(parts) != 3:
        raise DomainError(f"grid must look like lo:hi:step, got {text!r}")
    try:
        lo, hi, step = (float(p) for p in parts)
    except ValueError:
        raise DomainError(f"grid must be numeric lo:hi:step, got {text!r}") from None
    return AlphaGrid(lo=lo, hi=hi, step=step)


def format_complex(z: complex, digits: int = 8) -> str:
    if z.imag == 0.0:
        return f"{z.real:.{digits}f}"
    return f"{z.real:.{digits}f}{z.imag:+.{digits}f}i"


def load_manifest(path: str | Path) -> dict[str, str]:
    """Flat key=value manifest; keys match the CLI flag names."""
    entries: dict[str, str] = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise DomainError(f"manifest line {raw!r} is not key=value")
        key = key.strip()
        if key not in _MANIFEST_KEYS:
            raise DomainError(f"unknown manifest key {key!r}")
        entries[key] = value.strip()
    return entries


# --- record serialization ---------------------------------------------------

_BASE_FIELDS = ("alpha", "status", "iterations", "step_norm", "residual_norm")


def _record_fields(dimension: int) -> list[str]:
    fields = list(_BASE_FIELDS)
    for k in range(dimension):
        fields.append(f"root_re_{k}")
        fields.append(f"root_im_{k}")
    return fields


def _record_values(rec: RootRecord) -> dict[str, object]:
    row: dict[str, object] = {
        "alpha": rec.alpha,
        "status": rec.status.name,
        "iterations": rec.iterations,
        "step_norm": rec.step_norm,
        "residual_norm": rec.residual_norm,
    }
    for k in range(rec.root.shape[0]):
        z = complex(rec.root[k])
        row[f"root_re_{k}"] = z.real
        row[f"root_im_{k}"] = z.imag
    return row


def _record_from_values(row: dict[str, object]) -> RootRecord:
    dim = sum(1 for key in row if key.startswith("root_re_"))
    root = np.array(
        [
            complex(float(row[f"root_re_{k}"]), float(row[f"root_im_{k}"]))
            for k in range(dim)
        ],
        dtype=np.complex128,
    )
    return RootRecord(
        alpha=float(row["alpha"]),
        root=root,
        step_norm=float(row["step_norm"]),
        residual_norm=float(row["residual_norm"]),
        iterations=int(row["iterations"]),
        status=SolveStatus[str(row["status"])],
    )


def write_records_csv(fh: TextIO, records: Sequence[RootRecord]) -> None:
    if not records:
        fh.write(",".join(_BASE_FIELDS) + "\n")
        return
    fields = _record_fields(records[0].root.shape[0])
    fh.write(",".join(fields) + "\n")
    for rec in records:
        row = _record_values(rec)
        fh.write(",".join(_csv_cell(row[f]) for f in fields) + "\n")


def _csv_cell(value: object) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(value)


def read_records_csv(fh: TextIO) -> list[RootRecord]:
    lines = [ln for ln in fh.read().splitlines() if ln.strip()]
    if not lines:
        return []
    fields = lines[0].split(",")
    out = []
    for line in lines[1:]:
        row = dict(zip(fields, line.split(",")))
        out.append(_record_from_values(row))
    return out


def write_records_jsonl(fh: TextIO, records: Sequence[RootRecord]) -> None:
    for rec in records:
        fh.write(json.dumps(_record_values(rec)) + "\n")


def read_records_jsonl(fh: TextIO) -> list[RootRecord]:
    return [
        _record_from_values(json.loads(line))
        for line in fh.read().splitlines()
        if line.strip()
    ]


# --- output helpers ----------------------------------------------------------

def _print_record(rec: RootRecord, out: TextIO) -> None:
    root = ", ".join(format_complex(complex(z)) for z in rec.root)
    out.write(
        f"alpha={rec.alpha:.5f}  status={rec.status.name}  n={rec.iterations}  "
        f"root=({root})  step={rec.step_norm:.5e}  residual={rec.residual_norm:.5e}\n"
    )


def _sweep_table(report: SweepReport, out: TextIO) -> None:
    out.write("alpha      x_n                                  step        residual    n\n")
    for unique in report.unique_roots:
        best = unique.best_record
        root = ", ".join(format_complex(complex(z)) for z in unique.root)
        out.write(
            f"{best.alpha:<10.5f} {root:<36} {best.step_norm:<11.3e} "
            f"{best.residual_norm:<11.3e} {best.iterations}\n"
        )
    converged = sum(1 for r in report.records if r.status is SolveStatus.Converged)
    out.write(
        f"# runs={len(report.records)} converged={converged} "
        f"unique_roots={len(report.unique_roots)}\n"
    )


def _emit_records(records: Sequence[RootRecord], fmt: str, output: str | None) -> None:
    def write_to(fh: TextIO) -> None:
        if fmt == "csv":
            write_records_csv(fh, records)
        else:
            write_records_jsonl(fh, records)

    if output:
        with open(output, "w") as fh:
            write_to(fh)
    else:
        write_to(sys.stdout)


# --- argument plumbing -------------------------------------------------------

def _add_common_target_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--target", help=f"target name, one of: {', '.join(REGISTRY_NAMES)}")
    p.add_argument("--k", type=int, help="series truncation (default 50)")
    p.add_argument("--coeffs", help="poly coefficients, comma-separated complex literals")
    p.add_argument("--x0", help="initial condition, comma-separated complex literals")
    p.add_argument("--epsilon", type=float, help="regularizer (default 1e-3)")
    p.add_argument("--tol-step", dest="tol_step", type=float, help="step tolerance (default 1e-6)")
    p.add_argument(
        "--tol-residual", dest="tol_residual", type=float, help="residual tolerance (default 1e-6)"
    )
    p.add_argument("--max-iter", dest="max_iter", type=int, help="iteration cap (default 500)")
    p.add_argument(
        "--round-m", dest="round_m", type=int, help="rounding exponent m (default 5)"
    )
    p.add_argument("--manifest", help="flat key=value manifest file; flags override it")
    p.add_argument("--output", help="write results to this path instead of stdout")
    p.add_argument(
        "--format",
        dest="format",
        choices=("table", "csv", "jsonl"),
        help="output format (default table)",
    )


def _merged(args: argparse.Namespace, manifest: dict[str, str], key: str, default=None):
    value = getattr(args, key, None)
    if value is not None:
        return value
    if key in manifest:
        return manifest[key]
    return default


def _build_config(args, manifest, alpha: float) -> FpnConfig:
    return FpnConfig(
        alpha=alpha,
        epsilon=float(_merged(args, manifest, "epsilon", 1e-3)),
        tol_step=float(_merged(args, manifest, "tol_step", 1e-6)),
        tol_residual=float(_merged(args, manifest, "tol_residual", 1e-6)),
        max_iter=int(_merged(args, manifest, "max_iter", 500)),
        round_exponent_m=int(_merged(args, manifest, "round_m", 5)),
    )


def _build_target(args, manifest):
    name = _merged(args, manifest, "target")
    if name is None:
        raise DomainError("--target is required")
    return make_target(
        str(name),
        k=int(_merged(args, manifest, "k", 50)),
        coeffs=_merged(args, manifest, "coeffs"),
    )


def _load_manifest_arg(args) -> dict[str, str]:
    path = getattr(args, "manifest", None)
    if path is None:
        return {}
    return load_manifest(path)


# --- commands ----------------------------------------------------------------

def cmd_solve(args: argparse.Namespace) -> int:
    manifest = _load_manifest_arg(args)
    target = _build_target(args, manifest)
    x0_text = _merged(args, manifest, "x0")
    if x0_text is None:
        raise DomainError("--x0 is required")
    alpha_text = _merged(args, manifest, "alpha")
    if alpha_text is None:
        raise DomainError("--alpha is required")
    x0 = parse_complex_vector(str(x0_text))
    config = _build_config(args, manifest, float(alpha_text))
    record, trace = fpn_solve(target, x0, config)
    _print_record(record, sys.stdout)
    if _merged(args, manifest, "trace") in (True, "true", "1", "yes"):
        for i, (step, res) in enumerate(zip(trace.step_norms, trace.residual_norms), start=1):
            point = ", ".join(format_complex(complex(z)) for z in trace.iterates[i])
            sys.stdout.write(f"  i={i:<4d} x=({point})  step={step:.5e}  residual={res:.5e}\n")
    fmt = _merged(args, manifest, "format", "table")
    output = _merged(args, manifest, "output")
    if fmt in ("csv", "jsonl"):
        _emit_records([record], fmt, output)
    return EXIT_OK if record.status is SolveStatus.Converged else EXIT_NOT_CONVERGED


def cmd_sweep(args: argparse.Namespace) -> int:
    manifest = _load_manifest_arg(args)
    target = _build_target(args, manifest)
    x0_text = _merged(args, manifest, "x0")
    if x0_text is None:
        raise DomainError("--x0 is required")
    grid_text = _merged(args, manifest, "grid")
    if grid_text is None:
        raise DomainError("--grid is required")
    x0 = parse_complex_vector(str(x0_text))
    grid = parse_grid(str(grid_text))
    base_alpha = grid.values()[0]
    config = _build_config(args, manifest, base_alpha)
    cluster_tol = float(_merged(args, manifest, "cluster_tol", 1e-4))
    report = run_sweep(target, x0, grid, config, cluster_tol=cluster_tol)
    fmt = str(_merged(args, manifest, "format", "table"))
    output = _merged(args, manifest, "output")
    if fmt == "table":
        if output:
            with open(output, "w") as fh:
                _sweep_table(report, fh)
        else:
            _sweep_table(report, sys.stdout)
    else:
        _emit_records(report.records, fmt, output)
    return EXIT_OK


def cmd_stability(args: argparse.Namespace) -> int:
    manifest = _load_manifest_arg(args)
    xi_text = _merged(args, manifest, "xi")
    if xi_text is None:
        raise DomainError("--xi is required")
    xi = parse_complex_vector(str(xi_text))
    delta = float(_merged(args, manifest, "delta", 1e-12))
    name = _merged(args, manifest, "target", "zeta-func")
    k = int(_merged(args, manifest, "k", 50))
    if name == "zeta-func":
        target = zeta_functional_target(k=k)
    else:
        target = make_target(str(name), k=k, coeffs=_merged(args, manifest, "coeffs"))
    deltas = sorted({-delta, 0.0, delta})
    for d, value in stability_probe(target, xi, deltas):
        sys.stdout.write(f"delta={d:+.3e}  |f|={value:.6e}\n")
    return EXIT_OK


def cmd_validate(args: argparse.Namespace) -> int:
    names = [args.suite] if args.suite else None
    if names and names[0] not in SUITES:
        raise DomainError(f"unknown suite {names[0]!r}; known: {', '.join(SUITES)}")
    results = run_suites(names)
    all_ok = True
    for name, ok, detail in results:
        sys.stdout.write(f"{name}: {'PASS' if ok else 'FAIL'} ({detail})\n")
        all_ok = all_ok and ok
    return EXIT_OK if all_ok else EXIT_NOT_CONVERGED


def _build_parser() -> _Parser:
    parser = _Parser(prog="fracroots", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_solve = sub.add_parser("solve", help="run a single solve at one fractional order")
    _add_common_target_args(p_solve)
    p_solve.add_argument("--alpha", help="fractional order")
    p_solve.add_argument("--trace", action="store_const", const=True, help="print iterates")
    p_solve.set_defaults(func=cmd_solve)

    p_sweep = sub.add_parser("sweep", help="sweep the solver over an order grid")
    _add_common_target_args(p_sweep)
    p_sweep.add_argument("--grid", help="order grid lo:hi:step")
    p_sweep.add_argument(
        "--cluster-tol", dest="cluster_tol", type=float, help="root dedup tolerance (default 1e-4)"
    )
    p_sweep.set_defaults(func=cmd_sweep)

    p_stab = sub.add_parser("stability", help="probe residuals around a point")
    p_stab.add_argument("--xi", help="probe point, comma-separated complex literals")
    p_stab.add_argument("--delta", type=float, help="real probe offset (default 1e-12)")
    p_stab.add_argument("--target", help="target name or zeta-func (default)")
    p_stab.add_argument("--k", type=int, help="series truncation for zeta evaluators")
    p_stab.add_argument("--coeffs", help="poly coefficients when --target poly")
    p_stab.add_argument("--manifest", help="flat key=value manifest file")
    p_stab.set_defaults(func=cmd_stability)

    p_val = sub.add_parser("validate", help="run the fractional-derivative oracle suites")
    p_val.add_argument("--suite", help=f"run one suite, one of: {', '.join(SUITES)}")
    p_val.set_defaults(func=cmd_validate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        sys.stderr.write(f"fracroots: i/o error: {exc}\n")
        return EXIT_IO
    except (DomainError, EvaluationError, QuadratureError, OverflowError) as exc:
        sys.stderr.write(f"fracroots: error: {exc}\n")
        return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
