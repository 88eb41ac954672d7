"""Command-line interface.

    eacap table [--etas a,b,c] [--out PATH] [--precision N]
    eacap curve --min X --max Y --steps N --columns LIST [--out PATH] [--precision N]
    eacap point --eta X --w w1,w2,w3
    eacap verify

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from dataclasses import dataclass, field

import numpy as np

from .capacity import DEFAULT_CONFIG, OptimizerConfig, capacity_record, mutual_information
from .channel import make_amplitude_damping
from .qmat import BlochVector, bloch_to_density
from .verify import run_verification

STDOUT = "-"
RECORD_COLUMNS = ("w3_opt", "capacity", "i_center", "gap")
DEFAULT_ETAS = tuple(round(0.04 * k, 2) for k in range(1, 25))


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class TableRequest:
    eta_values: tuple = DEFAULT_ETAS
    output_path: str = STDOUT
    precision: int = 9

    def __post_init__(self):
        object.__setattr__(self, "eta_values", tuple(sorted(float(e) for e in self.eta_values)))
        _check_etas(self.eta_values)
        _check_precision(self.precision)


@dataclass(frozen=True)
class CurveRequest:
    eta_min: float
    eta_max: float
    steps: int
    columns: tuple = field(default=RECORD_COLUMNS)
    output_path: str = STDOUT
    precision: int = 9

    def __post_init__(self):
        if not 0.0 <= self.eta_min < self.eta_max <= 1.0:
            raise UsageError(f"need 0 <= min < max <= 1, got [{self.eta_min}, {self.eta_max}]")
        if self.steps < 2:
            raise UsageError("steps must be >= 2")
        cols = tuple(self.columns)
        bad = [c for c in cols if c not in RECORD_COLUMNS]
        if bad or not cols or len(set(cols)) != len(cols):
            raise UsageError(f"columns must be distinct names from {', '.join(RECORD_COLUMNS)}; got {cols}")
        object.__setattr__(self, "columns", cols)
        _check_precision(self.precision)

    def etas(self) -> list[float]:
        return [float(x) for x in np.linspace(self.eta_min, self.eta_max, self.steps)]


def _check_etas(etas):
    if not etas:
        raise UsageError("no eta values given")
    for eta in etas:
        if not 0.0 <= eta <= 1.0:
            raise UsageError(f"eta must lie in [0, 1], got {eta}")


def _check_precision(precision):
    if not 1 <= precision <= 15:
        raise UsageError(f"precision must be in [1, 15], got {precision}")


def format_eta(eta: float) -> str:
    return f"{eta:.15g}"


def format_value(x: float, precision: int) -> str:
    s = f"{x:.{precision}f}"
    if float(s) == 0.0:
        s = f"{0.0:.{precision}f}"
    return s


def _csv(header, rows) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(r) for r in rows)
    return "\n".join(lines) + "\n"


def cmd_table(req: TableRequest, cfg: OptimizerConfig = DEFAULT_CONFIG) -> str:
    rows = []
    for eta in req.eta_values:
        rec = capacity_record(eta, cfg)
        rows.append([format_eta(eta)] + [format_value(getattr(rec, c), req.precision) for c in RECORD_COLUMNS])
    return _csv(("eta",) + RECORD_COLUMNS, rows)


def cmd_curve(req: CurveRequest, cfg: OptimizerConfig = DEFAULT_CONFIG) -> str:
    rows = []
    for eta in req.etas():
        rec = capacity_record(eta, cfg)
        rows.append([format_eta(eta)] + [format_value(getattr(rec, c), req.precision) for c in req.columns])
    return _csv(("eta",) + req.columns, rows)


def cmd_point(eta: float, w) -> str:
    if not 0.0 <= eta <= 1.0:
        raise UsageError(f"eta must lie in [0, 1], got {eta}")
    try:
        w = BlochVector.of(w)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    br = mutual_information(make_amplitude_damping(eta), bloch_to_density(w))
    return (
        f"eta = {format_eta(eta)}\n"
        f"w = ({w.w1:.9f}, {w.w2:.9f}, {w.w3:.9f})\n"
        f"S(rho) = {format_value(br.s_in, 9)}\n"
        f"S(E(rho)) = {format_value(br.s_out, 9)}\n"
        f"S(E,rho) = {format_value(br.s_exchange, 9)}\n"
        f"I = {format_value(br.i, 9)}\n"
    )


def cmd_verify(eig_tol: float | None = None) -> tuple[int, str]:
    results = run_verification() if eig_tol is None else run_verification(eig_tol=eig_tol)
    lines = [f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}" for r in results]
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} groups passed")
    return (0 if failed == 0 else 1), "\n".join(lines) + "\n"


def write_output(text: str, path: str) -> None:
    """Write to standard output, or atomically to ``path`` (temp file + rename)."""
    if path == STDOUT:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".eacap-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _bloch(text: str) -> tuple[float, float, float]:
    values = _float_list(text)
    if len(values) != 3:
        raise argparse.ArgumentTypeError(f"expected w1,w2,w3, got {text!r}")
    return tuple(values)


def _columns(text: str) -> tuple[str, ...]:
    return tuple(c.strip() for c in text.split(",") if c.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eacap",
        description="Entanglement-assisted classical capacity of the amplitude damping channel.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="capacity table as CSV")
    p.add_argument("--etas", type=_float_list, default=list(DEFAULT_ETAS), help="comma-separated eta values")
    p.add_argument("--out", default=STDOUT, help="output file (default: stdout)")
    p.add_argument("--precision", type=int, default=9)

    p = sub.add_parser("curve", help="dense eta sweep as CSV")
    p.add_argument("--min", dest="eta_min", type=float, required=True)
    p.add_argument("--max", dest="eta_max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--columns", type=_columns, default=RECORD_COLUMNS, help=", ".join(RECORD_COLUMNS))
    p.add_argument("--out", default=STDOUT)
    p.add_argument("--precision", type=int, default=9)

    p = sub.add_parser("point", help="entropy breakdown at one state")
    p.add_argument("--eta", type=float, required=True)
    p.add_argument("--w", type=_bloch, required=True, help="w1,w2,w3 (use --w=-0.1,0,0 for a leading minus)")

    sub.add_parser("verify", help="run the self-check suite")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "table":
            req = TableRequest(tuple(args.etas), args.out, args.precision)
            write_output(cmd_table(req), req.output_path)
        elif args.command == "curve":
            req = CurveRequest(args.eta_min, args.eta_max, args.steps, args.columns, args.out, args.precision)
            write_output(cmd_curve(req), req.output_path)
        elif args.command == "point":
            sys.stdout.write(cmd_point(args.eta, args.w))
        else:
            status, report = cmd_verify()
            sys.stdout.write(report)
            return status
    except UsageError as exc:
        parser.error(str(exc))
    except OSError as exc:
        print(f"eacap: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
