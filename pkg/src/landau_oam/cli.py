"""Command-line front end: ``landau-oam {table1,verify,classical,spectrum}``.

Exit status is 0 iff every record of the report passes, 1 on a failed
check and 2 on invalid arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classical import InitialConditions
from .model import DomainError
from .report import (
    TRAJECTORY_COLUMNS,
    RunConfig,
    cmd_classical,
    cmd_spectrum,
    cmd_table1,
    cmd_verify,
    trajectory_csv,
    trajectory_rows,
)


def _global_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("physical and numerical settings")
    g.add_argument("--B", type=float, default=1.0, help="field strength (default 1)")
    g.add_argument("--e", type=float, default=1.0, help="charge magnitude (default 1)")
    g.add_argument("--mass", type=float, default=1.0, help="electron mass (default 1)")
    g.add_argument("--nmax", type=int, default=5, help="largest Landau index (default 5)")
    g.add_argument("--mmin", type=int, default=-5, help="smallest magnetic quantum number (default -5)")
    g.add_argument("--cutoff", type=int, default=20, help="Fock cutoff per mode (default 20)")
    g.add_argument("--margin", type=int, default=4, help="interior margin below the cutoff (default 4)")
    g.add_argument("--quad-order", type=int, default=64, help="Gauss-Laguerre order (default 64)")
    g.add_argument("--tol", type=float, default=None, help="override every check tolerance")
    g.add_argument("--format", choices=("csv", "json"), default=None,
                   help="output format (default json for reports, csv for trajectories)")
    g.add_argument("--out", type=Path, default=None, help="output path (default stdout)")
    g.add_argument("--parallel", action="store_true", help="sweep (n, m) states concurrently")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="landau-oam",
        description="Cross-checks of canonical, mechanical and pseudo OAM in Landau levels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _global_flags()
    sub.add_parser("table1", parents=[common], help="six OAM expectation values per state")
    sub.add_parser("verify", parents=[common], help="operator identities and route agreement")
    sub.add_parser("spectrum", parents=[common], help="Landau levels from three routes")
    cl = sub.add_parser("classical", parents=[common], help="cyclotron orbit and classical OAMs")
    cl.add_argument("--x0", type=float, default=0.0)
    cl.add_argument("--y0", type=float, default=-1.0)
    cl.add_argument("--vx0", type=float, default=1.0)
    cl.add_argument("--vy0", type=float, default=0.0)
    cl.add_argument("--samples", type=int, default=1000, help="time samples per period (default 1000)")
    cl.add_argument("--dt", type=float, default=None, help="RK4 step (default period/1000)")
    return parser


def run_config_from_args(args: argparse.Namespace) -> RunConfig:
    kwargs = dict(
        B=args.B, e=args.e, mass=args.mass, nmax=args.nmax, mmin=args.mmin,
        cutoff=args.cutoff, margin=args.margin, quad_order=args.quad_order,
        tol=args.tol, parallel=args.parallel,
    )
    if args.command == "classical":
        kwargs.update(x0=args.x0, y0=args.y0, vx0=args.vx0, vy0=args.vy0,
                      samples=args.samples, dt=args.dt)
    return RunConfig(**kwargs)


def _emit(text: str, path: Path | None, stream=None):
    if path is None:
        (stream or sys.stdout).write(text)
    else:
        path.write_text(text)


def _sibling(path: Path, suffix: str) -> Path:
    return path.with_name(path.stem + suffix)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        run = run_config_from_args(args)
        if args.command == "classical":
            return _classical(run, args)
        command = {"table1": cmd_table1, "verify": cmd_verify, "spectrum": cmd_spectrum}
        report = command[args.command](run)
    except DomainError as exc:
        print(f"landau-oam: error: {exc}", file=sys.stderr)
        return 2
    text = report.to_csv() if args.format == "csv" else report.to_json()
    _emit(text, args.out)
    for rec in report.failures:
        print(f"FAIL {rec.check} {rec.inputs} residual={rec.residual} "
              f"tol={rec.tolerance}{' ' + rec.error if rec.error else ''}", file=sys.stderr)
    return 0 if report.passed else 1


def _classical(run: RunConfig, args) -> int:
    report, closed, rk4 = cmd_classical(run)
    ic_config = run.config
    ic = InitialConditions(run.x0, run.y0, run.vx0, run.vy0)
    if args.format == "json":
        doc = report.to_dict()
        doc["trajectory"] = {
            "columns": list(TRAJECTORY_COLUMNS),
            "closed_form": trajectory_rows(closed, ic, ic_config).tolist(),
            "rk4": trajectory_rows(rk4, ic, ic_config).tolist(),
        }
        _emit(json.dumps(doc, indent=2, sort_keys=True) + "\n", args.out)
    else:
        _emit(trajectory_csv(closed, ic, ic_config), args.out)
        if args.out is not None:
            _emit(trajectory_csv(rk4, ic, ic_config), _sibling(args.out, ".rk4.csv"))
            _emit(report.to_json(), _sibling(args.out, ".summary.json"))
        else:
            _emit(report.to_json(), None, sys.stderr)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
