"""Command-line front end.

Subcommands: ``capacity``, ``evolve``, ``sweep``, ``surface``, ``features``
and ``verify``. Exit codes: 0 success, 1 usage error, 2 verification
failure, 3 I/O error.
"""
import argparse
import json
import math
import sys
import warnings
from dataclasses import dataclass

import numpy as np

from .capacity import battery_capacity
from .channels import KINDS, ChannelScenario, run_scenario
from .model import DEFAULT_EPS, EnergyOrderingWarning, StateSpec, tripartite_hamiltonian
from .serialize import format_float, records_to_csv, records_to_jsonl
from .sweep import (
    DEFAULT_GRID_1D, DEFAULT_GRID_2D, FLAT_TOL, WINDOW, ZERO_TOL,
    feature_report, sweep_1d, sweep_2d,
)
from .verification import AGREEMENT_TOL, run_verification

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_IO = 3

COMMANDS = ("capacity", "evolve", "sweep", "surface", "features", "verify")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _unit(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"{value} is outside [0, 1]")
    return value


def _range(text):
    parts = text.split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}")
    lo, hi = (_unit(x) for x in parts)
    if lo > hi:
        raise argparse.ArgumentTypeError(f"lower bound {lo} exceeds upper bound {hi}")
    return lo, hi


def _eps(text):
    try:
        values = tuple(float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected three numbers A,B,C, got {text!r}") from None
    if len(values) != 3 or not all(math.isfinite(v) for v in values):
        raise argparse.ArgumentTypeError(f"expected three numbers A,B,C, got {text!r}")
    return values


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0.0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {value}")
    return value


def _common_flags(channel_required: bool) -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--state", choices=("ghz", "ghzlike"), default="ghz")
    parent.add_argument("--a", type=_unit, help="GHZ-like amplitude of |000>")
    parent.add_argument("--channel", choices=KINDS, required=channel_required)
    parent.add_argument("--side", choices=("first", "all", "tri"),
                        help="default: first for adc, all otherwise")
    parent.add_argument("--p", type=_unit, default=0.0)
    parent.add_argument("--q", type=_unit, help="tri-side strength on B")
    parent.add_argument("--gamma", type=_unit, help="tri-side strength on C")
    parent.add_argument("--n", type=_positive_int, default=1)
    parent.add_argument("--eps", type=_eps, default=DEFAULT_EPS, metavar="A,B,C")
    return parent


def _output_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--out", help="output path (default: stdout)")
    parent.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ghz-battery", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    out = _output_flags()

    sub.add_parser("capacity", parents=[_common_flags(False)],
                   help="capacity of the (optionally evolved) state")
    sub.add_parser("evolve", parents=[_common_flags(True)],
                   help="print the evolved density matrix")

    sweep = sub.add_parser("sweep", parents=[_common_flags(True), out],
                           help="capacity over a p grid")
    sweep.add_argument("--p-range", type=_range, default=(0.0, 1.0), metavar="LO:HI")
    sweep.add_argument("--grid", type=_positive_int, default=DEFAULT_GRID_1D)

    surface = sub.add_parser("surface", parents=[_common_flags(True), out],
                             help="tri-side capacity over a (p, q) grid")
    surface.add_argument("--p-range", type=_range, default=(0.0, 1.0), metavar="LO:HI")
    surface.add_argument("--q-range", type=_range, default=(0.0, 1.0), metavar="LO:HI")
    surface.add_argument("--grid", type=_positive_int, default=DEFAULT_GRID_2D)

    features = sub.add_parser("features", parents=[_common_flags(True)],
                              help="sudden death, frozen capacity and crossing of a sweep")
    features.add_argument("--p-range", type=_range, default=(0.0, 1.0), metavar="LO:HI")
    features.add_argument("--grid", type=_positive_int, default=DEFAULT_GRID_1D)
    features.add_argument("--zero-tol", type=_positive_float, default=ZERO_TOL)
    features.add_argument("--flat-tol", type=_positive_float, default=FLAT_TOL)
    features.add_argument("--out", help="output path (default: stdout)")

    verify = sub.add_parser("verify", help="compare every closed form with the numeric pipeline")
    verify.add_argument("--eps", type=_eps, default=DEFAULT_EPS, metavar="A,B,C")
    verify.add_argument("--grid", type=_positive_int, default=DEFAULT_GRID_1D,
                        help="1-D grid size; surfaces use 101x101")
    return parser


@dataclass
class CliConfig:
    command: str
    args: argparse.Namespace
    state: StateSpec | None = None
    scenario: ChannelScenario | None = None
    eps: tuple = DEFAULT_EPS


def parse_and_validate(argv) -> CliConfig:
    """Parse ``argv`` into a config; raises :class:`UsageError` on bad input."""
    args = build_parser().parse_args(list(argv))
    cfg = CliConfig(args.command, args, eps=tuple(args.eps))
    if args.command == "verify":
        if args.grid < 2:
            raise UsageError("--grid must be at least 2")
        return cfg

    if args.state == "ghzlike" and args.a is None:
        raise UsageError("--a is required with --state ghzlike")
    state = StateSpec(args.state, args.a) if args.state == "ghzlike" else StateSpec("ghz")
    cfg.state = state

    kind = args.channel
    side = args.side
    if side is None:
        side = "tri" if args.command == "surface" else ("first" if kind == "adc" else "all")
    if args.command == "surface" and side != "tri":
        raise UsageError("surface needs --side tri")
    if side == "tri":
        if args.gamma is None:
            raise UsageError("--gamma is required with --side tri")
        q = args.q if args.q is not None else 0.0
        gamma = args.gamma
    else:
        if args.q is not None or args.gamma is not None:
            raise UsageError(f"--q and --gamma only apply to --side tri, not --side {side}")
        q = gamma = None
    if getattr(args, "grid", 2) < 2:
        raise UsageError("--grid must be at least 2")

    if kind is not None:
        cfg.scenario = ChannelScenario(state, kind, side, args.p, q, gamma, args.n)
    return cfg


def _format_matrix(rho) -> str:
    def cell(z):
        if abs(z.imag) <= 1e-15:
            return format_float(z.real)
        return f"{format_float(z.real)}{'+' if z.imag >= 0 else '-'}{format_float(abs(z.imag))}j"

    return "".join(" ".join(cell(z) for z in row) + "\n" for row in np.asarray(rho))


def _emit(text: str, path: str | None, stdout) -> None:
    if path is None:
        stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def execute(cfg: CliConfig, stdout=None, stderr=None) -> int:
    """Run a parsed command, returning the process exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = cfg.args

    if cfg.command == "verify":
        results = run_verification(cfg.eps, grid_1d=args.grid)
        worst = 0.0
        for r in results:
            if r.skipped:
                stdout.write(f"{r.family.name:<42} skipped: no closed form for these energies\n")
                continue
            worst = max(worst, r.max_abs_err)
            status = "ok" if r.passed else "FAIL"
            stdout.write(f"{r.family.name:<42} points={r.points:<6} "
                         f"max_abs_err={r.max_abs_err:.3e} {status}\n")
        failed = sum(not r.passed for r in results if not r.skipped)
        skipped = sum(r.skipped for r in results)
        stdout.write(f"{len(results)} families, max_abs_err={worst:.3e}, "
                     f"tolerance={AGREEMENT_TOL:.0e}, failed={failed}, skipped={skipped}\n")
        return EXIT_VERIFY if failed else EXIT_OK

    s = cfg.scenario
    p_lo, p_hi = getattr(args, "p_range", (0.0, 1.0))
    if cfg.command == "capacity":
        h = tripartite_hamiltonian(*cfg.eps)
        rho = cfg.state.density_matrix() if s is None else run_scenario(s)
        stdout.write(format_float(battery_capacity(rho, h).capacity) + "\n")
    elif cfg.command == "evolve":
        stdout.write(_format_matrix(run_scenario(s)))
    elif cfg.command == "sweep":
        records = sweep_1d(s, p_lo, p_hi, args.grid, eps=cfg.eps)
        encode = records_to_csv if args.format == "csv" else records_to_jsonl
        _emit(encode(records), args.out, stdout)
    elif cfg.command == "surface":
        q_lo, q_hi = args.q_range
        records = sweep_2d(s, (p_lo, p_hi, args.grid), (q_lo, q_hi, args.grid), eps=cfg.eps)
        encode = records_to_csv if args.format == "csv" else records_to_jsonl
        _emit(encode(records), args.out, stdout)
    else:  # features
        records = sweep_1d(s, p_lo, p_hi, args.grid, eps=cfg.eps)
        window = min(WINDOW, len(records) - 1)
        report = feature_report(s, records, args.zero_tol, args.flat_tol, window, cfg.eps)
        _emit(json.dumps(report.as_dict(), sort_keys=True) + "\n", args.out, stdout)
    return EXIT_OK


def main(argv=None, stdout=None, stderr=None) -> int:
    stderr = stderr or sys.stderr
    argv = sys.argv[1:] if argv is None else argv
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", EnergyOrderingWarning)
            cfg = parse_and_validate(argv)
            tripartite_hamiltonian(*cfg.eps)
        for w in caught:
            stderr.write(f"warning: {w.message}\n")
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", EnergyOrderingWarning)
            return execute(cfg, stdout, stderr)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except ValueError as exc:
        stderr.write(f"ghz-battery: error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        stderr.write(f"ghz-battery: I/O error: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
