"""Command-line front end.

Subcommands:
    point    evaluate one channel at one parameter point
    figure   write the data files behind one of the bundled figure presets
    verify   run the acceptance/verification suite

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain
error (the message names the offending parameter), 4 I/O error.
"""

from __future__ import annotations

import argparse
import math
import sys

from .errors import UnruhLabError
from .output import CSV_COLUMNS, OutputFormat, record_fields, write_figure_files
from .states import BobRegion, ChannelFamily, gamma_from_acceleration
from .sweep import FigurePreset, evaluate_point, figure_preset, run_sweep
from .verify import run_checks

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unruh-lab",
        description=(
            "Fermionic communication channels between an inertial sender and a "
            "uniformly accelerated receiver: single-point evaluation, figure "
            "datasets, and the verification suite."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    point = sub.add_parser("point", help="evaluate one channel at one grid point")
    point.add_argument(
        "--family",
        required=True,
        choices=[f.value for f in ChannelFamily],
        help="channel family",
    )
    point.add_argument(
        "--region",
        required=True,
        choices=[r.value for r in BobRegion],
        help="which Rindler wedge the receiver occupies",
    )
    gamma_group = point.add_mutually_exclusive_group(required=True)
    gamma_group.add_argument("--gamma", type=float, help="acceleration angle in radians")
    gamma_group.add_argument(
        "--gamma-degrees", type=float, help="acceleration angle in degrees"
    )
    gamma_group.add_argument(
        "--acceleration",
        nargs=3,
        type=float,
        metavar=("OMEGA", "A", "C"),
        help="mode frequency, proper acceleration, and light speed",
    )
    point.add_argument("--qr", type=float, required=True, help="right-wedge weight in [0, 1]")
    point.add_argument(
        "--alpha", type=float, default=math.pi / 4, help="state angle in radians"
    )
    point.add_argument("--f", type=float, default=None, help="Werner fidelity in [0, 1]")
    point.add_argument(
        "--precision", type=int, default=12, help="digits after the decimal point"
    )

    figure = sub.add_parser("figure", help="write one figure preset's data files")
    figure.add_argument("which", choices=[f.value for f in FigurePreset])
    figure.add_argument("--out-dir", default="figure_data", help="output directory")
    figure.add_argument(
        "--format", default="csv", choices=("csv", "json", "plot"), help="file format"
    )
    figure.add_argument(
        "--precision", type=int, default=12, help="digits after the decimal point"
    )
    figure.add_argument(
        "--threads", type=int, default=None, help="worker threads (0 = auto)"
    )

    verify = sub.add_parser("verify", help="run the acceptance/verification suite")
    verify.add_argument(
        "--quick",
        action="store_true",
        help="skip the determinism/runtime check (the slowest one)",
    )
    verify.add_argument(
        "--threads", type=int, default=None, help="worker threads (0 = auto)"
    )
    return parser


def _cmd_point(args: argparse.Namespace) -> int:
    gamma = args.gamma
    if args.gamma_degrees is not None:
        gamma = math.radians(args.gamma_degrees)
    if args.acceleration is not None:
        omega, acceleration, light_speed = args.acceleration
        gamma = gamma_from_acceleration(omega, acceleration, light_speed)
    record = evaluate_point(
        ChannelFamily(args.family),
        BobRegion(args.region),
        gamma,
        args.qr,
        args.alpha,
        args.f,
        with_ssa=True,
    )
    fmt = OutputFormat("csv", args.precision)
    for column, value in zip(CSV_COLUMNS, record_fields(record, fmt.precision)):
        print(f"{column}={value}")
    return EXIT_OK


def _cmd_figure(args: argparse.Namespace) -> int:
    fmt = OutputFormat(args.format, args.precision)
    figure = FigurePreset(args.which)
    spec = figure_preset(figure)
    records = run_sweep(spec, threads=args.threads)
    written = write_figure_files(figure, records, spec, args.out_dir, fmt)
    for path in written:
        print(path)
    print(f"wrote {len(written)} files to {args.out_dir}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    results = run_checks(
        threads=args.threads, include_determinism=not args.quick
    )
    failed = 0
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        if result.informational:
            status = "NOTE"
        elif not result.passed:
            failed += 1
        print(f"{status} {result.name}: {result.detail}")
    total = sum(1 for r in results if not r.informational)
    print(f"{total - failed} of {total} checks passed")
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "point":
            return _cmd_point(args)
        if args.command == "figure":
            return _cmd_figure(args)
        return _cmd_verify(args)
    except UnruhLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
