"""``neutro``: compute, classify, sweep and check from the command line.

Exit codes: 0 success, 1 bad arguments or bad data, 2 I/O failure.
Results go to stdout (or ``-o``); diagnostics go to stderr only.
"""
from __future__ import annotations

import argparse
import logging
import sys

from .core import DEFAULT_TOL, DomainError
from .io import (
    FORMATS,
    GridSpec,
    ParseError,
    compute_rows,
    emit_classification,
    emit_results,
    parse_records,
    render_grid,
    resolve_quantity,
)

log = logging.getLogger("neutro")

EXIT_OK, EXIT_DATA, EXIT_IO = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; 2 is reserved for I/O failures here
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write_output(path: str, data: bytes) -> None:
    if path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
        return
    with open(path, "wb") as fh:
        fh.write(data)


def _load(args):
    parsed = parse_records(_read_input(args.input), args.format, clamp=args.clamp)
    if parsed.clamped:
        log.warning("clamped %d record(s) into [0, 1]", parsed.clamped)
    return parsed.records


def cmd_compute(args) -> int:
    rows = compute_rows(_load(args), args.tolerance)
    _write_output(args.output, emit_results(rows, args.format))
    return EXIT_OK


def cmd_classify(args) -> int:
    records = _load(args)
    _write_output(args.output, emit_classification(records, args.format, args.tolerance))
    return EXIT_OK


def cmd_sweep(args) -> int:
    try:
        quantity = resolve_quantity(args.quantity, args.variant)
        spec = GridSpec(omega=args.omega, resolution=args.resolution, quantity=quantity)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    table, image = render_grid(spec)
    _write_output(args.out_table, table)
    if args.out_image:
        _write_output(args.out_image, image)
    log.info("sweep %s at omega=%g, %dx%d", quantity, spec.omega, spec.resolution, spec.resolution)
    return EXIT_OK


def cmd_check(args) -> int:
    from .checks import run_checks

    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    if args.tolerance < 0:
        raise UsageError("--tolerance must be nonnegative")
    report = run_checks(args.samples, args.seed, args.tolerance)
    sys.stdout.write(report.summary())
    sys.stdout.flush()
    return EXIT_OK if report.ok else EXIT_DATA


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="neutro", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_table_args(p):
        p.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin")
        p.add_argument("--format", choices=FORMATS, default="csv")
        p.add_argument("--clamp", action="store_true", help="clamp out-of-range values into [0, 1]")
        p.add_argument("-o", "--output", default="-", help="output file, '-' for stdout")
        p.add_argument("--tolerance", type=float, default=DEFAULT_TOL,
                       help="classification tolerance (default %(default)g)")

    p = sub.add_parser("compute", help="entropies and hepta decompositions per record")
    add_table_args(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("classify", help="information kind per record")
    add_table_args(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sweep", help="tabulate one quantity over the (mu, nu) square")
    p.add_argument("--omega", type=float, default=0.0)
    p.add_argument("--resolution", type=int, default=101)
    p.add_argument("--quantity", default="entropy_c",
                   help="entropy, t, f, a, u, c, n, s (with --variant) or a full name like n_c")
    p.add_argument("--variant", choices=("c", "r"), default=None)
    p.add_argument("--out-table", default="-", help="grid CSV path, '-' for stdout")
    p.add_argument("--out-image", default=None, help="PPM (P6) heatmap path")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("check", help="run the invariant suite on seeded random samples")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, format="neutro: %(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        log.setLevel(logging.INFO if args.verbose else logging.WARNING)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_DATA
    except (ParseError, DomainError) as exc:
        print(f"neutro: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"neutro: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
