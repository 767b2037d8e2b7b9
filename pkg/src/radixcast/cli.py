"""Command-line front end.

    radixcast convert <numeral> --to R [--from R] [--digits N | --exact]
    radixcast explain <numeral> --to R [--from R] [--digits N | --exact]
    radixcast table [--max N]
    radixcast route <from> <to>

Exit codes: 0 success, 1 parse or usage error, 2 fraction policy error.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import os
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from .exact import DEFAULT_CYCLE_CAP, CycleCapExceeded, FractionPolicy
from .explain import DEFAULT_WIDTH, render_trace, table_text
from .numeral import MAX_RADIX, MIN_RADIX, NumeralError, format_numeral, parse
from .routing import convert, plan_route

WIDTH_ENV = "RADIXCAST_WIDTH"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_POLICY = 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    command: str
    numeral: str | None = None
    from_radix: int | None = None
    to_radix: int | None = None
    policy: FractionPolicy = FractionPolicy()
    table_max: int = 15
    trace_width: int = DEFAULT_WIDTH


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _radix(text: str) -> int:
    try:
        r = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"radix must be an integer, got {text!r}") from None
    if not MIN_RADIX <= r <= MAX_RADIX:
        raise argparse.ArgumentTypeError(f"radix {r} outside [{MIN_RADIX}, {MAX_RADIX}]")
    return r


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="radixcast", description="Exact positional numeral conversion.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_text in (("convert", "convert a numeral"), ("explain", "convert and show every step")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("numeral", help='numeral literal, or "-" to read it from stdin')
        p.add_argument("--to", dest="to_radix", type=_radix, required=True)
        p.add_argument("--from", dest="from_radix", type=_radix)
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--digits", type=_positive, help="truncate fractions to N digits")
        mode.add_argument("--exact", action="store_true", help="detect repetends (default)")
        p.add_argument("--cycle-cap", type=_positive, default=DEFAULT_CYCLE_CAP)
        if name == "explain":
            p.add_argument("--width", type=int, help=f"trace width (default ${WIDTH_ENV} or {DEFAULT_WIDTH})")

    p = sub.add_parser("table", help="print the equivalence table")
    p.add_argument("--max", dest="table_max", type=_positive, default=15)

    p = sub.add_parser("route", help="print the conversion legs between two radices")
    p.add_argument("source", type=_radix)
    p.add_argument("target", type=_radix)
    return parser


def _trace_width(flag: int | None) -> int:
    if flag is not None:
        width = flag
    else:
        env = os.environ.get(WIDTH_ENV)
        if env is None:
            return DEFAULT_WIDTH
        try:
            width = int(env)
        except ValueError:
            raise UsageError(f"{WIDTH_ENV} must be an integer, got {env!r}") from None
    if width < 40:
        raise UsageError(f"trace width must be at least 40, got {width}")
    return width


def _config(args: argparse.Namespace, stdin: TextIO | None) -> CliConfig:
    if args.command == "table":
        return CliConfig("table", table_max=args.table_max)
    if args.command == "route":
        return CliConfig("route", from_radix=args.source, to_radix=args.target)
    literal = args.numeral
    if literal == "-":
        literal = (stdin or sys.stdin).read()
    if args.digits is not None:
        policy = FractionPolicy.truncate(args.digits)
    else:
        policy = FractionPolicy.exact(args.cycle_cap)
    width = _trace_width(args.width) if args.command == "explain" else DEFAULT_WIDTH
    return CliConfig(args.command, literal, args.from_radix, args.to_radix, policy, trace_width=width)


def execute(config: CliConfig) -> str:
    """Output text for a parsed command, ending in exactly one newline."""
    if config.command == "table":
        return table_text(config.table_max)
    if config.command == "route":
        route = plan_route(config.from_radix, config.to_radix)
        if not route.legs:
            return f"{config.from_radix} -> {config.to_radix} identity\n"
        return "".join(f"{leg}\n" for leg in route.legs)
    n = parse(config.numeral, config.from_radix)
    explain = config.command == "explain"
    out, _, trace = convert(n, config.to_radix, config.policy, trace=explain)
    text = format_numeral(out, "tagged")
    if explain:
        return f"{text}\n\n{render_trace(trace, config.trace_width)}\n"
    return text + "\n"


def run(argv: Sequence[str], stdin: TextIO | None = None, stderr: TextIO | None = None) -> tuple[str, int]:
    """Run one command; returns ``(stdout text, exit code)``.

    Error messages go to ``stderr`` and never to the returned stdout.
    """
    err = stderr if stderr is not None else sys.stderr
    captured = io.StringIO()
    try:
        with contextlib.redirect_stdout(captured):
            args = build_parser().parse_args(list(argv))
        return execute(_config(args, stdin)), EXIT_OK
    except SystemExit as exc:
        # --help
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        return (captured.getvalue(), EXIT_OK) if code == 0 else ("", EXIT_USAGE)
    except (UsageError, NumeralError) as exc:
        print(f"radixcast: error: {exc}", file=err)
        return "", EXIT_USAGE
    except CycleCapExceeded as exc:
        print(f"radixcast: error: {exc}; use --digits N or raise --cycle-cap", file=err)
        return "", EXIT_POLICY


def main(argv: Sequence[str] | None = None) -> int:
    out, code = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
