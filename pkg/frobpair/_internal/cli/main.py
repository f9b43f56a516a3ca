from __future__ import annotations

import argparse
import logging
import sys
from typing import TYPE_CHECKING, Callable

from frobpair._internal import __version__
from frobpair._internal.cli.commands import (
    EXIT_INPUT_ERROR,
    EXIT_RESOURCE_LIMIT,
    CurveCommand,
    ExamplesCommand,
    LevelCommand,
    RootsCommand,
    run_curve,
    run_examples,
    run_level,
    run_roots,
)
from frobpair._internal.errors import ResourceLimitError, UserError
from frobpair._internal.level import DEFAULT_E_MAX

if TYPE_CHECKING:
    from collections.abc import Sequence
    from typing import TextIO


def _variables(text: str) -> tuple[str, ...]:
    names = tuple(name.strip() for name in text.split(","))
    if not all(names):
        raise argparse.ArgumentTypeError(f"invalid variable list {text!r}")
    return names


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid coefficient vector {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobpair",
        description="levels of pairs of polynomials over F_p and cartier-manin matrices of"
        " hyperelliptic curves",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug output to stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    level = subparsers.add_parser("level", help="the level of the pair (num, den)")
    level.add_argument("--p", type=int, required=True)
    level.add_argument("--vars", type=_variables, required=True, help="e.g. x,y,z")
    level.add_argument("--num", required=True, help="the numerator g")
    level.add_argument("--den", required=True, help="the denominator f")
    level.add_argument("--max-e", type=_positive, default=DEFAULT_E_MAX, dest="e_max")
    level.add_argument("--certificate", action="store_true", help="print the operator found")
    level.add_argument("--json", action="store_true")

    roots = subparsers.add_parser("roots", help="the ideal of p^e-th roots of a polynomial")
    roots.add_argument("--p", type=int, required=True)
    roots.add_argument("--e", type=_positive, required=True)
    roots.add_argument("--vars", type=_variables, required=True)
    roots.add_argument("--poly", required=True)
    roots.add_argument("--json", action="store_true")

    curve = subparsers.add_parser("curve", help="cartier-manin data of y^2 = h(x)")
    curve.add_argument("--p", type=int, required=True)
    curve.add_argument("--h", required=True, help="h as a polynomial in x")
    curve.add_argument(
        "--stratified", type=_vector, metavar="A0,A1,...", help="test this coefficient vector"
    )
    curve.add_argument(
        "--level", action="store_true", help="also compute the level of the plane model"
    )
    curve.add_argument("--max-e", type=_positive, default=DEFAULT_E_MAX, dest="e_max")
    curve.add_argument("--json", action="store_true")

    examples = subparsers.add_parser("examples", help="replay the table of worked examples")
    examples.add_argument("--filter", help="only cases whose name contains this")
    examples.add_argument("--include-long", action="store_true")
    examples.add_argument("--jobs", type=_positive, help="worker processes (default: one per cpu)")
    examples.add_argument("--json", action="store_true")
    return parser


def _dispatch(arguments: argparse.Namespace, out: TextIO) -> int:
    runners: dict[str, Callable[[], int]] = {
        "level": lambda: run_level(
            LevelCommand(
                arguments.p,
                arguments.vars,
                arguments.num,
                arguments.den,
                arguments.e_max,
                arguments.certificate,
                arguments.json,
            ),
            out,
        ),
        "roots": lambda: run_roots(
            RootsCommand(arguments.p, arguments.e, arguments.vars, arguments.poly, arguments.json),
            out,
        ),
        "curve": lambda: run_curve(
            CurveCommand(
                arguments.p,
                arguments.h,
                arguments.stratified,
                arguments.level,
                arguments.e_max,
                arguments.json,
            ),
            out,
        ),
        "examples": lambda: run_examples(
            ExamplesCommand(
                arguments.filter, arguments.include_long, arguments.json, arguments.jobs
            ),
            out,
        ),
    }
    return runners[arguments.command]()


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    """entry point of the `frobpair` command. returns the exit code: 0 on success, 2 for bad
    input, 3 when a resource limit is hit and 4 when a regression case fails"""
    arguments = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if arguments.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return _dispatch(arguments, out or sys.stdout)
    except UserError as error:
        print(f"frobpair: error: {error}", file=sys.stderr)  # noqa: T201
        return EXIT_INPUT_ERROR
    except ResourceLimitError as error:
        print(f"frobpair: error: {error}", file=sys.stderr)  # noqa: T201
        return EXIT_RESOURCE_LIMIT
