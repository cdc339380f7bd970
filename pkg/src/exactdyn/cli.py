"""The ``exactdyn`` command-line tool.

Every subcommand is a thin adapter over one library call; payload values
are the library outputs rendered exactly.  Output is a line-oriented
``key=value`` document by default, with row records (orbits, tables)
emitted one per line, tab-separated; ``--format structured`` switches to
a single JSON document.  All numbers are exact rational text; pass
``--decimals K`` for an extra truncated-decimal rendering of each
rational.  Runs are deterministic for a fixed argv and ``--seed``.

Exit codes: 0 ok, 1 usage error, 2 domain error (also a failing
``check``), 3 fuel exhausted, 4 invalid code.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import baker, checks, dissipative, grid, murec, readout, realfn
from .encoding import Encoding, decode_rational, encode_rational, translate
from .errors import (
    ArityMismatchError,
    DomainError,
    IllFormedError,
    InvalidStateError,
    NotACodeError,
    ProgramParseError,
)
from .rational import format_rational, parse_rational, truncate_decimal

STATUS_OK = "ok"
STATUS_USAGE = "usage_error"
STATUS_DOMAIN = "domain_error"
STATUS_DIVERGED = "diverged"
STATUS_NOT_A_CODE = "not_a_code"

EXIT_CODES = {
    STATUS_OK: 0,
    STATUS_USAGE: 1,
    STATUS_DOMAIN: 2,
    STATUS_DIVERGED: 3,
    STATUS_NOT_A_CODE: 4,
}


@dataclass
class CommandResult:
    status: str
    payload: dict = field(default_factory=dict)
    rows: list[tuple] = field(default_factory=list)
    message: str = ""
    fmt: str = "plain"
    decimals: Optional[int] = None

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would sys.exit(2)
        raise _UsageError(message)


def _fraction_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _encoding_arg(text: str) -> Encoding:
    try:
        return Encoding(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown encoding {text!r} (canonical or alternative)"
        ) from None


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> _Parser:
    parser = _Parser(
        prog="exactdyn",
        description=(
            "Exact-arithmetic dynamics workbench: encodings of rationals, "
            "recursive-function programs, and the folded doubling map that "
            "relates an initial state to a final state in exact, finite-grid, "
            "and measured form."
        ),
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for all sampling (default 0)")
    parser.add_argument(
        "--fuel", type=int, default=10**6, help="evaluation step budget (default 10^6)"
    )
    parser.add_argument(
        "--format", choices=("plain", "structured"), default="plain", dest="fmt",
        help="plain key=value lines or one JSON document",
    )
    parser.add_argument(
        "--decimals", type=_nonneg_int, default=None, metavar="K",
        help="add truncated K-digit decimal renderings of rationals",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("encode", help="number a rational")
    p.add_argument("--rational", required=True, type=_fraction_arg)
    p.add_argument("--encoding", type=_encoding_arg, default=Encoding.CANONICAL)

    p = sub.add_parser("decode", help="recover the rational behind a code")
    p.add_argument("--code", required=True, type=int)
    p.add_argument("--encoding", type=_encoding_arg, default=Encoding.CANONICAL)

    p = sub.add_parser("translate", help="convert a code between numberings")
    p.add_argument("--code", required=True, type=int)
    p.add_argument("--from", required=True, type=_encoding_arg, dest="source")
    p.add_argument("--to", required=True, type=_encoding_arg, dest="target")

    p = sub.add_parser("murec-eval", help="run a recursive-function program")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--program", help="path to a program file")
    src.add_argument("--builtin", choices=murec.BUILTIN_PROGRAMS)
    p.add_argument("args", nargs="*", type=int, help="natural-number arguments")

    p = sub.add_parser("baker-step", help="one exact step of the folded doubling map")
    p.add_argument("--x", required=True, type=_fraction_arg)

    p = sub.add_parser("baker-orbit", help="exact orbit rows (k, position)")
    p.add_argument("--x", required=True, type=_fraction_arg)
    p.add_argument("--steps", required=True, type=int)

    p = sub.add_parser("baker-approx", help="n-step value via the accuracy rule")
    p.add_argument("--x", required=True, type=_fraction_arg)
    p.add_argument("--steps", required=True, type=int)
    p.add_argument("--epsilon", required=True, type=_fraction_arg)

    p = sub.add_parser("sensitivity", help="build a sensitivity witness")
    p.add_argument("--eta", required=True, type=_fraction_arg)
    p.add_argument("--a", required=True, type=_fraction_arg)
    p.add_argument("--ap", required=True, type=_fraction_arg)

    p = sub.add_parser("grid-sim", help="finite-grid orbit with cycle detection")
    p.add_argument("--resolution", required=True, type=int)
    p.add_argument("--index", required=True, type=int)

    p = sub.add_parser("grid-table", help="complete finite-grid transition table")
    p.add_argument("--resolution", required=True, type=int)

    p = sub.add_parser("measured-succ", help="readouts that may follow a readout")
    p.add_argument("--d", required=True, type=int, help="device digits")
    p.add_argument("--readout", required=True)

    p = sub.add_parser("measured-reach", help="readouts reachable in n steps")
    p.add_argument("--d", required=True, type=int)
    p.add_argument("--readout", required=True)
    p.add_argument("--steps", required=True, type=int)

    sub.add_parser("limit-demo", help="discontinuity witnesses and decay table")

    sub.add_parser("check", help="run every module's property suite")

    return parser


def _cmd_encode(ns: argparse.Namespace, res: CommandResult) -> None:
    res.payload["code"] = encode_rational(ns.rational, ns.encoding)


def _cmd_decode(ns: argparse.Namespace, res: CommandResult) -> None:
    res.payload["rational"] = decode_rational(ns.code, ns.encoding)


def _cmd_translate(ns: argparse.Namespace, res: CommandResult) -> None:
    res.payload["code"] = translate(ns.code, ns.source, ns.target)


def _cmd_murec_eval(ns: argparse.Namespace, res: CommandResult) -> None:
    if ns.program is not None:
        term = murec.load_program(ns.program)
        res.payload["program"] = ns.program
    else:
        term = murec.builtin_program(ns.builtin)
        res.payload["program"] = ns.builtin
    res.payload["args"] = ",".join(str(a) for a in ns.args)
    outcome = murec.evaluate(term, tuple(ns.args), ns.fuel)
    if isinstance(outcome, murec.Diverged):
        res.status = STATUS_DIVERGED
        res.payload["outcome"] = "diverged"
        res.payload["fuel_spent"] = outcome.fuel_spent
    else:
        res.payload["value"] = outcome.value


def _cmd_baker_step(ns: argparse.Namespace, res: CommandResult) -> None:
    res.payload["value"] = baker.step(ns.x)


def _cmd_baker_orbit(ns: argparse.Namespace, res: CommandResult) -> None:
    if res.decimals is None:
        res.decimals = 6  # orbit rows always carry a decimal column
    res.payload["x0"] = ns.x
    res.payload["steps"] = ns.steps
    res.rows = list(enumerate(baker.orbit(ns.x, ns.steps)))


def _cmd_baker_approx(ns: argparse.Namespace, res: CommandResult) -> None:
    fn = baker.as_real_fn(ns.steps)
    res.payload["steps"] = ns.steps
    res.payload["epsilon"] = ns.epsilon
    res.payload["input_accuracy"] = fn.modulus(ns.epsilon)
    res.payload["value"] = realfn.evaluate(fn, realfn.from_rational(ns.x), ns.epsilon)


def _cmd_sensitivity(ns: argparse.Namespace, res: CommandResult) -> None:
    w = baker.sensitivity_witness(ns.eta, ns.a, ns.ap)
    res.payload["x0"] = w.start_a
    res.payload["x0p"] = w.start_b
    res.payload["n"] = w.steps


def _cmd_grid_sim(ns: argparse.Namespace, res: CommandResult) -> None:
    state = grid.GridState(ns.resolution, ns.index)
    orbit, entry, length = grid.orbit_with_cycle(state)
    res.payload["resolution"] = ns.resolution
    res.payload["cycle_entry"] = entry
    res.payload["cycle_length"] = length
    res.rows = [
        (k, i, Fraction(i, ns.resolution)) for k, i in enumerate(orbit)
    ]


def _cmd_grid_table(ns: argparse.Namespace, res: CommandResult) -> None:
    res.payload["resolution"] = ns.resolution
    res.rows = grid.table(ns.resolution)


def _cmd_measured_succ(ns: argparse.Namespace, res: CommandResult) -> None:
    m = readout.parse_readout(ns.readout, ns.d)
    res.payload["readout"] = m.text
    res.payload["successors"] = ",".join(readout.successors(m).texts())


def _cmd_measured_reach(ns: argparse.Namespace, res: CommandResult) -> None:
    m = readout.parse_readout(ns.readout, ns.d)
    res.payload["readout"] = m.text
    res.payload["steps"] = ns.steps
    res.payload["reachable"] = ",".join(readout.reach(m, ns.steps).texts())


def _cmd_limit_demo(ns: argparse.Namespace, res: CommandResult) -> None:
    if res.decimals is None:
        res.decimals = 9  # exact states grow fast; keep the table readable
    start = Fraction(9, 10)
    threshold = Fraction(1, 1000)
    res.payload["map"] = "squaring on [0,1]"
    res.payload["start"] = start
    res.payload["threshold"] = threshold
    res.payload["first_below_threshold"] = dissipative.first_date_below(start, threshold, 8)
    for n in range(9):
        res.rows.append(("state", n, dissipative.iterate_approx(start, n, Fraction(1, 10**9))))
    for j in range(1, 7):
        w = dissipative.discontinuity_witness(Fraction(1, 10**j))
        res.rows.append(("witness", w.eta, w.x, w.x_alt, w.gap))


def _cmd_check(ns: argparse.Namespace, res: CommandResult) -> None:
    results = checks.run_all(seed=ns.seed, fuel=ns.fuel)
    failed = [r for r in results if not r.passed]
    for r in results:
        if r.passed:
            res.rows.append(("PASS", r.name))
        else:
            res.rows.append(("FAIL", r.name, r.detail))
    res.payload["passed"] = len(results) - len(failed)
    res.payload["failed"] = len(failed)
    if failed:
        res.status = STATUS_DOMAIN


_HANDLERS: dict[str, Callable[[argparse.Namespace, CommandResult], None]] = {
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "translate": _cmd_translate,
    "murec-eval": _cmd_murec_eval,
    "baker-step": _cmd_baker_step,
    "baker-orbit": _cmd_baker_orbit,
    "baker-approx": _cmd_baker_approx,
    "sensitivity": _cmd_sensitivity,
    "grid-sim": _cmd_grid_sim,
    "grid-table": _cmd_grid_table,
    "measured-succ": _cmd_measured_succ,
    "measured-reach": _cmd_measured_reach,
    "limit-demo": _cmd_limit_demo,
    "check": _cmd_check,
}


def run(argv: Sequence[str]) -> CommandResult:
    """Dispatch argv to a subcommand and return its result (never raises)."""
    parser = build_parser()
    try:
        ns = parser.parse_args(list(argv))
    except _UsageError as exc:
        # parse-time failures render plain: the chosen format never took effect
        return CommandResult(status=STATUS_USAGE, message=str(exc))
    result = CommandResult(status=STATUS_OK, fmt=ns.fmt, decimals=ns.decimals)

    def failed(status: str, message: str) -> CommandResult:
        return CommandResult(status=status, message=message, fmt=ns.fmt, decimals=ns.decimals)

    if ns.command is None:
        return failed(STATUS_USAGE, "a subcommand is required (see --help)")
    try:
        _HANDLERS[ns.command](ns, result)
        return result
    except _UsageError as exc:
        return failed(STATUS_USAGE, str(exc))
    except (ProgramParseError, IllFormedError, ArityMismatchError, OSError, ValueError) as exc:
        return failed(STATUS_USAGE, str(exc))
    except RecursionError:
        return failed(STATUS_USAGE, "program term is nested too deeply")
    except (DomainError, InvalidStateError) as exc:
        return failed(STATUS_DOMAIN, str(exc))
    except NotACodeError as exc:
        return failed(STATUS_NOT_A_CODE, str(exc))


def _render_cell(value: object, decimals: Optional[int]) -> list[str]:
    if isinstance(value, Fraction):
        cells = [format_rational(value)]
        if decimals is not None:
            cells.append(truncate_decimal(value, decimals))
        return cells
    return [str(value)]


def render_plain(result: CommandResult) -> str:
    lines = []
    for key, value in result.payload.items():
        if isinstance(value, Fraction):
            lines.append(f"{key}={format_rational(value)}")
            if result.decimals is not None:
                lines.append(f"{key}_dec={truncate_decimal(value, result.decimals)}")
        else:
            lines.append(f"{key}={value}")
    for row in result.rows:
        cells: list[str] = []
        for value in row:
            cells.extend(_render_cell(value, result.decimals))
        lines.append("\t".join(cells))
    return "\n".join(lines) + ("\n" if lines else "")


def render_structured(result: CommandResult) -> str:
    doc: dict = {"status": result.status}
    if result.message:
        doc["message"] = result.message
    payload: dict = {}
    for key, value in result.payload.items():
        if isinstance(value, Fraction):
            payload[key] = format_rational(value)
            if result.decimals is not None:
                payload[f"{key}_dec"] = truncate_decimal(value, result.decimals)
        else:
            payload[key] = value
    doc["payload"] = payload
    if result.rows:
        doc["rows"] = [
            [cell for value in row for cell in _render_cell(value, result.decimals)]
            for row in result.rows
        ]
    return json.dumps(doc, indent=2) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    if result.fmt == "structured":
        sys.stdout.write(render_structured(result))
    else:
        if result.message:
            sys.stderr.write(f"error: {result.message}\n")
        sys.stdout.write(render_plain(result))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
