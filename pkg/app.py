"""
Partition Playground - command line front end

Exposes the bijection between partitions with parts repeated at most 2k-1
times and partitions with initial k-repetitions, the strip decomposition,
k-modular diagrams and the q-series identity checks as subcommands.

Exit codes: 0 success / identity holds, 1 identity or predicate fails,
2 usage or parse error.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

# Import configuration and utilities from PartitionPlaygroundCode
from PartitionPlaygroundCode import config as playground_config
from PartitionPlaygroundCode.config import get_config
from PartitionPlaygroundCode.utils.errors import (
    CapExceeded,
    InvalidParameter,
    NotAPartition,
    PartitionPlaygroundError,
    PartitionSyntaxError,
)
from PartitionPlaygroundCode.utils.helpers import format_error_response, setup_logging
from PartitionPlaygroundCode.utils.report import ReportGenerator

# Import combinatorics modules from PartitionPlaygroundCode
from PartitionPlaygroundCode.combinatorics import bijection, identities, modular, selftest, strips
from PartitionPlaygroundCode.combinatorics.partition_core import format_partition, parse_partition

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

SCHEMA_VERSION = 1

# Errors caused by what the user typed rather than by the mathematics
USAGE_ERRORS = (PartitionSyntaxError, NotAPartition, InvalidParameter, CapExceeded)


@dataclass
class CommandResult:
    """Outcome of one subcommand: exit code, text payload and structured result."""

    exit_code: int = EXIT_OK
    text: str = ""
    result: Dict[str, Any] = field(default_factory=dict)
    error: Optional[PartitionPlaygroundError] = None


# Argument types


def positive_int(value: str) -> int:
    """
    argparse type for k and worker counts.

    Args:
        value: Raw command line text

    Returns:
        The parsed integer, at least 1
    """
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}")
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {number}")
    return number


def non_negative_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}")
    if number < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {number}")
    return number


# Subcommand handlers


def _trace_lines(t: bijection.BijectionTrace) -> List[str]:
    return [
        f"lambda: {format_partition(t.lambda_)}",
        f"lambda': {format_partition(t.lambda_conj)}",
        f"pi: {format_partition(t.pi)}",
        f"delta: {format_partition(t.delta)}",
        f"alpha: {format_partition(t.alpha)}",
        f"alpha': {format_partition(t.alpha_conj)}",
    ]


def _trace_dict(t: bijection.BijectionTrace) -> Dict[str, str]:
    return {
        "lambda": format_partition(t.lambda_),
        "lambda_conj": format_partition(t.lambda_conj),
        "pi": format_partition(t.pi),
        "delta": format_partition(t.delta),
        "alpha": format_partition(t.alpha),
        "alpha_conj": format_partition(t.alpha_conj),
    }


def cmd_map(args: argparse.Namespace) -> CommandResult:
    """Apply the forward map."""
    lam = parse_partition(args.input)
    image = bijection.forward(lam, args.k, strict=not args.lax)
    output = format_partition(image)

    result = {"output": output}
    lines = []
    if args.trace:
        chain = bijection.trace(lam, args.k)
        result["trace"] = _trace_dict(chain)
        lines.extend(_trace_lines(chain))
    else:
        lines.append(output)
    return CommandResult(EXIT_OK, "\n".join(lines), result)


def cmd_unmap(args: argparse.Namespace) -> CommandResult:
    """Apply the inverse map; --trace shows the forward chain of the preimage."""
    beta = parse_partition(args.input)
    preimage = bijection.inverse(beta, args.k, strict=not args.lax)
    output = format_partition(preimage)

    result = {"output": output}
    lines = []
    if args.trace:
        chain = bijection.trace(preimage, args.k)
        result["trace"] = _trace_dict(chain)
        lines.extend(reversed(_trace_lines(chain)))
    else:
        lines.append(output)
    return CommandResult(EXIT_OK, "\n".join(lines), result)


def cmd_decompose(args: argparse.Namespace) -> CommandResult:
    """
    Split a partition into its k-flat remainder pi and strip record delta.

    Args:
        args: Parsed namespace with ``k`` and ``input``

    Returns:
        CommandResult with labeled pi and delta lines
    """
    partition = parse_partition(args.input)
    decomposition = strips.decompose(partition, args.k)
    result = {
        "pi": format_partition(decomposition.pi),
        "delta": format_partition(decomposition.delta),
        "strip_lengths": list(decomposition.strip_lengths),
    }
    text = f"pi: {result['pi']}\ndelta: {result['delta']}"
    return CommandResult(EXIT_OK, text, result)


def cmd_diagram(args: argparse.Namespace) -> CommandResult:
    """Render the k-modular diagram of ``--input``."""
    partition = parse_partition(args.input)
    diagram = modular.k_modular_diagram(partition, args.k)
    text = modular.render_text(diagram)
    result = {
        "columns": [{"quotient": c.quotient, "residue": c.residue} for c in diagram.columns],
        "rendering": text,
    }
    return CommandResult(EXIT_OK, text, result)


def _verify_summary(report: identities.IdentityReport) -> str:
    params = f"k={report.k}" + (f", m={report.m}" if report.m is not None else "")
    names = ", ".join(report.forms)
    if report.holds:
        return (f"identity {report.identity} ({params}) holds up to q^{report.trunc}: "
                f"forms {names} agree; oracle checked to n={report.oracle_checked_up_to}")
    if not report.equal:
        mm = report.mismatch
        return (f"identity {report.identity} ({params}) FAILS: forms {mm['left_form']} and "
                f"{mm['right_form']} differ at q^{mm['exponent']} ({mm['left']} vs {mm['right']})")
    om = report.oracle_mismatch
    return (f"identity {report.identity} ({params}) FAILS: form {om['form']} has coefficient "
            f"{om['coefficient']} at q^{om['exponent']} but {om['class']} count is {om['count']}")


def cmd_verify(args: argparse.Namespace) -> CommandResult:
    if (args.identity == 2) != (args.m is not None):
        raise InvalidParameter("--m is required for identity 2 and only for identity 2")
    limit = get_config().default_limit if args.limit is None else args.limit

    report = identities.verify(args.identity, args.k, args.m, limit, oracle_cap=args.oracle_cap)
    lines = [_verify_summary(report)]

    if args.table:
        for name, series in report.series.items():
            lines.append(f"# {name}")
            lines.append(series.coefficient_table())

    if args.report is not None:
        generator = ReportGenerator(f"Identity {args.identity} verification")
        rows = [{"form": name, "expression": text} for name, text in report.forms.items()]
        generator.add_result(f"identity {args.identity}, k={args.k}, N={limit}", report.holds, rows,
                             details=_verify_summary(report))
        path = generator.save_report(args.report or None)
        lines.append(f"report: {path}")

    return CommandResult(EXIT_OK if report.holds else EXIT_FAILURE, "\n".join(lines), report.to_dict())


def cmd_count(args: argparse.Namespace) -> CommandResult:
    partition_class = identities.PartitionClass(args.partition_class)
    count = identities.count_class(args.n, args.k, partition_class, args.m)
    return CommandResult(EXIT_OK, str(count), {"count": count})


def cmd_selftest(args: argparse.Namespace) -> CommandResult:
    report = selftest.run_selftest(args.max_n, args.max_k, seed=args.seed, workers=args.workers,
                                   random_cases=args.random_cases)
    lines = report.tally_lines()
    for tally in report.checks.values():
        if tally.counterexample:
            ce = tally.counterexample
            lines.append(f"counterexample ({tally.name}): n={ce['n']} k={ce['k']} "
                         f"partition={ce['partition']} {ce['detail']}")
    lines.append("selftest passed" if report.passed else "selftest FAILED")

    if args.report is not None:
        generator = ReportGenerator("Selftest")
        for tally in report.checks.values():
            generator.add_result(tally.name, tally.failures == 0,
                                 [{"cases": tally.cases, "failures": tally.failures,
                                   "counterexample": tally.counterexample}])
        path = generator.save_report(args.report or None)
        lines.append(f"report: {path}")

    return CommandResult(EXIT_OK if report.passed else EXIT_FAILURE, "\n".join(lines), report.to_dict())


# Parser


def _add_partition_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--k", type=positive_int, required=True, help="modulus k >= 1")
    parser.add_argument("--input", required=True,
                        help='partition such as "29,27,25" or "5^9,4^4"; "" is the empty partition')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partition-playground",
        description="Bijection and q-series checks for partitions with initial k-repetitions.",
    )
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--config", default=None, help="settings file to load instead of settings.json")
    subparsers = parser.add_subparsers(dest="command", required=True)

    for name, handler, help_text in (
        ("map", cmd_map, "forward map: repetition-bounded -> initial k-repetitions"),
        ("unmap", cmd_unmap, "inverse map"),
    ):
        sub = subparsers.add_parser(name, help=help_text)
        _add_partition_arguments(sub)
        sub.add_argument("--lax", action="store_true", help="skip the strict domain check")
        sub.add_argument("--trace", action="store_true", help="print every intermediate partition")
        sub.add_argument("--json", action="store_true", help="emit one JSON document")
        sub.set_defaults(handler=handler)

    sub = subparsers.add_parser("decompose", help="split into k-flat pi and strip record delta")
    _add_partition_arguments(sub)
    sub.add_argument("--json", action="store_true", help="emit one JSON document")
    sub.set_defaults(handler=cmd_decompose)

    sub = subparsers.add_parser("diagram", help="render the k-modular diagram")
    _add_partition_arguments(sub)
    sub.add_argument("--json", action="store_true", help="emit one JSON document")
    sub.set_defaults(handler=cmd_diagram)

    sub = subparsers.add_parser("verify", help="check one of the three q-series identities")
    sub.add_argument("--identity", type=int, choices=(1, 2, 3), required=True)
    sub.add_argument("--k", type=positive_int, required=True)
    sub.add_argument("--m", type=non_negative_int, default=None, help="cap for identity 2")
    sub.add_argument("--limit", type=non_negative_int, default=None, help="truncation N")
    sub.add_argument("--oracle-cap", type=non_negative_int, default=None,
                     help="largest n cross-checked by enumeration")
    sub.add_argument("--table", action="store_true", help="print the coefficient table of every form")
    sub.add_argument("--report", nargs="?", const="", default=None, help="write an HTML report")
    sub.add_argument("--json", action="store_true", help="emit one JSON document")
    sub.set_defaults(handler=cmd_verify)

    sub = subparsers.add_parser("count", help="count partitions of n in a class")
    sub.add_argument("--n", type=non_negative_int, required=True)
    sub.add_argument("--k", type=positive_int, required=True)
    sub.add_argument("--class", dest="partition_class", required=True,
                     choices=[c.value for c in identities.PartitionClass])
    sub.add_argument("--m", type=non_negative_int, default=None)
    sub.add_argument("--json", action="store_true", help="emit one JSON document")
    sub.set_defaults(handler=cmd_count)

    sub = subparsers.add_parser("selftest", help="exhaustive roundtrip and oracle checks")
    sub.add_argument("--max-n", type=non_negative_int, default=20)
    sub.add_argument("--max-k", type=positive_int, default=3)
    sub.add_argument("--seed", type=int, default=None)
    sub.add_argument("--workers", type=positive_int, default=None)
    sub.add_argument("--random-cases", type=non_negative_int, default=None,
                     help="random roundtrip cases (default: config random_cases)")
    sub.add_argument("--report", nargs="?", const="", default=None, help="write an HTML report")
    sub.add_argument("--json", action="store_true", help="emit one JSON document")
    sub.set_defaults(handler=cmd_selftest)

    return parser


def _parameters(args: argparse.Namespace) -> Dict[str, Any]:
    hidden = {"handler", "json", "log_level", "config", "command"}
    return {key: value for key, value in vars(args).items() if key not in hidden}


def run_command(args: argparse.Namespace) -> CommandResult:
    """Run the selected handler, mapping library errors to exit codes."""
    try:
        return args.handler(args)
    except USAGE_ERRORS as e:
        return CommandResult(EXIT_USAGE, error=e)
    except PartitionPlaygroundError as e:
        return CommandResult(EXIT_FAILURE, error=e)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    if args.config:
        playground_config.use_config_file(args.config)
    config = get_config()
    setup_logging(args.log_level or config.log_level, config.log_file or None)

    logger.info(f"Running {args.command} with {_parameters(args)}")
    result = run_command(args)
    message = format_error_response(result.error) if result.error else ""

    if args.json:
        document = {
            "schema_version": SCHEMA_VERSION,
            "command": args.command,
            "parameters": _parameters(args),
            "exit_code": result.exit_code,
        }
        if result.error:
            document["error"] = {"type": type(result.error).__name__, "message": str(result.error)}
        else:
            document["result"] = result.result
        print(json.dumps(document, indent=2, sort_keys=True))
    elif not result.error:
        print(result.text)

    if message:
        print(message, file=sys.stderr)
    return result.exit_code


if __name__ == '__main__':
    sys.exit(main())
