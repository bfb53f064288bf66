"""
Command-line front end.
"""

import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from ncalg.errors import AlgebraError
from cli.commands import COMMANDS, CommandOptions, UsageError, run
from cli.expressions import ExpressionError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2

HELP = {
    "eval": "evaluate an expression",
    "derive": "apply the derivation X -> 0, Y -> f(X) to an expression",
    "expmap": "apply exp of the derivation to an expression",
    "tseq": "compute T_n for F = f(X)",
    "gens": "list the free generators of the constants up to --weight-max",
    "decode": "recover the bracketing of a generator from its leading monomial",
    "rewrite": "write a constant in the free generators",
    "kernel": "brute-force basis of the constants of weight --weight",
    "ak": "common kernel of the derivations Y -> X^k, X -> Y^k (k <= --m) up to degree --weight",
    "verify": "run the acceptance checks",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--f", help="f(X) as an expression in X, e.g. \"X^2 + 1\"")
    common.add_argument("--m", type=int, help="weight of Y / degree of f")
    common.add_argument("--expr", help="polynomial expression, or - to read it from stdin")
    common.add_argument("--word", help="word in the letters X and Y")
    common.add_argument("--weight", type=int, help="graded weight")
    common.add_argument("--weight-max", type=int, dest="weight_max", help="weight bound")
    common.add_argument("--n", type=int, help="index or iteration count")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--cap", type=int, help="iteration cap for nilpotency")
    common.add_argument("--format", choices=["text", "structured"], default="text")

    parser = argparse.ArgumentParser(prog="ncalg", description="Exact computations in the free algebra K<X,Y>")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name in COMMANDS:
        subparsers.add_parser(name, parents=[common], help=HELP[name])
    return parser


def main(argv: Optional[List[str]] = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE_ERROR if e.code else EXIT_OK

    values = {k: v for k, v in vars(args).items() if k != "command" and v is not None}
    if values.get("expr") == "-":
        values["expr"] = stdin.read()

    try:
        options = CommandOptions(**values)
        report = run(args.command, options)
    except ValidationError as e:
        print(f"error: invalid options: {e}", file=stderr)
        return EXIT_USAGE_ERROR
    except (UsageError, ExpressionError) as e:
        print(f"error: {e}", file=stderr)
        return EXIT_USAGE_ERROR
    except AlgebraError as e:
        logger.debug(f"{args.command} failed with {type(e).__name__}")
        print(f"error: {e}", file=stderr)
        return EXIT_DOMAIN_ERROR
    except ValueError as e:
        print(f"error: {e}", file=stderr)
        return EXIT_USAGE_ERROR

    print(report.render(options.format), file=stdout)
    if report.results.get("passed") is False:
        return EXIT_DOMAIN_ERROR
    return EXIT_OK
