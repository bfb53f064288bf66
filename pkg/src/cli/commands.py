"""
Command dispatcher shared by the command line and the HTTP API.
"""

import logging
from typing import Callable, Dict, Literal, Optional, Tuple

from pydantic import BaseModel, Field

from ncalg.commpoly import abelianize
from ncalg.ncpoly import NCPoly, format_rational
from ncalg.words import graded_weight
from deriv.derivation import DEFAULT_CAP, NEG_INFINITY, Derivation, delta_degree, derive, exp
from constants.decoder import decode
from constants.generators import enumerate_generators
from constants.operators import t_sequence
from constants.rewrite import rewrite_in_generators
from oracle.ak import ak_basis
from oracle.kernels import MAX_WEIGHT, check_weight, graded_kernel_basis, iterated_kernel_dimension
from cli.expressions import parse_polynomial
from cli.report import Report, poly_to_json
from cli.verify import run_checks

logger = logging.getLogger(__name__)

MAX_CAP = 1024


class UsageError(ValueError):
    """Raised for missing or inconsistent command options."""


class CommandOptions(BaseModel):
    f: Optional[str] = None
    m: Optional[int] = Field(default=None, ge=0, le=MAX_WEIGHT)
    expr: Optional[str] = None
    word: Optional[str] = None
    weight: Optional[int] = Field(default=None, ge=0, le=MAX_WEIGHT)
    weight_max: Optional[int] = Field(default=None, ge=0, le=MAX_WEIGHT)
    n: Optional[int] = Field(default=None, ge=1, le=MAX_WEIGHT)
    seed: int = 0
    cap: int = Field(default=DEFAULT_CAP, ge=1, le=MAX_CAP)
    format: Literal["text", "structured"] = "text"


def _require(options: CommandOptions, *names: str) -> None:
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(options, name) is None]
    if missing:
        raise UsageError(f"missing required option(s): {', '.join(missing)}")


def _f_and_m(options: CommandOptions) -> Tuple[NCPoly, int]:
    """F from --f and m = deg F, cross-checked against --m when both are given."""
    _require(options, "f")
    F = parse_polynomial(options.f)
    if not F or not F.depends_only_on_x():
        raise UsageError(f"--f must be a nonzero polynomial in X, got {F}")
    degree = len(F.x_coefficients()) - 1
    if options.m is not None and options.m != degree:
        raise UsageError(f"--m {options.m} does not match deg f = {degree}")
    return F, degree


def _expr(options: CommandOptions, F: Optional[NCPoly]) -> NCPoly:
    _require(options, "expr")
    return parse_polynomial(options.expr, F)


def _optional_f(options: CommandOptions) -> Optional[NCPoly]:
    return _f_and_m(options)[0] if options.f is not None else None


def _format_degree(d) -> str:
    return "-inf" if d == NEG_INFINITY else str(d)


# ---------- Handlers ----------

def cmd_eval(options: CommandOptions, report: Report) -> None:
    p = _expr(options, _optional_f(options))
    report.results["value"] = poly_to_json(p)
    report.results["in_commutator_ideal"] = not abelianize(p)
    report.lines.append(f"value: {p}")
    report.lines.append(f"abelianization: {abelianize(p)}")
    if p:
        report.results["leading_monomial"] = p.leading_monomial() or "1"
        report.lines.append(f"leading monomial: {p.leading_monomial() or '1'}")


def cmd_derive(options: CommandOptions, report: Report) -> None:
    F, _ = _f_and_m(options)
    D = Derivation.from_polynomial(F)
    p = _expr(options, F)
    value = derive(D, p)
    degree = _format_degree(delta_degree(D, p, options.cap))
    report.results["value"] = poly_to_json(value)
    report.results["delta_degree"] = degree
    report.lines.append(f"value: {value}")
    report.lines.append(f"delta degree of input: {degree}")


def cmd_expmap(options: CommandOptions, report: Report) -> None:
    F, _ = _f_and_m(options)
    value = exp(Derivation.from_polynomial(F), _expr(options, F), options.cap)
    report.results["value"] = poly_to_json(value)
    report.lines.append(f"value: {value}")


def cmd_tseq(options: CommandOptions, report: Report) -> None:
    F, _ = _f_and_m(options)
    _require(options, "n")
    value = t_sequence(options.n, F)
    report.results["value"] = poly_to_json(value)
    report.results["leading_monomial"] = value.leading_monomial()
    report.lines.append(f"T_{options.n} = {value}")
    report.lines.append(f"leading monomial: {value.leading_monomial()}")


def cmd_gens(options: CommandOptions, report: Report) -> None:
    F, m = _f_and_m(options)
    _require(options, "weight_max")
    table = enumerate_generators(m, F, options.weight_max)
    report.results["generators"] = [
        {"symbol": e.symbol, "weight": e.weight, "leading_monomial": e.lm, "value": poly_to_json(e.value)}
        for e in table.entries
    ]
    report.results["count"] = len(table.entries)
    for e in table.entries:
        report.lines.append(f"{e.weight:>3}  {e.symbol:<24} {e.lm}")
    report.lines.append(f"count: {len(table.entries)}")


def cmd_decode(options: CommandOptions, report: Report) -> None:
    m = _f_and_m(options)[1] if options.f is not None else options.m
    _require(options, "word")
    if m is None:
        raise UsageError("missing required option(s): --m or --f")
    bracketed = decode(options.word, m)
    report.results["bracketed"] = str(bracketed)
    report.results["weight"] = graded_weight(options.word, m)
    report.lines.append(f"bracketed: {bracketed}")


def cmd_rewrite(options: CommandOptions, report: Report) -> None:
    F, m = _f_and_m(options)
    p = _expr(options, F)
    bound = options.weight_max if options.weight_max is not None else (p.max_weight(m) if p else 0)
    check_weight(bound)
    table = enumerate_generators(m, F, bound)
    formal = rewrite_in_generators(p, table)
    report.results["terms"] = [
        {"factors": [str(bw) for bw in factors] or ["1"], "coeff": format_rational(c)}
        for factors, c in formal.items()
    ]
    report.lines.append(f"rewritten: {formal}")


def cmd_kernel(options: CommandOptions, report: Report) -> None:
    F, m = _f_and_m(options)
    _require(options, "weight")
    D = Derivation.from_polynomial(F)
    kernel = graded_kernel_basis(D, m, options.weight)
    report.results["dimension"] = kernel.dimension
    report.results["basis"] = [poly_to_json(p) for p in kernel.basis]
    report.lines.append(f"dimension: {kernel.dimension}")
    report.lines += [f"  {p}" for p in kernel.basis]
    if options.n is not None:
        dimension = iterated_kernel_dimension(D, options.n, m, options.weight)
        report.results["iterated_dimension"] = dimension
        report.lines.append(f"dimension of kernel of D^{options.n}: {dimension}")


def cmd_ak(options: CommandOptions, report: Report) -> None:
    _require(options, "weight")
    M = options.m if options.m is not None else options.weight
    basis = ak_basis(M, options.weight)
    report.results["dimension"] = len(basis)
    report.results["basis"] = [poly_to_json(p) for p in basis]
    report.lines.append(f"dimension: {len(basis)}")
    report.lines += [f"  {p}" for p in basis]


def cmd_verify(options: CommandOptions, report: Report) -> None:
    weight_max = options.weight_max if options.weight_max is not None else MAX_WEIGHT
    checks = run_checks(weight_max, options.seed, options.cap)
    report.results["checks"] = [check.model_dump() for check in checks]
    report.results["passed"] = all(check.passed for check in checks)
    for check in checks:
        report.lines.append(f"{'PASS' if check.passed else 'FAIL'}  {check.name:<32} {check.detail}")
    report.lines.append(f"overall: {'PASS' if report.results['passed'] else 'FAIL'}")


COMMANDS: Dict[str, Callable[[CommandOptions, Report], None]] = {
    "eval": cmd_eval,
    "derive": cmd_derive,
    "expmap": cmd_expmap,
    "tseq": cmd_tseq,
    "gens": cmd_gens,
    "decode": cmd_decode,
    "rewrite": cmd_rewrite,
    "kernel": cmd_kernel,
    "ak": cmd_ak,
    "verify": cmd_verify,
}


def run(command: str, options: CommandOptions) -> Report:
    """Execute a command and return its report; library errors propagate."""
    handler = COMMANDS.get(command)
    if handler is None:
        raise UsageError(f"unknown command {command!r}; choose from {', '.join(COMMANDS)}")
    parameters = options.model_dump(exclude={"format"}, exclude_none=True)
    report = Report(command=command, parameters=parameters)
    handler(options, report)
    logger.info(f"Command {command} finished")
    return report
