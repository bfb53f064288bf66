"""
Acceptance checks run by the `verify` command.
Each check is bounded by the requested weight budget and seeded for reproducibility.
"""

import logging
import random
from fractions import Fraction
from typing import Callable, List, Tuple

from pydantic import BaseModel

from ncalg.errors import AlgebraError
from ncalg.ncpoly import T1, X, Y, NCPoly, commutator
from deriv.automorphism import Automorphism, log_auto, t1_scaling
from deriv.derivation import Derivation, delta_degree, derive, exp, weitzenbock
from constants.brackets import symbolic_leading_monomial
from constants.decoder import decode
from constants.generators import enumerate_generators
from constants.nabla import MarkedElement
from constants.operators import box, t_sequence
from constants.rewrite import rewrite_in_generators
from oracle.ak import ak_basis
from oracle.freeness import verify_freeness
from oracle.kernels import compare_kernels, graded_kernel_basis, iterated_kernel_dimension, recover_scalar
from oracle.spans import rfn_span_dimension, span_dimension

logger = logging.getLogger(__name__)

RANDOM_CASES = 50
NABLA_CASES = 100

F_SAMPLES = [NCPoly.one(), X, X ** 2, 1 + X, X + X ** 2]
NABLA_F_SAMPLES = [X, X ** 2, 1 + X]


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str


def random_word(rng: random.Random, max_length: int) -> str:
    return "".join(rng.choice("XY") for _ in range(rng.randint(0, max_length)))


def random_coefficient(rng: random.Random) -> Fraction:
    return Fraction(rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5]), rng.randint(1, 4))


def random_poly(rng: random.Random, max_terms: int = 5, max_length: int = 5) -> NCPoly:
    terms = {random_word(rng, max_length): random_coefficient(rng) for _ in range(rng.randint(1, max_terms))}
    return NCPoly(terms)


# ---------- Checks ----------

def check_t_sequence_constants(weight_max: int, rng: random.Random, cap: int) -> Tuple[bool, str]:
    for F in F_SAMPLES:
        D = Derivation.from_polynomial(F)
        for i in range(1, 5):
            if derive(D, t_sequence(i, F)):
                return False, f"D(T_{i}) != 0 for F = {F}"
    return True, f"T_1..T_4 are constants for {len(F_SAMPLES)} choices of F"


def check_kernel_equals_generated(weight_max: int, rng: random.Random, cap: int) -> Tuple[bool, str]:
    cases = [(1, [0, 1], 7), (1, [1, 1], 7), (2, [0, 0, 1], 8), (2, [0, 1, 1], 8)]
    checked = 0
    for m, coeffs, bound in cases:
        bound = min(bound, weight_max)
        table = enumerate_generators(m, coeffs, bound)
        for N in range(bound + 1):
            kernel = graded_kernel_basis(table.derivation, m, N)
            spanned = span_dimension(table, N)
            if kernel.dimension != spanned:
                return False, f"m={m}, f={table.F}, N={N}: kernel dimension {kernel.dimension} != span {spanned}"
            for p in kernel.basis:
                if rewrite_in_generators(p, table).evaluate(table.F) != p:
                    return False, f"rewrite round trip failed for {p}"
                checked += 1
    return True, f"{checked} kernel vectors rewritten exactly"


def check_freeness(weight_max: int, rng: random.Random, cap: int) -> Tuple[bool, str]:
    for m, coeffs in ((0, [1]), (1, [0, 1]), (2, [0, 0, 1])):
        bound = min(10, weight_max)
        if not verify_freeness(enumerate_generators(m, coeffs, bound), bound):
            return False, f"leading monomials for m={m} are not a code up to weight {bound}"
    decoded = 0
    for m, bound in ((1, 10), (2, 12)):
        table = enumerate_generators(m, [0] * m + [1], min(bound, weight_max))
        for entry in table.entries:
            if not entry.bracketed.is_boxed():
                continue
            if symbolic_leading_monomial(entry.bracketed, m) != entry.lm:
                return False, f"symbolic leading monomial of {entry.symbol} differs from {entry.lm}"
            if decode(entry.lm, m) != entry.bracketed:
                return False, f"decoding {entry.lm} did not return {entry.symbol}"
            decoded += 1
    return True, f"codes verified, {decoded} boxed generators decoded"


def check_same_kernel(weight_max: int, rng: random.Random, cap: int) -> Tuple[bool, str]:
    N = min(6, weight_max)
    D1 = weitzenbock(1)
    for alpha in (Fraction(3), Fraction(-1, 2), Fraction(7, 5)):
        D2 = D1.scaled(alpha)
        if not compare_kernels(D1, D2, 1, N).equal:
            return False, f"kernels of D and {alpha} D differ"
        if recover_scalar(D1, D2, N) != alpha:
            return False, f"recovered scalar differs from {alpha}"
    comparison = compare_kernels(D1, weitzenbock(2), 1, N)
    if comparison.equal:
        return False, f"no witness separating Y -> X and Y -> X^2 up to weight {N}"
    return True, f"scalars recovered; witness at weight {comparison.weight}"


def check_absolute_constants(weight_max: int, rng: random.Random, cap: int) -> Tuple[bool, str]:
    N = min(6, weight_max)
    expected = [T1 ** k for k in range(N // 2, -1, -1)]
    if ak_basis(N, N) != expected:
        return False, f"common kernel up to degree {N} is not spanned by powers of T1"
    if ak_basis(N + 2, N) != expected:
        return False, f"common kernel up to degree {N} not stable under M -> {N + 2}"
    return True, f"dimension {len(expected)} up to degree {N}"


def check_rfn_spans(weight_max: int, rng: random.Random, cap: int) -> Tuple[bool, str]:
    bound = min(5, weight_max)
    table = enumerate_generators(1, [0, 1], bound)
    D = weitzenbock(1)
    for n in (2, 3):
        for N in range(bound + 1):
            spanned = rfn_span_dimension(n, 1, N, table)
            kernel = iterated_kernel_dimension(D, n, 1, N)
            if spanned != kernel:
                return False, f"n={n}, N={N}: span {spanned} != kernel of D^n {kernel}"
    return True, f"n in (2, 3), weights up to {bound}"


def check_nabla_identity(weight_max: int, rng: random.Random, cap: int) -> Tuple[bool, str]:
    for _ in range(NABLA_CASES):
        V = NCPoly.monomial(random_word(rng, 4))
        U = NCPoly.monomial(random_word(rng, 4))
        W = NCPoly.monomial(random_word(rng, 3))
        F = rng.choice(NABLA_F_SAMPLES)
        M = MarkedElement.single(V, U)
        lhs = M.boxed(F).nabla_r(F)
        rhs = box(M.nabla_r(F), F) - M.nabla_l(F) * commutator(Y, F)
        if lhs != rhs:
            return False, f"identity fails for V={V}, U={U}, F={F}"
        lhs = M.boxed(F).nabla_r(F, W) - box(M.nabla_r(F, W), F)
        rhs = box(M.nabla_r(F) * W - M.nabla_r(F, W), F) - M.nabla_l(F) * box(W, F)
        if lhs != rhs:
            return False, f"identity with U={W} fails for V={V}, U1={U}, F={F}"
    return True, f"{NABLA_CASES} random decompositions"


def check_analytic_properties(weight_max: int, rng: random.Random, cap: int) -> Tuple[bool, str]:
    for _ in range(RANDOM_CASES):
        D = weitzenbock(rng.randint(0, 3))
        p, q = random_poly(rng), random_poly(rng)
        if derive(D, p * q) != derive(D, p) * q + p * derive(D, q):
            return False, f"Leibniz law fails for {p}, {q}"
        dp, dq = delta_degree(D, p, cap), delta_degree(D, q, cap)
        if delta_degree(D, p * q, cap) != dp + dq:
            return False, f"deg(pq) != deg p + deg q for {p}, {q}"
        dsum = delta_degree(D, p + q, cap)
        if dsum > max(dp, dq) or (dp != dq and dsum != max(dp, dq)):
            return False, f"deg(p + q) violates the max rule for {p}, {q}"
        if derive(D, p) and delta_degree(D, derive(D, p), cap) != dp - 1:
            return False, f"deg(D p) != deg p - 1 for {p}"
        if exp(D, p * q, cap) != exp(D, p, cap) * exp(D, q, cap):
            return False, f"exp is not multiplicative on {p}, {q}"

        lam, mu = random_coefficient(rng), random_coefficient(rng)
        composed = Automorphism.from_exp(D.scaled(lam), cap).compose(Automorphism.from_exp(D.scaled(mu), cap))
        summed = Automorphism.from_exp(D.scaled(lam + mu), cap)
        if (composed.image_x, composed.image_y) != (summed.image_x, summed.image_y):
            return False, f"exp({lam} D) exp({mu} D) != exp({lam + mu} D)"

        round_trip = D.scaled(lam)
        if log_auto(Automorphism.from_exp(round_trip, cap), cap) != round_trip:
            return False, f"log(exp(D)) != D for {round_trip}"

        f = NCPoly.from_x_coefficients([random_coefficient(rng) for _ in range(rng.randint(1, 4))])
        lnd = Derivation.from_polynomial(f)
        if rng.random() < 0.5:
            lnd = Derivation.switched(rng.randint(0, 3)).scaled(lam)
        if t1_scaling(Automorphism.from_exp(lnd, cap)) != 1:
            return False, f"exp of {lnd} does not fix T1"
    return True, f"{RANDOM_CASES} random cases per property"


CHECKS: List[Tuple[str, Callable[[int, random.Random, int], Tuple[bool, str]]]] = [
    ("t-sequence constants", check_t_sequence_constants),
    ("kernel equals generated algebra", check_kernel_equals_generated),
    ("freeness and decoding", check_freeness),
    ("derivations with equal kernels", check_same_kernel),
    ("absolute constants", check_absolute_constants),
    ("bracketed product spans", check_rfn_spans),
    ("nabla commutation identities", check_nabla_identity),
    ("analytic properties", check_analytic_properties),
]


def run_checks(weight_max: int, seed: int, cap: int) -> List[CheckResult]:
    """Run every acceptance check with its weight bound capped at weight_max."""
    results = []
    for name, check in CHECKS:
        rng = random.Random(seed)
        try:
            passed, detail = check(weight_max, rng, cap)
        except AlgebraError as e:
            passed, detail = False, f"{type(e).__name__}: {e}"
        if passed:
            logger.info(f"Check {name} passed: {detail}")
        else:
            logger.error(f"Check {name} failed: {detail}")
        results.append(CheckResult(name=name, passed=passed, detail=detail))
    return results
