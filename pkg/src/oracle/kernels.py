"""
Brute-force kernels of derivations in normal form, by exact linear algebra on graded components.
"""

import logging
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from ncalg.errors import ConsistencyError, KernelMismatchError, NormalFormError, WeightBoundError
from ncalg.ncpoly import T1, NCPoly
from ncalg.words import Word, graded_weight, words_of_weight, words_up_to_weight
from deriv.derivation import Derivation, derive, iterate
from constants.operators import box
from oracle.linalg import kernel_vectors, rank, reduced_echelon

logger = logging.getLogger(__name__)

MAX_WEIGHT = int(os.getenv("NCALG_MAX_WEIGHT", "12"))


def check_weight(N: int) -> None:
    if N < 0:
        raise ValueError(f"Weight must be nonnegative, got {N}")
    if N > MAX_WEIGHT:
        raise WeightBoundError(f"weight {N} exceeds the oracle cap {MAX_WEIGHT}")


@dataclass(frozen=True)
class GradedComponent:
    """All words of one graded weight, lex descending."""
    m: int
    weight: int
    monomials: Tuple[Word, ...]

    @classmethod
    def of(cls, m: int, weight: int) -> "GradedComponent":
        return cls(m=m, weight=weight, monomials=tuple(words_of_weight(weight, m)))


@dataclass(frozen=True)
class KernelBasis:
    component: GradedComponent
    basis: Tuple[NCPoly, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class KernelComparison:
    equal: bool
    witness: Optional[NCPoly] = None
    weight: Optional[int] = None


def normal_form_f(D: Derivation, m: Optional[int] = None) -> NCPoly:
    """f for D = (X -> 0, Y -> f(X)), with deg f checked against m when given."""
    f = D.normal_form_polynomial()
    if m is not None and D.normal_form_degree() != m:
        raise NormalFormError(f"deg f = {D.normal_form_degree()} does not match m = {m}")
    return f


def _combine(words: Sequence[Word], combination: Dict[int, Fraction]) -> Dict[Word, Fraction]:
    return {words[i]: c for i, c in combination.items()}


def _priority(words: Sequence[Word]):
    index = {w: i for i, w in enumerate(words)}
    return index.__getitem__


def _kernel_top_part(D: Derivation, m: int, N: int) -> Tuple[NCPoly, ...]:
    """
    Echelon kernel vectors of D whose leading term has weight N.

    For f a monomial D is homogeneous and the weight-N component is used
    directly; otherwise the filtered space of weight <= N is reduced and the
    rows with a weight-N pivot are kept.
    """
    f = D.normal_form_polynomial()
    homogeneous = len(f) == 1
    words = words_of_weight(N, m) if homogeneous else words_up_to_weight(N, m)
    images = [derive(D, NCPoly.monomial(w)).terms for w in words]
    kernel = [_combine(words, c) for c in kernel_vectors(images)]
    rows = reduced_echelon(kernel, _priority(words))
    logger.debug(f"kernel on {len(words)} words of weight {'' if homogeneous else '<= '}{N}: {len(rows)} vectors")
    basis = []
    for row in rows:
        pivot = min(row, key=_priority(words))
        if graded_weight(pivot, m) == N:
            basis.append(NCPoly(row))
    return tuple(basis)


def graded_kernel_basis(D: Derivation, m: int, N: int) -> KernelBasis:
    """
    Echelon basis of the weight-N constants of D = (X -> 0, Y -> f(X)), deg f = m.

    Raises:
        NormalFormError: D is not in normal form or deg f != m
        WeightBoundError: N is above NCALG_MAX_WEIGHT
    """
    normal_form_f(D, m)
    check_weight(N)
    basis = _kernel_top_part(D, m, N)
    logger.info(f"Kernel of {D} at weight {N}: dimension {len(basis)}")
    return KernelBasis(component=GradedComponent.of(m, N), basis=basis)


def _first_escape(basis: Sequence[NCPoly], other: Derivation) -> Optional[NCPoly]:
    for p in basis:
        if derive(other, p):
            return p
    return None


def compare_kernels(D1: Derivation, D2: Derivation, m: int, N_max: int) -> KernelComparison:
    """Compare the kernels of two normal-form derivations on all weights up to N_max."""
    normal_form_f(D1)
    normal_form_f(D2)
    check_weight(N_max)
    for N in range(N_max + 1):
        for first, second in ((D1, D2), (D2, D1)):
            witness = _first_escape(_kernel_top_part(first, m, N), second)
            if witness is not None:
                logger.info(f"Kernels differ at weight {N}: witness {witness}")
                return KernelComparison(equal=False, witness=witness, weight=N)
    logger.info(f"Kernels agree up to weight {N_max}")
    return KernelComparison(equal=True)


def recover_scalar(D1: Derivation, D2: Derivation, N_max: int, m: Optional[int] = None) -> Fraction:
    """
    The scalar alpha with D2 = alpha * D1, for derivations with equal kernels.

    Raises:
        KernelMismatchError: the kernels differ up to N_max
        ConsistencyError: the kernels agree but D2 is not a multiple of D1
    """
    f1 = normal_form_f(D1)
    f2 = normal_form_f(D2)
    if m is None:
        m = D1.normal_form_degree()
    comparison = compare_kernels(D1, D2, m, N_max)
    if not comparison.equal:
        raise KernelMismatchError(
            f"kernels differ at weight {comparison.weight}: witness {comparison.witness}"
        )
    alpha = f2.x_coefficients()[-1] / f1.x_coefficients()[-1]
    if f2 != f1.scale(alpha):
        raise ConsistencyError("kernels equal but derivations not proportional")
    if derive(D2, box(T1, f1)):
        raise ConsistencyError(f"{D2} does not kill box(T1) built from {f1}")
    return alpha


def iterated_kernel_dimension(D: Derivation, n: int, m: int, N: int) -> int:
    """Dimension of the kernel of D^n on the weight-N component."""
    check_weight(N)
    words = words_of_weight(N, m)
    images = [iterate(D, NCPoly.monomial(w), n).terms for w in words]
    return len(words) - rank(images)


def kernel_dimensions(D: Derivation, m: int, N_max: int) -> List[int]:
    """Kernel dimensions at weights 0..N_max."""
    return [graded_kernel_basis(D, m, N).dimension for N in range(N_max + 1)]
