"""
Absolute constants: the common kernel of the derivations Y -> X^k and X -> Y^k.
"""

import logging
from typing import List

from ncalg.ncpoly import NCPoly
from ncalg.words import words_of_length
from deriv.derivation import Derivation, derive, weitzenbock
from oracle.kernels import check_weight
from oracle.linalg import kernel_vectors, reduced_echelon

logger = logging.getLogger(__name__)


def derivation_family(M: int) -> List[Derivation]:
    """Y -> X^k and the switched X -> Y^k for k = 0..M."""
    return [weitzenbock(k) for k in range(M + 1)] + [Derivation.switched(k) for k in range(M + 1)]


def ak_basis(M: int, N: int) -> List[NCPoly]:
    """
    Echelon basis of the common kernel of derivation_family(M) in total degree <= N.

    Every derivation in the family is homogeneous for total degree, so each
    degree is reduced separately. The result is sorted by leading monomial,
    largest first.
    """
    check_weight(N)
    if M < N:
        logger.warning(f"ak_basis with M={M} < N={N}: the family may be too small to cut out the absolute constants")
    family = derivation_family(M)
    basis: List[NCPoly] = []
    for d in range(N + 1):
        words = words_of_length(d)
        images = []
        for w in words:
            p = NCPoly.monomial(w)
            stacked = {}
            for index, D in enumerate(family):
                for word, c in derive(D, p).items():
                    stacked[(index, word)] = c
            images.append(stacked)
        kernel = [{words[i]: c for i, c in combination.items()} for combination in kernel_vectors(images)]
        position = {w: i for i, w in enumerate(words)}
        basis.extend(NCPoly(row) for row in reduced_echelon(kernel, position.__getitem__))
    basis.sort(key=lambda p: p.leading_monomial(), reverse=True)
    logger.info(f"Absolute constants up to degree {N} with M={M}: dimension {len(basis)}")
    return basis
