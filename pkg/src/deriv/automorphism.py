"""
Tame automorphisms of K<X,Y> built from affine, triangular and exponential factors.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence, Tuple

from ncalg.errors import ConsistencyError, NilpotencyError
from ncalg.ncpoly import T1, X, Y, NCPoly, Scalar, to_rational
from deriv.derivation import DEFAULT_CAP, Derivation, exp

logger = logging.getLogger(__name__)


class FactorKind(Enum):
    AFFINE = "affine"
    TRIANGULAR = "triangular"
    EXP = "exp"


@dataclass(frozen=True)
class ElementaryAuto:
    """One factor of a tame automorphism, stored by its images of X and Y."""
    kind: FactorKind
    image_x: NCPoly
    image_y: NCPoly
    parameters: Tuple[Fraction, ...] = ()

    @classmethod
    def affine(cls, a1: Scalar, a2: Scalar, a3: Scalar, b1: Scalar, b2: Scalar, b3: Scalar) -> "ElementaryAuto":
        """X -> a1 X + a2 Y + a3, Y -> b1 X + b2 Y + b3 with a1 b2 - a2 b1 != 0."""
        a1, a2, a3, b1, b2, b3 = (to_rational(v) for v in (a1, a2, a3, b1, b2, b3))
        if a1 * b2 - a2 * b1 == 0:
            raise ValueError("Affine automorphism needs a1*b2 - a2*b1 != 0")
        return cls(
            kind=FactorKind.AFFINE,
            image_x=X.scale(a1) + Y.scale(a2) + NCPoly.constant(a3),
            image_y=X.scale(b1) + Y.scale(b2) + NCPoly.constant(b3),
            parameters=(a1, a2, a3, b1, b2, b3),
        )

    @classmethod
    def triangular(cls, p: Sequence[Scalar]) -> "ElementaryAuto":
        """X -> X, Y -> Y + p(X); p given by its coefficients, constant term first."""
        coeffs = tuple(to_rational(c) for c in p)
        return cls(
            kind=FactorKind.TRIANGULAR,
            image_x=X,
            image_y=Y + NCPoly.from_x_coefficients(coeffs),
            parameters=coeffs,
        )

    @classmethod
    def from_exp(cls, D: Derivation, cap: int = DEFAULT_CAP) -> "ElementaryAuto":
        """exp(D), for D nilpotent on X and Y within cap."""
        return cls(kind=FactorKind.EXP, image_x=exp(D, X, cap), image_y=exp(D, Y, cap))


@dataclass(frozen=True)
class Automorphism:
    """
    Composition e1 o e2 o ... o ek of elementary factors.

    image_x and image_y are the images of the generators under the whole
    composition; apply substitutes them.
    """
    factors: Tuple[ElementaryAuto, ...] = ()
    image_x: NCPoly = field(default=X)
    image_y: NCPoly = field(default=Y)

    @classmethod
    def identity(cls) -> "Automorphism":
        return cls()

    @classmethod
    def of(cls, *factors: ElementaryAuto) -> "Automorphism":
        result = cls.identity()
        for factor in factors:
            result = result.compose(cls((factor,), factor.image_x, factor.image_y))
        return result

    @classmethod
    def affine(cls, a1: Scalar, a2: Scalar, a3: Scalar, b1: Scalar, b2: Scalar, b3: Scalar) -> "Automorphism":
        return cls.of(ElementaryAuto.affine(a1, a2, a3, b1, b2, b3))

    @classmethod
    def triangular(cls, p: Sequence[Scalar]) -> "Automorphism":
        return cls.of(ElementaryAuto.triangular(p))

    @classmethod
    def from_exp(cls, D: Derivation, cap: int = DEFAULT_CAP) -> "Automorphism":
        return cls.of(ElementaryAuto.from_exp(D, cap))

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self o other: apply other first, then self."""
        return Automorphism(
            factors=self.factors + other.factors,
            image_x=other.image_x.substitute(self.image_x, self.image_y),
            image_y=other.image_y.substitute(self.image_x, self.image_y),
        )

    def __call__(self, p: NCPoly) -> NCPoly:
        return apply_auto(self, p)

    def is_identity(self) -> bool:
        return self.image_x == X and self.image_y == Y


def apply_auto(A: Automorphism, p: NCPoly) -> NCPoly:
    return p.substitute(A.image_x, A.image_y)


def t1_scaling(A: Automorphism) -> Fraction:
    """The scalar c with A(T1) = c T1."""
    image = apply_auto(A, T1)
    c = image.coefficient("YX")
    if not c or image != T1.scale(c):
        raise ConsistencyError(f"image of T1 is not a nonzero multiple of T1: {image}")
    return c


def _theta_powers(A: Automorphism, p: NCPoly, cap: int):
    """Yield Theta^k(p) for k = 1, 2, ... with Theta = A - 1, until it vanishes."""
    current = p
    for _ in range(cap):
        current = apply_auto(A, current) - current
        if not current:
            return
        yield current
    raise NilpotencyError(f"A - 1 is not nilpotent on generators within cap {cap}")


def log_auto(A: Automorphism, cap: int = DEFAULT_CAP) -> Derivation:
    """
    Logarithm of a unipotent automorphism.

    Evaluates log(1 + Theta) = Theta - Theta^2/2 + Theta^3/3 - ... on X and Y,
    where Theta = A - 1.

    Args:
        A: automorphism with A - 1 nilpotent on X and Y
        cap: iteration bound for the series

    Returns:
        The derivation D with exp(D) = A on the generators
    """
    images = []
    for generator in (X, Y):
        total = NCPoly.zero()
        for k, term in enumerate(_theta_powers(A, generator, cap), start=1):
            sign = 1 if k % 2 else -1
            total = total + term.scale(Fraction(sign, k))
        images.append(total)
    logger.debug(f"log of automorphism: X -> {images[0]}, Y -> {images[1]}")
    return Derivation(image_x=images[0], image_y=images[1])
