"""
Derivations of the free algebra K<X,Y>.
A derivation is determined by the images of X and Y and extends by the Leibniz law.
"""

import logging
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Union

from ncalg.errors import NilpotencyError, NormalFormError
from ncalg.ncpoly import ZERO, NCPoly, Scalar, to_rational
from ncalg.words import X_LETTER, Y_LETTER, Word

logger = logging.getLogger(__name__)

DEFAULT_CAP = int(os.getenv("NCALG_ITERATION_CAP", "64"))

# deg(0) in the degree function of a derivation
NEG_INFINITY = -math.inf

Degree = Union[int, float]


@dataclass(frozen=True)
class Derivation:
    """Derivation D with D(X) = image_x and D(Y) = image_y."""
    image_x: NCPoly = field(default_factory=NCPoly.zero)
    image_y: NCPoly = field(default_factory=NCPoly.zero)

    @classmethod
    def from_polynomial(cls, f: NCPoly) -> "Derivation":
        """The derivation X -> 0, Y -> f."""
        return cls(image_x=ZERO, image_y=f)

    @classmethod
    def switched(cls, k: int) -> "Derivation":
        """The derivation X -> Y^k, Y -> 0 (the letters of weitzenbock(k) exchanged)."""
        return cls(image_x=NCPoly.monomial(Y_LETTER * k), image_y=ZERO)

    def __call__(self, p: NCPoly) -> NCPoly:
        return derive(self, p)

    def scaled(self, value: Scalar) -> "Derivation":
        c = to_rational(value)
        return Derivation(self.image_x.scale(c), self.image_y.scale(c))

    def is_zero(self) -> bool:
        return not self.image_x and not self.image_y

    def is_normal_form(self) -> bool:
        return not self.image_x and bool(self.image_y) and self.image_y.depends_only_on_x()

    def normal_form_polynomial(self) -> NCPoly:
        """Return f for a derivation X -> 0, Y -> f(X), f nonzero."""
        if not self.is_normal_form():
            raise NormalFormError(
                f"derivation (X -> {self.image_x}, Y -> {self.image_y}) is not of the form X -> 0, Y -> f(X)"
            )
        return self.image_y

    def normal_form_degree(self) -> int:
        return len(self.normal_form_polynomial().x_coefficients()) - 1

    def __str__(self) -> str:
        return f"(X -> {self.image_x}, Y -> {self.image_y})"


def derive(D: Derivation, p: NCPoly) -> NCPoly:
    """Apply the Leibniz extension of D to p; constants go to 0."""
    images = {X_LETTER: D.image_x.terms, Y_LETTER: D.image_y.terms}
    result: Dict[Word, Fraction] = {}
    for word, c in p.items():
        for i, letter in enumerate(word):
            prefix, suffix = word[:i], word[i + 1:]
            for u, a in images[letter].items():
                w = prefix + u + suffix
                result[w] = result.get(w, 0) + c * a
    return NCPoly(result)


def iterate(D: Derivation, p: NCPoly, n: int) -> NCPoly:
    """D^n(p)."""
    for _ in range(n):
        if not p:
            break
        p = derive(D, p)
    return p


def delta_degree(D: Derivation, p: NCPoly, cap: int = DEFAULT_CAP) -> Degree:
    """
    max(d | D^d(p) != 0), with deg(0) = -inf.

    Raises NilpotencyError if D^cap(p) is still nonzero.
    """
    if not p:
        return NEG_INFINITY
    current = p
    for d in range(cap):
        current = derive(D, current)
        if not current:
            return d
    raise NilpotencyError(f"not nilpotent on input within cap {cap}")


def powers(D: Derivation, p: NCPoly, cap: int = DEFAULT_CAP) -> List[NCPoly]:
    """[p, D(p), D^2(p), ...] up to the last nonzero power."""
    result = []
    current = p
    while current:
        if len(result) > cap:
            raise NilpotencyError("not locally nilpotent on input")
        result.append(current)
        current = derive(D, current)
    return result


def exp(D: Derivation, p: NCPoly, cap: int = DEFAULT_CAP) -> NCPoly:
    """exp(D)(p) = sum of D^k(p)/k!, stopping at the first vanishing power."""
    total = ZERO
    term = p
    k = 0
    while term:
        if k > cap:
            raise NilpotencyError("not locally nilpotent on input")
        total = total + term
        k += 1
        term = derive(D, term) / k
    return total


def weitzenbock(m: int) -> Derivation:
    """The derivation X -> 0, Y -> X^m."""
    if m < 0:
        raise ValueError(f"Exponent must be nonnegative, got {m}")
    return Derivation(image_x=ZERO, image_y=NCPoly.monomial(X_LETTER * m))


def is_constant_of(D: Derivation, p: NCPoly) -> bool:
    return not derive(D, p)
