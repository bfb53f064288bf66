"""
The right and left operations nabla_r, nabla_l on explicit decompositions V Y U.

They are only defined on recorded decompositions; MarkedElement carries a sum
of such decompositions so that box and both operations act term by term.
"""

from dataclasses import dataclass
from typing import Tuple

from ncalg.ncpoly import ONE, Y, NCPoly, Scalar


def nabla_r(V1: NCPoly, U1: NCPoly, U: NCPoly, F: NCPoly) -> NCPoly:
    """V1 Y U1 U F - V1 F U1 U Y."""
    return V1 * Y * U1 * U * F - V1 * F * U1 * U * Y


def nabla_l(V1: NCPoly, U1: NCPoly, U: NCPoly, F: NCPoly) -> NCPoly:
    """F U V1 Y U1 - Y U V1 F U1."""
    return F * U * V1 * Y * U1 - Y * U * V1 * F * U1


@dataclass(frozen=True)
class MarkedElement:
    """Sum of V Y U over the stored pairs (V, U); Y is the marked letter."""
    pairs: Tuple[Tuple[NCPoly, NCPoly], ...] = ()

    @classmethod
    def single(cls, V: NCPoly, U: NCPoly) -> "MarkedElement":
        return cls(((V, U),))

    def value(self) -> NCPoly:
        return self.with_marked(Y)

    def with_marked(self, Z: NCPoly) -> NCPoly:
        """Sum of V Z U: the marked Y replaced by Z."""
        total = NCPoly.zero()
        for V, U in self.pairs:
            total = total + V * Z * U
        return total

    def __add__(self, other: "MarkedElement") -> "MarkedElement":
        return MarkedElement(self.pairs + other.pairs)

    def __neg__(self) -> "MarkedElement":
        return MarkedElement(tuple((-V, U) for V, U in self.pairs))

    def __sub__(self, other: "MarkedElement") -> "MarkedElement":
        return self + (-other)

    def scale(self, value: Scalar) -> "MarkedElement":
        return MarkedElement(tuple((V.scale(value), U) for V, U in self.pairs))

    def boxed(self, F: NCPoly) -> "MarkedElement":
        """box applied to every V Y U, keeping the marked Y: Y V Y U F - F V Y U Y."""
        pairs = []
        for V, U in self.pairs:
            pairs.append((Y * V, U * F))
            pairs.append((-(F * V), U * Y))
        return MarkedElement(tuple(pairs))

    def nabla_r(self, F: NCPoly, U: NCPoly = ONE) -> NCPoly:
        return self.with_marked(Y) * U * F - self.with_marked(F) * U * Y

    def nabla_l(self, F: NCPoly, U: NCPoly = ONE) -> NCPoly:
        return F * U * self.with_marked(Y) - Y * U * self.with_marked(F)
