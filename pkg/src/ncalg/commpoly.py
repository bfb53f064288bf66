"""
Commutative polynomials in K[x, y] and the abelianization map from K<X,Y>.
"""

from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple

from ncalg.ncpoly import NCPoly, Scalar, to_rational
from ncalg.words import degrees

Exponents = Tuple[int, int]


class CommPoly:
    """Immutable polynomial in commuting variables x, y, keyed by (deg_x, deg_y)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Exponents, Scalar]] = None):
        cleaned: Dict[Exponents, Fraction] = {}
        for (dx, dy), coeff in (terms or {}).items():
            if dx < 0 or dy < 0:
                raise ValueError(f"Negative exponent in {(dx, dy)}")
            c = to_rational(coeff)
            if c:
                cleaned[(dx, dy)] = c
        self._terms = {k: cleaned[k] for k in sorted(cleaned, reverse=True)}

    @property
    def terms(self) -> Dict[Exponents, Fraction]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "CommPoly") -> "CommPoly":
        result = dict(self._terms)
        for k, c in other._terms.items():
            result[k] = result.get(k, 0) + c
        return CommPoly(result)

    def __neg__(self) -> "CommPoly":
        return CommPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "CommPoly") -> "CommPoly":
        return self + (-other)

    def __mul__(self, other: "CommPoly") -> "CommPoly":
        result: Dict[Exponents, Fraction] = {}
        for (a, b), c1 in self._terms.items():
            for (p, q), c2 in other._terms.items():
                key = (a + p, b + q)
                result[key] = result.get(key, 0) + c1 * c2
        return CommPoly(result)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CommPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return f"CommPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        text = ""
        for i, ((dx, dy), c) in enumerate(self._terms.items()):
            factors = ""
            if dx:
                factors += "x" if dx == 1 else f"x^{dx}"
            if dy:
                factors += "y" if dy == 1 else f"y^{dy}"
            magnitude = abs(c)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = factors
            else:
                body = f"{magnitude} {factors}"
            if i == 0:
                text = ("-" if c < 0 else "") + body
            else:
                text += f" {'-' if c < 0 else '+'} {body}"
        return text


def abelianize(p: NCPoly) -> CommPoly:
    """The natural homomorphism K<X,Y> -> K[x,y]; colliding words add up."""
    result: Dict[Exponents, Fraction] = {}
    for word, c in p.items():
        key = degrees(word)
        result[key] = result.get(key, 0) + c
    return CommPoly(result)


def is_in_commutator_ideal(p: NCPoly) -> bool:
    """The commutator ideal is the kernel of abelianization."""
    return not abelianize(p)
