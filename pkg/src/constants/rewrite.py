"""
Writing a constant as a polynomial in the free generators.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, Tuple

from ncalg.errors import RewriteError, WeightBoundError
from ncalg.ncpoly import NCPoly
from ncalg.words import graded_weight
from deriv.derivation import derive
from constants.brackets import BracketedWord, eval_bracketed
from constants.generators import GeneratorEntry, GeneratorTable

logger = logging.getLogger(__name__)

Monomial = Tuple[BracketedWord, ...]


@dataclass(frozen=True)
class FormalPoly:
    """Noncommutative polynomial over generator symbols; a key is a product of generators."""
    terms: Tuple[Tuple[Monomial, Fraction], ...] = field(default=())

    @classmethod
    def from_dict(cls, terms: Dict[Monomial, Fraction]) -> "FormalPoly":
        return cls(tuple((k, c) for k, c in terms.items() if c))

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def evaluate(self, F: NCPoly) -> NCPoly:
        """Substitute the value of every generator symbol."""
        total = NCPoly.zero()
        for factors, c in self.terms:
            product = NCPoly.one()
            for bw in factors:
                product = product * eval_bracketed(bw, F)
            total = total + product.scale(c)
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        text = ""
        for i, (factors, c) in enumerate(self.terms):
            body = " * ".join(str(bw) for bw in factors) if factors else "1"
            magnitude = abs(c)
            if factors and magnitude != 1:
                body = f"{magnitude} {body}"
            elif not factors:
                body = str(magnitude)
            if i == 0:
                text = ("-" if c < 0 else "") + body
            else:
                text += f" {'-' if c < 0 else '+'} {body}"
        return text


def _product(factors: Tuple[GeneratorEntry, ...]) -> NCPoly:
    value = NCPoly.one()
    for entry in factors:
        value = value * entry.value
    return value


def rewrite_in_generators(p: NCPoly, table: GeneratorTable) -> FormalPoly:
    """
    Express a constant p in the generators of table.

    Repeatedly takes the leading monomial of the top-weight part of p, splits
    it into generator leading monomials (the split is unique), and subtracts
    the matching multiple of the generator product.

    Raises:
        RewriteError: p is not killed by the table's derivation, or a leading monomial does not split
        WeightBoundError: p has a component above the table's weight bound
    """
    remainder = derive(table.derivation, p)
    if remainder:
        raise RewriteError(f"input is not a constant: its derivative is {remainder}")
    m = table.m
    result: Dict[Tuple[BracketedWord, ...], Fraction] = {}
    cache: Dict[Tuple[GeneratorEntry, ...], NCPoly] = {}
    current = p
    steps = 0
    while current:
        top = current.top_component(m)
        lm = top.leading_monomial()
        if graded_weight(lm, m) > table.weight_max:
            raise WeightBoundError(
                f"monomial {lm} has weight {graded_weight(lm, m)} above table bound {table.weight_max}"
            )
        factors = table.factorize(lm)
        if factors not in cache:
            cache[factors] = _product(factors)
        q = cache[factors]
        a = top.leading_coefficient() / q.coefficient(lm)
        key = tuple(entry.bracketed for entry in factors)
        result[key] = result.get(key, 0) + a
        current = current - q.scale(a)
        steps += 1
        logger.debug(f"rewrite step {steps}: {a} * {' * '.join(e.symbol for e in factors) or '1'}")
    return FormalPoly.from_dict(result)
