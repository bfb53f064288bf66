"""
Free generating sets of the algebra of constants of X -> 0, Y -> f(X).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, List, Sequence, Tuple, Union

from ncalg.errors import ConsistencyError, NormalFormError, RewriteError
from ncalg.ncpoly import NCPoly, Scalar, to_rational
from ncalg.words import Word, graded_weight
from deriv.derivation import Derivation
from constants.brackets import (
    Atom,
    Box,
    BracketedWord,
    T1Pow,
    XPow,
    bracketed_weight,
    eval_bracketed,
    nested_box,
)

logger = logging.getLogger(__name__)

Coefficients = Tuple[Fraction, ...]


@dataclass(frozen=True)
class GeneratorEntry:
    bracketed: BracketedWord
    value: NCPoly
    lm: Word
    weight: int

    @property
    def symbol(self) -> str:
        return str(self.bracketed)


@dataclass(frozen=True)
class GeneratorTable:
    """Generators of weight at most weight_max, sorted by weight then leading monomial descending."""
    m: int
    f: Coefficients
    weight_max: int
    entries: Tuple[GeneratorEntry, ...]

    @cached_property
    def F(self) -> NCPoly:
        return NCPoly.from_x_coefficients(self.f)

    @cached_property
    def derivation(self) -> Derivation:
        return Derivation.from_polynomial(self.F)

    @cached_property
    def by_lm(self) -> Dict[Word, GeneratorEntry]:
        return {entry.lm: entry for entry in self.entries}

    @cached_property
    def max_lm_length(self) -> int:
        return max((len(entry.lm) for entry in self.entries), default=0)

    def factorizations(self, word: Word, limit: int = 2) -> List[Tuple[GeneratorEntry, ...]]:
        """Factorizations of word into generator leading monomials, at most limit of them."""
        found: List[Tuple[GeneratorEntry, ...]] = []

        def search(start: int, prefix: Tuple[GeneratorEntry, ...]):
            if len(found) >= limit:
                return
            if start == len(word):
                found.append(prefix)
                return
            for end in range(start + 1, min(len(word), start + self.max_lm_length) + 1):
                entry = self.by_lm.get(word[start:end])
                if entry is not None:
                    search(end, prefix + (entry,))

        search(0, ())
        return found

    def factorize(self, word: Word) -> Tuple[GeneratorEntry, ...]:
        """The unique factorization of word into generator leading monomials."""
        found = self.factorizations(word)
        if not found:
            raise RewriteError(f"monomial {word or '1'} is not a product of generator leading monomials")
        if len(found) > 1:
            raise ConsistencyError(f"monomial {word} has more than one factorization into generators")
        return found[0]


def normalize_f(f: Union[Sequence[Scalar], NCPoly]) -> Coefficients:
    """Coefficient list of f(X), constant term first, trailing zeros removed."""
    if isinstance(f, NCPoly):
        coeffs = f.x_coefficients()
    else:
        coeffs = [to_rational(c) for c in f]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if not coeffs:
        raise NormalFormError("f must be a nonzero polynomial in X")
    return tuple(coeffs)


@lru_cache(maxsize=None)
def _letter_sequences(remaining: int, m: int, first: bool, x_run: int) -> Tuple[Tuple[Atom, ...], ...]:
    # sequences of T1, X and boxes of total weight `remaining` that may follow
    # a prefix ending in an X-run of length x_run
    if remaining == 0:
        return ((),) if not first and x_run == 0 else ()
    results = []
    if remaining >= m + 1:
        for tail in _letter_sequences(remaining - m - 1, m, False, 0):
            results.append((T1Pow(1),) + tail)
    if not first and x_run + 1 < m:
        for tail in _letter_sequences(remaining - 1, m, False, x_run + 1):
            results.append((XPow(1),) + tail)
    for inner in range(m + 1, remaining - 2 * m + 1):
        for content in permissible_contents(inner, m):
            for tail in _letter_sequences(remaining - inner - 2 * m, m, False, 0):
                results.append((Box(content),) + tail)
    return tuple(results)


@lru_cache(maxsize=None)
def permissible_contents(weight: int, m: int) -> Tuple[BracketedWord, ...]:
    """All permissible bracketed words of the given weight (m >= 1)."""
    return tuple(BracketedWord.of(*letters) for letters in _letter_sequences(weight, m, True, 0))


def _entry(bw: BracketedWord, F: NCPoly, m: int) -> GeneratorEntry:
    value = eval_bracketed(bw, F)
    return GeneratorEntry(
        bracketed=bw,
        value=value,
        lm=value.top_component(m).leading_monomial(),
        weight=bracketed_weight(bw, m),
    )


def enumerate_generators(m: int, f: Union[Sequence[Scalar], NCPoly], weight_max: int) -> GeneratorTable:
    """
    Enumerate the free generators of the constants of X -> 0, Y -> f(X) up to weight_max.

    For m >= 1 these are X, T1 and every box of a permissible word; for
    m = 0 they are X and T_i = box^(i-1)(T1), weighted by total degree.
    """
    coeffs = normalize_f(f)
    if len(coeffs) - 1 != m:
        raise NormalFormError(f"deg f = {len(coeffs) - 1} does not match m = {m}")
    if weight_max < 0:
        raise ValueError(f"weight_max must be nonnegative, got {weight_max}")
    F = NCPoly.from_x_coefficients(coeffs)

    brackets = [BracketedWord.of(XPow(1))]
    if m == 0:
        depth = 0
        while depth + 2 <= weight_max:
            brackets.append(nested_box(depth))
            depth += 1
    else:
        brackets.append(BracketedWord.of(T1Pow(1)))
        for inner in range(m + 1, weight_max - 2 * m + 1):
            brackets.extend(BracketedWord((Box(content),)) for content in permissible_contents(inner, m))

    entries = [_entry(bw, F, m) for bw in brackets]
    entries = [e for e in entries if e.weight <= weight_max]
    entries.sort(key=lambda e: e.lm, reverse=True)
    entries.sort(key=lambda e: e.weight)
    for entry in entries:
        if graded_weight(entry.lm, m) != entry.weight:
            raise ConsistencyError(f"generator {entry.symbol} has leading monomial {entry.lm} of the wrong weight")

    table = GeneratorTable(m=m, f=coeffs, weight_max=weight_max, entries=tuple(entries))
    if len(table.by_lm) != len(entries):
        raise ConsistencyError("generator leading monomials are not distinct")
    logger.info(f"Enumerated {len(entries)} generators for m={m} up to weight {weight_max}")
    return table
