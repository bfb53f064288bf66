"""
Spans of generator products and of the bracketed products A_1 Y A_2 ... Y A_k.
"""

import logging
from functools import lru_cache
from typing import Dict, List, Tuple

from ncalg.errors import NormalFormError, WeightBoundError
from ncalg.ncpoly import T1, X, Y, NCPoly
from constants.generators import GeneratorEntry, GeneratorTable
from constants.operators import box
from oracle.kernels import check_weight
from oracle.linalg import rank

logger = logging.getLogger(__name__)


def generator_products(table: GeneratorTable, N: int) -> List[Tuple[GeneratorEntry, ...]]:
    """All sequences of table entries with weights summing to N."""
    if N > table.weight_max:
        raise WeightBoundError(f"weight {N} exceeds table bound {table.weight_max}")
    results: List[Tuple[GeneratorEntry, ...]] = []

    def extend(prefix: Tuple[GeneratorEntry, ...], remaining: int):
        if remaining == 0:
            results.append(prefix)
            return
        for entry in table.entries:
            if entry.weight <= remaining:
                extend(prefix + (entry,), remaining - entry.weight)

    extend((), N)
    return results


def span_dimension(table: GeneratorTable, N: int) -> int:
    """Dimension of the span of the evaluated generator products of weight N."""
    values = []
    for factors in generator_products(table, N):
        value = NCPoly.one()
        for entry in factors:
            value = value * entry.value
        values.append(value.terms)
    dimension = rank(values)
    logger.info(f"Span of {len(values)} generator products at weight {N}: dimension {dimension}")
    return dimension


@lru_cache(maxsize=None)
def _bracketed_products(weight: int, free_ys: int, m: int) -> Tuple[NCPoly, ...]:
    # distinct values of sequences of X, Y, T1 and boxes of sequences,
    # with `free_ys` letters Y outside T1 and box syntax
    if weight < 0 or free_ys < 0:
        return ()
    if weight == 0:
        return (NCPoly.one(),) if free_ys == 0 else ()
    values: Dict[NCPoly, None] = {}
    for atom, atom_weight, atom_ys in _atoms(weight, free_ys, m):
        for rest in _bracketed_products(weight - atom_weight, free_ys - atom_ys, m):
            values[atom * rest] = None
    return tuple(values)


def _atoms(weight: int, free_ys: int, m: int):
    F = X ** m
    yield X, 1, 0
    if free_ys:
        yield Y, m, 1
    yield T1, m + 1, 0
    for inner in range(0, weight - 2 * m + 1):
        for ys in range(free_ys + 1):
            for content in _bracketed_products(inner, ys, m):
                yield box(content, F), inner + 2 * m, ys


def rfn_span_dimension(n: int, m: int, N: int, table: GeneratorTable) -> int:
    """
    Dimension at weight N of the span of A_1 Y A_2 Y ... Y A_k, k <= n, with brackets.

    Only defined for F = X^m: the A_i and the brackets are enumerated as
    sequences of X, T1 and boxes, with at most n - 1 free letters Y.
    """
    if n < 1 or m < 1:
        raise ValueError(f"n and m must be positive, got n={n}, m={m}")
    if table.m != m or table.f != tuple([0] * m + [1]):
        raise NormalFormError("R_F^n check restricted to F = X^m")
    check_weight(N)
    values = []
    for ys in range(n):
        values.extend(p.terms for p in _bracketed_products(N, ys, m))
    dimension = rank(values)
    logger.info(f"Bracketed products with at most {n - 1} free Y at weight {N}: dimension {dimension}")
    return dimension
