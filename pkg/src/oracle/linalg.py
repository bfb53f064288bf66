"""
Sparse exact Gaussian elimination over the rationals.
Vectors are dicts from a hashable column key to a nonzero Fraction.
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, Hashable, List, Mapping, Sequence, Tuple

logger = logging.getLogger(__name__)

Vector = Dict[Hashable, Fraction]


def axpy(target: Vector, factor: Fraction, source: Mapping[Hashable, Fraction]) -> None:
    """target -= factor * source, in place, dropping zeros."""
    for key, value in source.items():
        updated = target.get(key, 0) - factor * value
        if updated:
            target[key] = updated
        else:
            target.pop(key, None)


def kernel_vectors(images: Sequence[Mapping[Hashable, Fraction]]) -> List[Dict[int, Fraction]]:
    """
    A basis of the linear relations among images.

    Each returned vector maps indices of images to coefficients c_i with
    sum c_i * images[i] = 0.
    """
    rows: List[Tuple[Hashable, Vector, Dict[int, Fraction]]] = []
    kernel: List[Dict[int, Fraction]] = []
    for i, image in enumerate(images):
        vector: Vector = dict(image)
        combination: Dict[int, Fraction] = {i: Fraction(1)}
        for pivot, row, row_combination in rows:
            if pivot in vector:
                factor = vector[pivot] / row[pivot]
                axpy(vector, factor, row)
                axpy(combination, factor, row_combination)
        if vector:
            rows.append((max(vector), vector, combination))
        else:
            kernel.append(combination)
    logger.debug(f"Eliminated {len(images)} images: rank {len(rows)}, nullity {len(kernel)}")
    return kernel


def rank(vectors: Sequence[Mapping[Hashable, Fraction]]) -> int:
    return len(vectors) - len(kernel_vectors(vectors))


def reduced_echelon(
    vectors: Sequence[Mapping[Hashable, Fraction]],
    priority: Callable[[Hashable], int],
) -> List[Vector]:
    """
    Reduced row echelon basis of the span of vectors.

    The pivot of each row is its column with the smallest priority; pivots
    carry coefficient 1 and no other row has an entry in a pivot column.
    Rows are returned in increasing pivot priority.
    """
    rows: Dict[Hashable, Vector] = {}
    for source in vectors:
        vector: Vector = dict(source)
        for pivot, row in rows.items():
            if pivot in vector:
                axpy(vector, vector[pivot], row)
        if not vector:
            continue
        pivot = min(vector, key=priority)
        scale = vector[pivot]
        vector = {key: value / scale for key, value in vector.items()}
        for row in rows.values():
            if pivot in row:
                axpy(row, row[pivot], vector)
        rows[pivot] = vector
    return [rows[pivot] for pivot in sorted(rows, key=priority)]
