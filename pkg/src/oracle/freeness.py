"""
Freeness certificate: generator leading monomials form a code up to a weight bound.
"""

import logging
from typing import Dict, Tuple

from ncalg.errors import WeightBoundError
from ncalg.words import Word
from constants.generators import GeneratorTable

logger = logging.getLogger(__name__)


def verify_freeness(table: GeneratorTable, N: int) -> bool:
    """
    True iff no two distinct generator sequences of total weight <= N have the same concatenated leading monomial.

    This covers both a generator leading monomial that splits into smaller
    ones and a concatenation with two different factorizations.
    """
    if N > table.weight_max:
        raise WeightBoundError(f"weight {N} exceeds table bound {table.weight_max}")
    seen: Dict[Word, Tuple[str, ...]] = {}
    entries = [e for e in table.entries if e.weight <= N]

    def extend(word: Word, symbols: Tuple[str, ...], remaining: int) -> bool:
        for entry in entries:
            if entry.weight > remaining:
                continue
            longer = word + entry.lm
            sequence = symbols + (entry.symbol,)
            if longer in seen:
                logger.warning(f"{longer} factors as both {seen[longer]} and {sequence}")
                return False
            seen[longer] = sequence
            if not extend(longer, sequence, remaining - entry.weight):
                return False
        return True

    free = extend("", (), N)
    logger.info(f"Freeness up to weight {N} for m={table.m}: {'holds' if free else 'fails'} ({len(seen)} products)")
    return free
