"""
Words over the alphabet {X, Y}: the monomials of the free algebra.
A word is a plain string of the letters "X" and "Y"; the empty string is the monomial 1.
"""

import logging
from enum import Enum
from functools import lru_cache
from typing import List, Tuple

logger = logging.getLogger(__name__)

Word = str

X_LETTER = "X"
Y_LETTER = "Y"
ALPHABET = (X_LETTER, Y_LETTER)
ONE_WORD: Word = ""


class Ordering(Enum):
    """Result of comparing two words."""
    LESS = -1
    EQUAL = 0
    GREATER = 1


def validate_word(word: str) -> Word:
    """Return the word unchanged, or raise if it uses letters outside {X, Y}."""
    if not isinstance(word, str):
        raise TypeError(f"Word must be a string of X and Y letters, got {type(word).__name__}")
    for letter in word:
        if letter not in ALPHABET:
            raise ValueError(f"Invalid letter {letter!r} in word {word!r}")
    return word


def lex_compare(w1: Word, w2: Word) -> Ordering:
    """
    Compare two words left to right with Y > X; a proper prefix is smaller.

    Python string comparison already has exactly this behaviour for the
    letters "X" < "Y", so the order is the native one.
    """
    if w1 == w2:
        return Ordering.EQUAL
    return Ordering.GREATER if w1 > w2 else Ordering.LESS


def weight(word: Word, m: int) -> int:
    """Weight with w(X) = 1 and w(Y) = m."""
    if m < 0:
        raise ValueError(f"Weight parameter must be nonnegative, got {m}")
    return word.count(X_LETTER) + m * word.count(Y_LETTER)


def y_weight(m: int) -> int:
    """Weight of the letter Y in the grading used for the constants of a degree-m derivation."""
    return m if m > 0 else 1


def graded_weight(word: Word, m: int) -> int:
    """
    Grading used by the constants machinery.

    For m >= 1 this is weight(word, m); for m = 0 it is the total degree,
    since the derivation Y -> const is homogeneous of degree -1 there.
    """
    return word.count(X_LETTER) + y_weight(m) * word.count(Y_LETTER)


def degrees(word: Word) -> Tuple[int, int]:
    """Return (number of X letters, number of Y letters)."""
    return word.count(X_LETTER), word.count(Y_LETTER)


@lru_cache(maxsize=None)
def _words_of_weight(n: int, wy: int) -> Tuple[Word, ...]:
    if n < 0:
        return ()
    if n == 0:
        return (ONE_WORD,)
    result = [X_LETTER + w for w in _words_of_weight(n - 1, wy)]
    result += [Y_LETTER + w for w in _words_of_weight(n - wy, wy)]
    return tuple(sorted(result, reverse=True))


def words_of_weight(n: int, m: int) -> List[Word]:
    """All words of graded weight exactly n, lex descending."""
    return list(_words_of_weight(n, y_weight(m)))


def words_up_to_weight(n: int, m: int) -> List[Word]:
    """All words of graded weight at most n, by weight descending then lex descending."""
    result: List[Word] = []
    for k in range(n, -1, -1):
        result.extend(words_of_weight(k, m))
    return result


def words_of_length(n: int) -> List[Word]:
    """All words of length n, lex descending."""
    return words_of_weight(n, 1)


def format_word(word: Word) -> str:
    """Compact display form: runs become powers, e.g. YYXX -> Y^2X^2; the empty word is 1."""
    if not word:
        return "1"
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        run = j - i
        parts.append(word[i] if run == 1 else f"{word[i]}^{run}")
        i = j
    return "".join(parts)
