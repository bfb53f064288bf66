"""
Recover the bracketing of a boxed generator from its leading monomial.
"""

import logging
import re
from typing import List, Union

from ncalg.errors import DecodeError
from ncalg.words import Word, validate_word
from constants.brackets import Atom, Box, BracketedWord, T1Pow, XPow, is_permissible, symbolic_leading_monomial

logger = logging.getLogger(__name__)

SEGMENT_PATTERN = re.compile(r"(Y+)(X+)")
WORD_PATTERN = re.compile(r"(?:Y+X+)+")

OPEN = "{"
CLOSE = "}"

Token = Union[str, Atom]


def _tokens(word: Word, m: int) -> List[Token]:
    # Y^b X^a -> (b-1) open brackets, T1, floor((a-1)/m) close brackets, X^((a-1) mod m)
    tokens: List[Token] = []
    for ys, xs in SEGMENT_PATTERN.findall(word):
        closes, rest = divmod(len(xs) - 1, m)
        tokens.extend([OPEN] * (len(ys) - 1))
        tokens.append(T1Pow(1))
        tokens.extend([CLOSE] * closes)
        if rest:
            tokens.append(XPow(rest))
    return tokens


def decode(word: Word, m: int) -> BracketedWord:
    """
    The unique permissible boxed word whose leading monomial is word.

    Raises:
        DecodeError: word is not the leading monomial of a boxed generator
    """
    if m < 1:
        raise DecodeError(f"decoding needs m >= 1, got {m}")
    validate_word(word)
    if not WORD_PATTERN.fullmatch(word):
        raise DecodeError(f"not a generator leading monomial: {word!r}")

    stack: List[List[Atom]] = [[]]
    for token in _tokens(word, m):
        if token == OPEN:
            stack.append([])
        elif token == CLOSE:
            if len(stack) == 1 or not stack[-1]:
                raise DecodeError(f"not a generator leading monomial: {word!r} (unbalanced brackets)")
            content = BracketedWord.of(*stack.pop())
            stack[-1].append(Box(content))
        else:
            stack[-1].append(token)
    if len(stack) != 1:
        raise DecodeError(f"not a generator leading monomial: {word!r} (unbalanced brackets)")

    result = BracketedWord.of(*stack[0])
    if not result.is_boxed() or not is_permissible(result, m):
        raise DecodeError(f"not a generator leading monomial: {word!r}")
    if symbolic_leading_monomial(result, m) != word:
        raise DecodeError(f"not a generator leading monomial: {word!r} (round trip failed)")
    logger.debug(f"decoded {word} as {result}")
    return result
