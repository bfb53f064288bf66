"""
Bracketed words: the syntax of constants.

A bracketed word is a sequence of atoms X^j, T1^i and {A}, where {A} stands
for box(A). Sequences are kept canonical (adjacent powers merged, nested
sequences flattened) so equal bracketings compare equal.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple, Union

from ncalg.errors import PermissibilityError
from ncalg.ncpoly import T1, X, NCPoly
from ncalg.words import X_LETTER, Y_LETTER, Word
from constants.operators import box

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class XPow:
    exponent: int = 1

    def __post_init__(self):
        if self.exponent < 1:
            raise ValueError(f"X power must be positive, got {self.exponent}")

    def __str__(self) -> str:
        return "X" if self.exponent == 1 else f"X^{self.exponent}"


@dataclass(frozen=True)
class T1Pow:
    exponent: int = 1

    def __post_init__(self):
        if self.exponent < 1:
            raise ValueError(f"T1 power must be positive, got {self.exponent}")

    def __str__(self) -> str:
        return "T1" if self.exponent == 1 else f"T1^{self.exponent}"


@dataclass(frozen=True)
class Box:
    content: "BracketedWord"

    def __post_init__(self):
        if not self.content.items:
            raise ValueError("Box argument must be nonempty")

    def __str__(self) -> str:
        return "{" + str(self.content) + "}"


Atom = Union[XPow, T1Pow, Box]


@dataclass(frozen=True)
class BracketedWord:
    items: Tuple[Atom, ...] = ()

    def __post_init__(self):
        for left, right in zip(self.items, self.items[1:]):
            if type(left) is type(right) and not isinstance(left, Box):
                raise ValueError(f"Adjacent powers {left} {right} must be merged")

    @classmethod
    def of(cls, *parts: Union[Atom, "BracketedWord"]) -> "BracketedWord":
        """Canonical sequence from atoms and sequences, merging adjacent powers."""
        merged = []
        for part in parts:
            atoms = part.items if isinstance(part, BracketedWord) else (part,)
            for atom in atoms:
                if merged and type(atom) is type(merged[-1]) and not isinstance(atom, Box):
                    atom = type(atom)(merged[-1].exponent + atom.exponent)
                    merged.pop()
                merged.append(atom)
        return cls(tuple(merged))

    def __bool__(self) -> bool:
        return bool(self.items)

    def is_boxed(self) -> bool:
        """A single {A}: the shape of every generator besides X and T1."""
        return len(self.items) == 1 and isinstance(self.items[0], Box)

    def box_count(self) -> int:
        return sum(1 + atom.content.box_count() for atom in self.items if isinstance(atom, Box))

    def __str__(self) -> str:
        if not self.items:
            return "1"
        return " ".join(str(atom) for atom in self.items)


def boxed(*parts: Union[Atom, BracketedWord]) -> BracketedWord:
    """{parts} as a one-atom bracketed word."""
    return BracketedWord((Box(BracketedWord.of(*parts)),))


def nested_box(depth: int) -> BracketedWord:
    """T_{depth+1} written as depth boxes around T1."""
    bw = BracketedWord.of(T1Pow(1))
    for _ in range(depth):
        bw = BracketedWord((Box(bw),))
    return bw


def bracketed_weight(bw: BracketedWord, m: int) -> int:
    """
    Weight of the value of bw.

    For m >= 1: X has weight 1, T1 weight m+1 and {V} weight w(V)+2m.
    For m = 0 the grading is total degree: T1 has degree 2 and {V} degree w(V)+1.
    """
    total = 0
    for atom in bw.items:
        if isinstance(atom, XPow):
            total += atom.exponent
        elif isinstance(atom, T1Pow):
            total += atom.exponent * (m + 1 if m else 2)
        else:
            total += bracketed_weight(atom.content, m) + (2 * m if m else 1)
    return total


@lru_cache(maxsize=4096)
def eval_bracketed(bw: BracketedWord, F: NCPoly) -> NCPoly:
    """Value in K<X,Y>: X^j -> X^j, T1^i -> T1^i, {V} -> box(V, F), sequences multiply."""
    value = NCPoly.one()
    for atom in bw.items:
        if isinstance(atom, XPow):
            value = value * X ** atom.exponent
        elif isinstance(atom, T1Pow):
            value = value * T1 ** atom.exponent
        else:
            value = value * box(eval_bracketed(atom.content, F), F)
    return value


def is_permissible(bw: BracketedWord, m: int) -> bool:
    """
    True iff bw has the root shape T1^{i1} X^{j1} ... X^{j(k-1)} T1^{ik} at every level.

    Each sequence is nonempty, starts and ends with a T1 power or a box,
    every X power is below m, and every box argument is permissible.
    """
    if m < 1:
        raise ValueError(f"Permissibility is defined for m >= 1, got {m}")
    items = bw.items
    if not items or isinstance(items[0], XPow) or isinstance(items[-1], XPow):
        return False
    for atom in items:
        if isinstance(atom, XPow) and atom.exponent >= m:
            return False
        if isinstance(atom, Box) and not is_permissible(atom.content, m):
            return False
    return True


def _symbolic_word(bw: BracketedWord, m: int) -> Word:
    parts = []
    for atom in bw.items:
        if isinstance(atom, XPow):
            parts.append(X_LETTER * atom.exponent)
        elif isinstance(atom, T1Pow):
            parts.append((Y_LETTER + X_LETTER) * atom.exponent)
        else:
            parts.append(Y_LETTER + _symbolic_word(atom.content, m) + X_LETTER * m)
    return "".join(parts)


def symbolic_leading_monomial(bw: BracketedWord, m: int) -> Word:
    """
    Leading monomial of eval_bracketed(bw, X^m) read off the syntax.

    T1 becomes YX, each left bracket Y and each right bracket X^m.
    """
    if not is_permissible(bw, m):
        raise PermissibilityError(f"{bw} is not permissible for m = {m}")
    return _symbolic_word(bw, m)
