"""
Sparse noncommutative polynomials over the rationals.
Elements of the free associative algebra K<X,Y> with K = Q, kept in canonical form.
"""

import logging
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from ncalg.errors import ZeroPolynomialError
from ncalg.words import (
    ONE_WORD,
    X_LETTER,
    Y_LETTER,
    Word,
    format_word,
    graded_weight,
    validate_word,
)

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction, str]


def to_rational(value: Scalar) -> Fraction:
    """Convert an exact scalar (int, Fraction, or "p/q" string) to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("Booleans are not coefficients")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"Coefficients must be exact rationals, got {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """Serialized coefficient form, always p/q."""
    return f"{value.numerator}/{value.denominator}"


class NCPoly:
    """
    Immutable polynomial in the free algebra K<X,Y>.

    Terms are stored without zero coefficients and iterated in lex descending
    word order, so equality is map equality and printing is reproducible.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[str, Scalar]] = None):
        cleaned: Dict[Word, Fraction] = {}
        if terms:
            for word, coeff in terms.items():
                c = to_rational(coeff)
                if c:
                    cleaned[validate_word(word)] = c
        self._terms = {w: cleaned[w] for w in sorted(cleaned, reverse=True)}
        self._hash: Optional[int] = None

    @classmethod
    def _from_clean(cls, terms: Dict[Word, Fraction]) -> "NCPoly":
        poly = cls.__new__(cls)
        poly._terms = {w: terms[w] for w in sorted(terms, reverse=True) if terms[w]}
        poly._hash = None
        return poly

    # ---------- Constructors ----------

    @classmethod
    def zero(cls) -> "NCPoly":
        return cls._from_clean({})

    @classmethod
    def one(cls) -> "NCPoly":
        return cls._from_clean({ONE_WORD: Fraction(1)})

    @classmethod
    def constant(cls, value: Scalar) -> "NCPoly":
        return cls({ONE_WORD: value})

    @classmethod
    def monomial(cls, word: Word, coeff: Scalar = 1) -> "NCPoly":
        return cls({word: coeff})

    @classmethod
    def x(cls) -> "NCPoly":
        return cls._from_clean({X_LETTER: Fraction(1)})

    @classmethod
    def y(cls) -> "NCPoly":
        return cls._from_clean({Y_LETTER: Fraction(1)})

    @classmethod
    def from_x_coefficients(cls, coeffs) -> "NCPoly":
        """Build f(X) from its coefficient list, constant term first."""
        return cls({X_LETTER * i: c for i, c in enumerate(coeffs)})

    # ---------- Accessors ----------

    @property
    def terms(self) -> Mapping[Word, Fraction]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[Tuple[Word, Fraction]]:
        return iter(self._terms.items())

    def words(self) -> List[Word]:
        return list(self._terms)

    def coefficient(self, word: Word) -> Fraction:
        return self._terms.get(word, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_constant(self) -> bool:
        return all(w == ONE_WORD for w in self._terms)

    def depends_only_on_x(self) -> bool:
        return all(Y_LETTER not in w for w in self._terms)

    def x_coefficients(self) -> List[Fraction]:
        """Coefficient list of a polynomial in X only, constant term first."""
        if not self.depends_only_on_x():
            raise ValueError(f"{self} is not a polynomial in X alone")
        if not self._terms:
            return []
        degree = max(len(w) for w in self._terms)
        return [self.coefficient(X_LETTER * i) for i in range(degree + 1)]

    def leading_monomial(self) -> Word:
        """Lex-largest word with nonzero coefficient."""
        if not self._terms:
            raise ZeroPolynomialError("no leading monomial")
        return next(iter(self._terms))

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.leading_monomial()]

    def max_weight(self, m: int) -> int:
        if not self._terms:
            raise ZeroPolynomialError("zero polynomial has no weight")
        return max(graded_weight(w, m) for w in self._terms)

    def homogeneous_component(self, n: int, m: int) -> "NCPoly":
        return NCPoly._from_clean({w: c for w, c in self._terms.items() if graded_weight(w, m) == n})

    def top_component(self, m: int) -> "NCPoly":
        """The highest graded-weight part of a nonzero polynomial."""
        return self.homogeneous_component(self.max_weight(m), m)

    def is_homogeneous(self, m: int) -> bool:
        return len({graded_weight(w, m) for w in self._terms}) <= 1

    # ---------- Arithmetic ----------

    @staticmethod
    def _coerce(other) -> Optional["NCPoly"]:
        if isinstance(other, NCPoly):
            return other
        if isinstance(other, (int, Fraction, str)) and not isinstance(other, bool):
            return NCPoly.constant(other)
        return None

    def __add__(self, other) -> "NCPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self._terms)
        for w, c in other._terms.items():
            result[w] = result.get(w, 0) + c
        return NCPoly._from_clean(result)

    __radd__ = __add__

    def __neg__(self) -> "NCPoly":
        return NCPoly._from_clean({w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> "NCPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "NCPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, value: Scalar) -> "NCPoly":
        c = to_rational(value)
        if not c:
            return NCPoly.zero()
        return NCPoly._from_clean({w: c * a for w, a in self._terms.items()})

    def __mul__(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            result: Dict[Word, Fraction] = {}
            for w1, c1 in self._terms.items():
                for w2, c2 in other._terms.items():
                    w = w1 + w2
                    result[w] = result.get(w, 0) + c1 * c2
            return NCPoly._from_clean(result)
        if isinstance(other, (int, Fraction, str)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "NCPoly":
        if isinstance(other, (int, Fraction, str)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other) -> "NCPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "NCPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Exponent must be a nonnegative integer, got {exponent!r}")
        result = NCPoly.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def substitute(self, x_image: "NCPoly", y_image: "NCPoly") -> "NCPoly":
        """Apply the algebra endomorphism X -> x_image, Y -> y_image."""
        images = {X_LETTER: x_image, Y_LETTER: y_image}
        cache: Dict[Word, NCPoly] = {ONE_WORD: NCPoly.one()}

        def image_of(word: Word) -> NCPoly:
            if word not in cache:
                cache[word] = image_of(word[:-1]) * images[word[-1]]
            return cache[word]

        result: Dict[Word, Fraction] = {}
        for w, c in self._terms.items():
            for u, a in image_of(w)._terms.items():
                result[u] = result.get(u, 0) + c * a
        return NCPoly._from_clean(result)

    # ---------- Comparison and display ----------

    def __eq__(self, other) -> bool:
        if isinstance(other, str):
            return NotImplemented
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        # constants hash like their scalar
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self._terms.get(ONE_WORD, Fraction(0)))
            else:
                self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"NCPoly({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for w, c in self._terms.items():
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if not w:
                body = str(magnitude)
            elif magnitude == 1:
                body = format_word(w)
            else:
                body = f"{magnitude} {format_word(w)}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


ZERO = NCPoly.zero()
ONE = NCPoly.one()
X = NCPoly.x()
Y = NCPoly.y()


def commutator(p: NCPoly, q: NCPoly) -> NCPoly:
    """[p, q] = pq - qp."""
    return p * q - q * p


def leading_monomial(p: NCPoly) -> Word:
    return p.leading_monomial()


T1 = commutator(Y, X)
