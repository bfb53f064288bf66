"""
Surface syntax for polynomials: tokenizer, recursive-descent parser, printer and evaluator.

Grammar:
    expr  := term (('+' | '-') term)*
    term  := unary ('*' unary)*
    unary := '-' unary | power
    power := atom ('^' INT)?
    atom  := NUMBER | 'X' | 'Y' | '(' expr ')' | 'comm' '(' expr ',' expr ')'
           | 'box' '(' expr ')' | 'T' '(' INT ')'

NUMBER is an integer or a fraction p/q written without spaces.
"""

import logging
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

from ncalg.ncpoly import T1, X, Y, NCPoly, commutator
from constants.operators import box

logger = logging.getLogger(__name__)


class ExpressionError(ValueError):
    """Raised for malformed or unevaluable expressions."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} at line {line}, column {column}"
        super().__init__(message)


class ParseError(ExpressionError):
    """Syntax error with the position of the offending token."""


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


NUMBER = "number"
NAME = "name"
PUNCT = "punct"
END = "end"

PUNCTUATION = "+-*^(),"
DIGITS = "0123456789"

MAX_EXPONENT = int(os.getenv("NCALG_MAX_EXPONENT", "64"))
MAX_TERMS = int(os.getenv("NCALG_MAX_TERMS", "100000"))


def tokenize(source: str) -> List[Token]:
    tokens: List[Token] = []
    line, column = 1, 1
    i = 0
    while i < len(source):
        c = source[i]
        if c == "\n":
            line, column = line + 1, 1
            i += 1
            continue
        if c.isspace():
            i += 1
            column += 1
            continue
        start = i
        if c in DIGITS:
            while i < len(source) and source[i] in DIGITS:
                i += 1
            if i + 1 < len(source) and source[i] == "/" and source[i + 1] in DIGITS:
                i += 1
                while i < len(source) and source[i] in DIGITS:
                    i += 1
            tokens.append(Token(NUMBER, source[start:i], line, column))
        elif c.isalpha():
            while i < len(source) and source[i].isalpha():
                i += 1
            tokens.append(Token(NAME, source[start:i], line, column))
        elif c in PUNCTUATION:
            i += 1
            tokens.append(Token(PUNCT, c, line, column))
        else:
            raise ParseError(f"Unexpected character {c!r}", line, column)
        column += i - start
    tokens.append(Token(END, "", line, column))
    return tokens


# ---------- AST ----------

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Neg:
    operand: "Expression"


@dataclass(frozen=True)
class Pow:
    base: "Expression"
    exponent: int


@dataclass(frozen=True)
class Comm:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class BoxExpr:
    argument: "Expression"


@dataclass(frozen=True)
class TSeq:
    index: int


Expression = Union[Num, Sym, BinOp, Neg, Pow, Comm, BoxExpr, TSeq]


# ---------- Parser ----------

class Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.position = 0

    def peek(self) -> Token:
        return self.tokens[self.position]

    def advance(self) -> Token:
        token = self.tokens[self.position]
        if token.kind != END:
            self.position += 1
        return token

    def error(self, message: str, token: Optional[Token] = None) -> ParseError:
        token = token or self.peek()
        found = "end of input" if token.kind == END else repr(token.text)
        return ParseError(f"{message}, found {found}", token.line, token.column)

    def expect(self, text: str) -> Token:
        token = self.peek()
        if token.kind != PUNCT or token.text != text:
            raise self.error(f"Expected {text!r}")
        return self.advance()

    def integer(self) -> int:
        token = self.peek()
        if token.kind != NUMBER or "/" in token.text:
            raise self.error("Expected a nonnegative integer")
        if len(token.text) > len(str(MAX_EXPONENT)) or int(token.text) > MAX_EXPONENT:
            raise self.error(f"Expected an integer at most {MAX_EXPONENT}")
        self.advance()
        return int(token.text)

    def parse(self) -> Expression:
        node = self.expr()
        if self.peek().kind != END:
            raise self.error("Unexpected token")
        return node

    def expr(self) -> Expression:
        node = self.term()
        while self.peek().kind == PUNCT and self.peek().text in "+-":
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expression:
        node = self.unary()
        while self.peek().kind == PUNCT and self.peek().text == "*":
            self.advance()
            node = BinOp("*", node, self.unary())
        return node

    def unary(self) -> Expression:
        if self.peek().kind == PUNCT and self.peek().text == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expression:
        node = self.atom()
        if self.peek().kind == PUNCT and self.peek().text == "^":
            self.advance()
            node = Pow(node, self.integer())
        return node

    def atom(self) -> Expression:
        token = self.peek()
        if token.kind == NUMBER:
            self.advance()
            try:
                return Num(Fraction(token.text))
            except ZeroDivisionError:
                raise self.error("Zero denominator", token) from None
            except ValueError:
                raise self.error("Invalid number", token) from None
        if token.kind == PUNCT and token.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if token.kind == NAME:
            self.advance()
            if token.text in ("X", "Y"):
                return Sym(token.text)
            if token.text == "comm":
                self.expect("(")
                left = self.expr()
                self.expect(",")
                right = self.expr()
                self.expect(")")
                return Comm(left, right)
            if token.text == "box":
                self.expect("(")
                argument = self.expr()
                self.expect(")")
                return BoxExpr(argument)
            if token.text == "T":
                self.expect("(")
                index = self.integer()
                self.expect(")")
                return TSeq(index)
            raise self.error("Unknown name (write products with *)", token)
        raise self.error("Expected an expression")


def parse(source: str) -> Expression:
    return Parser(source).parse()


# ---------- Printer ----------

PRECEDENCE = {"+": 1, "-": 1, "*": 2}
NEG_PRECEDENCE = 3
POW_PRECEDENCE = 4
ATOM_PRECEDENCE = 5


def precedence(node: Expression) -> int:
    if isinstance(node, BinOp):
        return PRECEDENCE[node.op]
    if isinstance(node, Neg):
        return NEG_PRECEDENCE
    if isinstance(node, Pow):
        return POW_PRECEDENCE
    return ATOM_PRECEDENCE


def _wrap(node: Expression, parenthesize: bool) -> str:
    text = to_source(node)
    return f"({text})" if parenthesize else text


def to_source(node: Expression) -> str:
    """Source text with the fewest parentheses that parses back to node."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, BinOp):
        p = PRECEDENCE[node.op]
        left = _wrap(node.left, precedence(node.left) < p)
        right = _wrap(node.right, precedence(node.right) <= p)
        return f"{left}*{right}" if node.op == "*" else f"{left} {node.op} {right}"
    if isinstance(node, Neg):
        return "-" + _wrap(node.operand, precedence(node.operand) < NEG_PRECEDENCE)
    if isinstance(node, Pow):
        return _wrap(node.base, precedence(node.base) < ATOM_PRECEDENCE) + f"^{node.exponent}"
    if isinstance(node, Comm):
        return f"comm({to_source(node.left)}, {to_source(node.right)})"
    if isinstance(node, BoxExpr):
        return f"box({to_source(node.argument)})"
    if isinstance(node, TSeq):
        return f"T({node.index})"
    raise TypeError(f"Not an expression node: {node!r}")


# ---------- Evaluator ----------

def _check_size(terms: int) -> None:
    if terms > MAX_TERMS:
        raise ExpressionError(f"Expression too large: up to {terms} terms, above NCALG_MAX_TERMS={MAX_TERMS}")


def _product(left: NCPoly, right: NCPoly) -> NCPoly:
    _check_size(len(left) * len(right))
    return left * right


def _box(A: NCPoly, F: NCPoly) -> NCPoly:
    _check_size(2 * len(A) * len(F))
    return box(A, F)


def evaluate(node: Expression, F: Optional[NCPoly] = None) -> NCPoly:
    """Value of node in K<X,Y>; box and T(i) with i >= 2 use F."""
    if isinstance(node, Num):
        return NCPoly.constant(node.value)
    if isinstance(node, Sym):
        return X if node.name == "X" else Y
    if isinstance(node, BinOp):
        left, right = evaluate(node.left, F), evaluate(node.right, F)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return _product(left, right)
    if isinstance(node, Neg):
        return -evaluate(node.operand, F)
    if isinstance(node, Pow):
        base, value = evaluate(node.base, F), NCPoly.one()
        for _ in range(node.exponent):
            value = _product(value, base)
        return value
    if isinstance(node, Comm):
        left, right = evaluate(node.left, F), evaluate(node.right, F)
        _check_size(2 * len(left) * len(right))
        return commutator(left, right)
    if isinstance(node, BoxExpr):
        if F is None:
            raise ExpressionError("box(...) needs F; pass --f")
        return _box(evaluate(node.argument, F), F)
    if isinstance(node, TSeq):
        if node.index < 1:
            raise ExpressionError(f"T(i) needs i >= 1, got {node.index}")
        if node.index > 1 and F is None:
            raise ExpressionError(f"T({node.index}) needs F; pass --f")
        value = T1
        for _ in range(node.index - 1):
            value = _box(value, F)
        return value
    raise TypeError(f"Not an expression node: {node!r}")


def parse_polynomial(source: str, F: Optional[NCPoly] = None) -> NCPoly:
    return evaluate(parse(source), F)
