"""
Polynomial and Index Parsing

Grammar (whitespace ignored):

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INTEGER)?
    atom   := INTEGER | "x" | "y" | "(" expr ")"

Integer literals are reduced mod p as they are read.
"""

from dataclasses import dataclass
from typing import List, Optional
import logging
import re

from src.arith import BigIndex, BiPoly, PrimeField
from src.errors import NonconformingExponent, ParseError

logger = logging.getLogger(__name__)

# Largest exponent accepted on a polynomial factor.
MAX_POLY_EXPONENT = 100_000

_TOKEN_PATTERN = re.compile(r"\s*(?:(\d+)|([xy])|([-+*^()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "var", "op" or "end"
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    """Split text into tokens, each carrying its offset in text."""
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN_PATTERN.match(text, position)
        if match is None:
            offset = position + len(text[position:]) - len(text[position:].lstrip())
            raise ParseError(f"unexpected character {text[offset]!r}", offset, text)
        number, var, op = match.groups()
        start = match.start(1) if number else match.start(2) if var else match.start(3)
        if number:
            tokens.append(Token("int", number, start))
        elif var:
            tokens.append(Token("var", var, start))
        else:
            tokens.append(Token("op", op, start))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class PolyParser:
    """Recursive-descent parser evaluating straight into BiPoly arithmetic."""

    def __init__(self, text: str, field: PrimeField):
        self.text = text
        self.field = field
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _accept(self, op: str) -> Optional[Token]:
        if self.current.kind == "op" and self.current.text == op:
            return self._advance()
        return None

    def _error(self, message: str, token: Optional[Token] = None) -> ParseError:
        token = token or self.current
        return ParseError(message, token.position, self.text)

    def parse(self) -> BiPoly:
        if self.current.kind == "end":
            raise self._error("empty polynomial")
        value = self._expr()
        if self.current.kind != "end":
            raise self._error(f"unexpected {self.current.text!r}")
        return value

    def _expr(self) -> BiPoly:
        value = self._term()
        while True:
            if self._accept("+"):
                value = value + self._term()
            elif self._accept("-"):
                value = value - self._term()
            else:
                return value

    def _term(self) -> BiPoly:
        value = self._unary()
        while self._accept("*"):
            value = value * self._unary()
        return value

    def _unary(self) -> BiPoly:
        if self._accept("-"):
            return -self._unary()
        if self._accept("+"):
            return self._unary()
        return self._power()

    def _power(self) -> BiPoly:
        base = self._atom()
        caret = self._accept("^")
        if caret is None:
            return base
        token = self.current
        if token.kind == "op" and token.text == "-":
            raise NonconformingExponent("negative exponent", token.position, self.text)
        if token.kind != "int":
            raise self._error("exponent must be an integer literal")
        self._advance()
        exponent = int(token.text)
        if exponent > MAX_POLY_EXPONENT:
            raise NonconformingExponent(
                f"exponent {exponent} exceeds {MAX_POLY_EXPONENT}", token.position, self.text
            )
        return base ** exponent

    def _atom(self) -> BiPoly:
        token = self.current
        if token.kind == "int":
            self._advance()
            return BiPoly.constant(self.field, int(token.text) % self.field.p)
        if token.kind == "var":
            self._advance()
            key = (1, 0) if token.text == "x" else (0, 1)
            return BiPoly.from_terms(self.field, {key: 1})
        if self._accept("("):
            value = self._expr()
            if self._accept(")") is None:
                raise self._error("expected ')'")
            return value
        if token.kind == "end":
            raise self._error("unexpected end of input")
        raise self._error(f"unexpected {token.text!r}")


def parse_poly(text: str, p: int) -> BiPoly:
    """
    Parse a polynomial in x and y over F_p.

    Args:
        text: e.g. "x + y - y^3"
        p: Prime characteristic

    Returns:
        Canonical BiPoly

    Raises:
        ParseError: with the offending position
        NonconformingExponent: for negative or oversized exponents
    """
    E = PolyParser(text, PrimeField(p)).parse()
    logger.debug(f"Parsed {text!r} over F_{p}: degrees ({E.deg_x}, {E.deg_y})")
    return E


def parse_index(text: str) -> BigIndex:
    """Decimal, "10^k" or "a*10^k"."""
    return BigIndex.parse(text)
