"""
Text grammar for Laurent polynomials.

    poly   := [sign] term (sign term)*
    term   := factor ('*' factor)*
    factor := NUMBER | NUMBER '/' NUMBER | VARIABLE ['^' [sign] INT]

Variables are x1..xn, or names bound by an explicit ordering. Whitespace
(including newlines) is ignored; errors carry 1-based line and column.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from core.constants import MAX_ABS_EXPONENT
from core.exceptions import InputError, ParseError
from core.validators import validate_variable_names
from models.laurent import Exponent, LaurentPolynomial, PolySystem, default_names

logger = logging.getLogger(__name__)

_TOKEN_SPEC = [
    ("NUMBER", r"\d+"),
    ("NAME", r"[A-Za-z_][A-Za-z0-9_]*"),
    ("OP", r"[+\-*^/()]"),
    ("NEWLINE", r"\n"),
    ("SKIP", r"[ \t\r]+"),
    ("MISMATCH", r"."),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in _TOKEN_SPEC))
_INDEXED_VARIABLE_RE = re.compile(r"x([1-9][0-9]*)$")


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    """Split text into tokens, tracking line and column"""
    tokens = []
    line, line_start = 1, 0
    for match in _TOKEN_RE.finditer(text):
        kind, value = match.lastgroup, match.group()
        column = match.start() - line_start + 1
        if kind == "NEWLINE":
            line += 1
            line_start = match.end()
            continue
        if kind == "SKIP":
            continue
        if kind == "MISMATCH":
            raise ParseError(f"Unexpected character {value!r}", line, column)
        tokens.append(Token(kind, value, line, column))
    return tokens


class LaurentParser:
    """Recursive-descent parser producing exact term maps"""

    def __init__(self, text: str, names: Optional[Sequence[str]] = None):
        self.text = text
        self.names = validate_variable_names(names) if names is not None else None
        self.tokens = tokenize(text)
        self.position = 0
        self._end_line, self._end_column = self._end_location(text)

    @staticmethod
    def _end_location(text: str) -> Tuple[int, int]:
        lines = text.split("\n")
        return len(lines), len(lines[-1]) + 1

    # -------------------------------------------------------------------------
    # Token helpers
    # -------------------------------------------------------------------------

    def _peek(self) -> Optional[Token]:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def _advance(self) -> Token:
        token = self._peek()
        if token is None:
            raise ParseError("Unexpected end of input", self._end_line, self._end_column)
        self.position += 1
        return token

    def _error(self, message: str, token: Optional[Token]) -> ParseError:
        if token is None:
            return ParseError(message, self._end_line, self._end_column)
        return ParseError(message, token.line, token.column)

    def _accept_op(self, *ops: str) -> Optional[Token]:
        token = self._peek()
        if token is not None and token.kind == "OP" and token.value in ops:
            self.position += 1
            return token
        return None

    # -------------------------------------------------------------------------
    # Grammar
    # -------------------------------------------------------------------------

    def parse_terms(self) -> List[Tuple[Fraction, Dict[int, int]]]:
        """Parse the whole input into (coefficient, {variable index: exponent}) terms"""
        if not self.tokens:
            raise ParseError("Empty polynomial", 1, 1)

        terms = []
        sign = -1 if self._accept_op("-") else 1
        if sign == 1:
            self._accept_op("+")
        terms.append(self._term(sign))

        while self._peek() is not None:
            token = self._accept_op("+", "-")
            if token is None:
                raise self._error(f"Expected '+' or '-', got {self._peek().value!r}", self._peek())
            terms.append(self._term(-1 if token.value == "-" else 1))
        return terms

    def _term(self, sign: int) -> Tuple[Fraction, Dict[int, int]]:
        coefficient = Fraction(sign)
        powers: Dict[int, int] = {}
        while True:
            token = self._advance()
            if token.kind == "NUMBER":
                coefficient *= self._number(token)
            elif token.kind == "NAME":
                index = self._variable_index(token)
                exponent = self._exponent()
                powers[index] = powers.get(index, 0) + exponent
                if abs(powers[index]) > MAX_ABS_EXPONENT:
                    raise self._error(f"Exponent overflow on {token.value}", token)
            else:
                raise self._error(f"Expected a number or variable, got {token.value!r}", token)

            if not self._accept_op("*"):
                return coefficient, powers

    def _number(self, token: Token) -> Fraction:
        numerator = int(token.value)
        if self._accept_op("/"):
            denominator_token = self._advance()
            if denominator_token.kind != "NUMBER":
                raise self._error("Expected a denominator", denominator_token)
            denominator = int(denominator_token.value)
            if denominator == 0:
                raise self._error("Zero denominator", denominator_token)
            return Fraction(numerator, denominator)
        return Fraction(numerator)

    def _exponent(self) -> int:
        if not self._accept_op("^"):
            return 1
        parenthesized = self._accept_op("(") is not None
        sign = -1 if self._accept_op("-") else 1
        if sign == 1:
            self._accept_op("+")
        token = self._advance()
        if token.kind != "NUMBER":
            raise self._error(f"Expected an integer exponent, got {token.value!r}", token)
        if len(token.value) > len(str(MAX_ABS_EXPONENT)) or int(token.value) > MAX_ABS_EXPONENT:
            raise self._error(f"Exponent overflow: {token.value}", token)
        if parenthesized and not self._accept_op(")"):
            raise self._error("Expected ')'", self._peek())
        return sign * int(token.value)

    def _variable_index(self, token: Token) -> int:
        if self.names is not None:
            if token.value not in self.names:
                raise self._error(f"Unknown variable {token.value!r}; declared {list(self.names)}", token)
            return self.names.index(token.value)

        match = _INDEXED_VARIABLE_RE.match(token.value)
        if not match:
            raise self._error(f"Unknown variable {token.value!r}; expected x1, x2, ...", token)
        return int(match.group(1)) - 1


def _assemble(terms: List[Tuple[Fraction, Dict[int, int]]], num_vars: int) -> LaurentPolynomial:
    term_map: Dict[Exponent, Fraction] = {}
    for coefficient, powers in terms:
        exponent = [0] * num_vars
        for index, power in powers.items():
            exponent[index] = power
        key = tuple(exponent)
        term_map[key] = term_map.get(key, Fraction(0)) + coefficient
    return LaurentPolynomial(num_vars, term_map)


def _infer_num_vars(parsed: List[List[Tuple[Fraction, Dict[int, int]]]], names, num_vars: Optional[int]) -> int:
    if names is not None:
        return len(names)
    highest = max((index + 1 for terms in parsed for _, powers in terms for index in powers), default=1)
    if num_vars is None:
        return highest
    if highest > num_vars:
        raise InputError(f"Variable x{highest} used with num_vars = {num_vars}")
    return num_vars


def parse(text: str, names: Optional[Sequence[str]] = None, num_vars: Optional[int] = None) -> LaurentPolynomial:
    """Parse one Laurent polynomial"""
    terms = LaurentParser(text, names).parse_terms()
    return _assemble(terms, _infer_num_vars([terms], names, num_vars))


def parse_system(texts: Sequence[str], names: Optional[Sequence[str]] = None,
                 num_vars: Optional[int] = None) -> PolySystem:
    """Parse several polynomials sharing one variable ordering"""
    if not texts:
        raise InputError("A system needs at least one polynomial")
    parsed = [LaurentParser(text, names).parse_terms() for text in texts]
    n = _infer_num_vars(parsed, names, num_vars)
    polys = [_assemble(terms, n) for terms in parsed]
    return PolySystem(n, polys, names if names is not None else default_names(n))
