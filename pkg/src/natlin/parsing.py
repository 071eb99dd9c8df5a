"""Text form of linear equations.

Grammar (whitespace ignored)::

    equation := [sign] term (sign term)* '=' [sign] integer
    term     := [integer] identifier
    sign     := '+' | '-'

``-`` may also be written as the Unicode minus sign. Repeated identifiers
have their coefficients summed.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .core import InvalidArgument, LinearEquation

__all__ = ["ParseError", "ParsedEquation", "parse_equation", "render_equation", "render_affine"]

_MINUS_CHARS = "−–‒"
_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+=]))")


class ParseError(InvalidArgument):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


@dataclass(frozen=True)
class ParsedEquation:
    equation: LinearEquation
    source_text: str


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def sign(self, required: bool) -> int:
        kind, value, pos = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            return -1 if value == "-" else 1
        if required:
            raise ParseError(f"expected '+' or '-', found {value or 'end of input'!r}", pos)
        return 1

    def term(self, sign: int) -> tuple[int, str]:
        kind, value, pos = self.peek()
        coeff = 1
        if kind == "int":
            self.take()
            coeff = int(value)
            kind, value, pos = self.peek()
        if kind != "ident":
            raise ParseError(f"expected a variable name, found {value or 'end of input'!r}", pos)
        self.take()
        return sign * coeff, value

    def equation(self) -> tuple[list[tuple[int, str]], int]:
        kind, value, pos = self.peek()
        if kind == "op" and value == "=":
            raise ParseError("empty left-hand side", pos)
        terms = [self.term(self.sign(required=False))]
        while not (self.peek()[0] == "op" and self.peek()[1] == "="):
            if self.peek()[0] == "end":
                raise ParseError("missing '='", self.peek()[2])
            terms.append(self.term(self.sign(required=True)))
        self.take()
        s = self.sign(required=False)
        kind, value, pos = self.take()
        if kind != "int":
            raise ParseError(f"expected an integer right-hand side, found {value or 'end of input'!r}", pos)
        rhs = s * int(value)
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r} after the right-hand side", pos)
        return terms, rhs


def parse_equation(text: str) -> ParsedEquation:
    normalized = text
    for ch in _MINUS_CHARS:
        normalized = normalized.replace(ch, "-")
    terms, rhs = _Parser(normalized).equation()
    merged: dict[str, int] = {}
    for coeff, name in terms:
        merged[name] = merged.get(name, 0) + coeff
    for name, coeff in merged.items():
        if coeff == 0:
            raise ParseError(f"variable {name} has zero merged coefficient")
    eq = LinearEquation(tuple(merged.values()), rhs, tuple(merged))
    return ParsedEquation(eq, text)


def _term(coeff: int, name: str, first: bool) -> str:
    mag = abs(coeff)
    body = name if mag == 1 else f"{mag}{name}"
    if first:
        return body if coeff > 0 else f"-{body}"
    return f"+ {body}" if coeff > 0 else f"- {body}"


def render_equation(eq: LinearEquation) -> str:
    """ASCII text that :func:`parse_equation` maps back to ``eq``."""
    parts = [_term(a, name, i == 0) for i, (a, name) in enumerate(zip(eq.coeffs, eq.var_names))]
    return f"{' '.join(parts)} = {eq.rhs}"


def render_affine(coeffs: Sequence[int], constant: int, names: Sequence[str]) -> str:
    """``2k1 - k2 + 3`` style rendering; ``0`` for the zero form."""
    parts = []
    for a, name in zip(coeffs, names):
        if a:
            parts.append(_term(a, name, not parts))
    if constant or not parts:
        if not parts:
            parts.append(str(constant))
        else:
            parts.append(f"+ {constant}" if constant > 0 else f"- {-constant}")
    return " ".join(parts)
