"""Domain expression grammar: parsing and printing.

    domain := factor ( ("x" | "*") factor )*
    factor := "I(" int "," int ")" | "II(" int ")" | "III(" int ")"
            | "IV(" int ")" | "V" | "VI" | "Ball(" int ")"

Whitespace between tokens is ignored.  Ball(n) is the open unit ball in
complex n-space, i.e. the rank-1 factor I(n, 1).  format_domain prints the
normal form back in the same grammar, so parse/print round-trips are
stable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .cartan import CartanFactor, make_factor
from .domain import Domain, product
from .errors import DomainSyntaxError

_TOKEN = re.compile(r"\s*(Ball|III|II|IV|VI|I|V|\d+|[(),]|[x*])")

_FAMILY_ARITY = {"I": 2, "II": 1, "III": 1, "IV": 1, "V": 0, "VI": 0, "Ball": 1}


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise DomainSyntaxError(at, "a factor, separator, or integer", repr(stripped[0]))
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.at = 0

    def peek(self):
        return self.tokens[self.at][0] if self.at < len(self.tokens) else None

    def fail(self, expected):
        if self.at < len(self.tokens):
            tok, pos = self.tokens[self.at]
            raise DomainSyntaxError(pos, expected, repr(tok))
        raise DomainSyntaxError(len(self.text), expected, "end of input")

    def expect(self, literal):
        if self.peek() != literal:
            self.fail(repr(literal))
        self.at += 1

    def integer(self):
        tok = self.peek()
        if tok is None or not tok.isdigit():
            self.fail("an integer")
        self.at += 1
        return int(tok)

    def factor(self) -> CartanFactor:
        name = self.peek()
        if name not in _FAMILY_ARITY:
            self.fail("a factor (I, II, III, IV, V, VI, or Ball)")
        self.at += 1
        arity = _FAMILY_ARITY[name]
        params = []
        if arity:
            self.expect("(")
            params.append(self.integer())
            for _ in range(arity - 1):
                self.expect(",")
                params.append(self.integer())
            self.expect(")")
        if name == "Ball":
            return make_factor("I", (params[0], 1))
        return make_factor(name, params)

    def domain(self) -> Domain:
        factors = [self.factor()]
        while self.peek() in ("x", "*"):
            self.at += 1
            factors.append(self.factor())
        if self.at != len(self.tokens):
            self.fail("'x', '*', or end of input")
        return product(factors)


def parse_factor(text: str) -> CartanFactor:
    """Parse a single factor expression such as "I(3,2)" or "Ball(2)"."""
    parser = _Parser(text)
    f = parser.factor()
    if parser.at != len(parser.tokens):
        parser.fail("end of input")
    return f


def parse_domain(text: str) -> Domain:
    """Parse a domain expression such as "I(3,2) x V" into normal form."""
    return _Parser(text).domain()


def format_domain(d: Domain) -> str:
    """Print the normal form; parse_domain(format_domain(d)) == d."""
    return " x ".join(str(f) for f in d.factors)


@dataclass(frozen=True)
class DomainExpression:
    """Source text paired with its parse; normalized() reprints stably."""

    source: str
    domain: Domain

    @classmethod
    def parse(cls, text: str) -> "DomainExpression":
        return cls(text, parse_domain(text))

    def normalized(self) -> str:
        return format_domain(self.domain)
