"""Polynomial text grammar: parsing and canonical printing.

Grammar (no implicit multiplication; ``/`` only inside rational literals):

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := atom ['^' INT]
    atom    := RATIONAL | INT | NAME | '(' expr ')'
    RATIONAL:= INT '/' INT

Printing emits terms in descending monomial order with ``a/b`` rationals,
so ``parse(format(f)) == f`` bit-exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()/]))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos:].strip()[0]!r}")
            break
        pos = m.end()
        if m.lastgroup == "int":
            tokens.append(("int", int(m.group("int"))))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
    tokens.append(("end", None))
    return tokens


class _Parser:
    def __init__(self, ring, tokens):
        self.ring = ring
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val!r}")

    def parse(self):
        f = self.expr()
        kind, val = self.peek()
        if kind != "end":
            raise ParseError(f"trailing input at {val!r}")
        return f

    def expr(self):
        kind, val = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        f = self.term()
        if negate:
            f = -f
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                g = self.term()
                f = f - g if val == "-" else f + g
            else:
                return f

    def term(self):
        f = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                f = f * self.factor()
            else:
                return f

    def factor(self):
        f = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            k, v = self.take()
            if k != "int":
                raise ParseError(f"exponent must be a nonnegative integer, found {v!r}")
            f = f**v
        return f

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            k, nxt = self.peek()
            if k == "op" and nxt == "/":
                self.take()
                k2, den = self.take()
                if k2 != "int" or den == 0:
                    raise ParseError("malformed rational literal")
                return self.ring.constant(Fraction(val, den))
            return self.ring.constant(val)
        if kind == "name":
            return self.ring.variable(val) if val in self.ring._index else self._unknown(val)
        if kind == "op" and val == "(":
            f = self.expr()
            self.expect_op(")")
            return f
        if kind == "op" and val == "-":
            return -self.atom_or_factor()
        raise ParseError(f"unexpected token {val!r}")

    def atom_or_factor(self):
        return self.factor()

    def _unknown(self, name):
        raise ParseError(f"unknown variable {name!r} (ring has {self.ring.variables})")


def parse_polynomial(ring, text: str):
    if not text.strip():
        raise ParseError("empty polynomial text")
    try:
        return _Parser(ring, _tokenize(text)).parse()
    except ParseError:
        raise
    except Exception as exc:  # malformed nesting, early end, ...
        raise ParseError(f"cannot parse {text!r}: {exc}") from exc


def parse_generators(ring, text: str):
    """Parse a comma-separated generator list, respecting parentheses."""
    parts = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    gens = [parse_polynomial(ring, p) for p in parts if p.strip()]
    if not gens:
        raise ParseError("empty generator list")
    return gens


def format_monomial(ring, exponents) -> str:
    pieces = []
    for name, e in zip(ring.variables, exponents):
        if e == 1:
            pieces.append(name)
        elif e > 1:
            pieces.append(f"{name}^{e}")
    return "*".join(pieces)


def _format_coeff(c: Fraction) -> str:
    return str(c)  # Fraction prints as 'a' or 'a/b'


def format_polynomial(f, order=None) -> str:
    if not f.terms:
        return "0"
    parts = []
    for i, (e, c) in enumerate(f.sorted_terms(order)):
        mono = format_monomial(f.ring, e)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{_format_coeff(mag)}*{mono}"
        else:
            body = _format_coeff(mag)
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
