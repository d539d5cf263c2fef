"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace is insignificant)::

    expr    := term { ("+"|"-") term } ;
    term    := factor { "*" factor } ;
    factor  := coeff | var [ "^" nat ] | "(" expr ")" ;
    coeff   := [ "-" ] nat [ "/" nat ] ;

A leading sign on a term and ``(expr)^nat`` are accepted as well, so that
everything :func:`format_polynomial` prints parses back.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import PolynomialSyntaxError, UnknownVariableError
from .polyring import MAX_EXPONENT, Polynomial, VariableContext, _check_exponents

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("nat", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise PolynomialSyntaxError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, ctx):
        self.ctx = ctx
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolynomialSyntaxError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise PolynomialSyntaxError("empty expression", 0)
        f = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolynomialSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return f

    def expr(self):
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        f = self.term()
        if sign < 0:
            f = -f
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            f = f + t if op == "+" else f - t
        return f

    def term(self):
        f = self.factor()
        while self.peek()[0] == "*":
            self.take()
            f = f * self.factor()
        return f

    def nat(self):
        return self.take("nat")[1]

    def exponent(self):
        pos = self.peek()[2]
        k = self.nat()
        if k > MAX_EXPONENT:
            raise PolynomialSyntaxError(f"exponent {k} exceeds {MAX_EXPONENT}", pos)
        return k

    def factor(self):
        kind, val, pos = self.peek()
        if kind == "nat":
            return self.coeff(1)
        if kind == "-" and self.tokens[self.i + 1][0] == "nat":
            self.take()
            return self.coeff(-1)
        if kind == "name":
            self.take()
            try:
                idx = self.ctx.index(val)
            except KeyError:
                raise UnknownVariableError(val, pos) from None
            k = 1
            if self.peek()[0] == "^":
                self.take()
                k = self.exponent()
            exp = [0] * len(self.ctx)
            exp[idx] = k
            return Polynomial(self.ctx, {_check_exponents(tuple(exp)): Fraction(1)}, _trusted=True)
        if kind == "(":
            self.take()
            f = self.expr()
            self.take(")")
            if self.peek()[0] == "^":
                self.take()
                f = f ** self.exponent()
            return f
        what = "end of input" if kind == "end" else repr(val)
        raise PolynomialSyntaxError(f"unexpected {what}", pos)

    def coeff(self, sign):
        num = self.nat()
        den = 1
        if self.peek()[0] == "/":
            self.take()
            tok = self.peek()
            den = self.nat()
            if den == 0:
                raise PolynomialSyntaxError("division by zero", tok[2])
        return Polynomial.constant(self.ctx, Fraction(sign * num, den))


def parse_polynomial(text: str, ctx: VariableContext) -> Polynomial:
    """Parse ``text`` into an expanded polynomial in ``ctx``."""
    return _Parser(text, ctx).parse()


def parse_polynomials(texts, ctx: VariableContext) -> list:
    return [parse_polynomial(t, ctx) for t in texts]
