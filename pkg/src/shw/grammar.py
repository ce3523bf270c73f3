"""Text syntax for generalised polynomials.

Examples of accepted input::

    0
    -2*x
    x*y + y*z + z*x
    1/2*x^2 - 3*y^-1 + x^(3/2)

Variables x, y, z, w, r, t, u, s name coordinates 1..8.  Whitespace is
ignored.  :func:`format_poly` prints terms highest degree first and is the
left inverse of :func:`parse_poly`.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import GenPolynomial, print_key, rational

VARIABLES = "xyzwrtus"
MAX_TEXT_DIM = len(VARIABLES)

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(\S))")


class ParseError(ValueError):
    """Malformed polynomial text; ``position`` is a 0-based offset."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.message = message
        self.text = text
        self.position = position


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        num, name, sym = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            toks.append(("int", int(num), start))
        elif name is not None:
            toks.append(("var", name, start))
        else:
            toks.append(("sym", sym, start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, d: int):
        self.text = text
        self.d = d
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def take_sym(self, sym):
        tok = self.peek()
        if tok[0] == "sym" and tok[1] == sym:
            self.i += 1
            return True
        return False

    def expect_sym(self, sym):
        if not self.take_sym(sym):
            self.fail(f"expected {sym!r}")

    def expect_int(self):
        tok = self.peek()
        if tok[0] != "int":
            self.fail("expected an integer")
        self.i += 1
        return tok

    def positive_int(self):
        tok = self.expect_int()
        if tok[1] == 0:
            self.fail("zero denominator", tok)
        return tok[1]

    def poly(self) -> GenPolynomial:
        if self.peek()[0] == "end":
            self.fail("empty polynomial")
        total = {}
        sign = 1
        while True:
            exps, coeff = self.term()
            coeff *= sign
            total[exps] = total.get(exps, 0) + coeff
            if self.take_sym("+"):
                sign = 1
            elif self.take_sym("-"):
                sign = -1
            elif self.peek()[0] == "end":
                break
            else:
                self.fail("unexpected token")
        return GenPolynomial(self.d, total)

    def term(self):
        sign = 1
        if self.take_sym("-"):
            sign = -1
        elif self.take_sym("+"):
            pass
        coeff = Fraction(1)
        exps = [0] * self.d
        if self.peek()[0] == "int":
            num = self.expect_int()[1]
            coeff = Fraction(num)
            if self.take_sym("/"):
                coeff /= self.positive_int()
            if not self.take_sym("*"):
                return tuple(exps), sign * coeff
        self.factor(exps)
        while self.take_sym("*"):
            self.factor(exps)
        return tuple(rational(e) for e in exps), sign * coeff

    def factor(self, exps):
        tok = self.peek()
        if tok[0] != "var":
            self.fail("expected a variable")
        idx = VARIABLES.find(tok[1])
        if idx < 0:
            self.fail(f"unknown variable {tok[1]!r}")
        if idx >= self.d:
            self.fail(f"variable {tok[1]!r} is coordinate {idx + 1} but d = {self.d}")
        self.i += 1
        e = Fraction(1)
        if self.take_sym("^"):
            e = self.exponent()
        exps[idx] += e

    def exponent(self):
        if self.take_sym("("):
            neg = self.take_sym("-")
            num = self.expect_int()[1]
            self.expect_sym("/")
            den = self.positive_int()
            self.expect_sym(")")
            return Fraction(-num if neg else num, den)
        neg = self.take_sym("-")
        num = self.expect_int()[1]
        return Fraction(-num if neg else num)


def parse_poly(text: str, d: int) -> GenPolynomial:
    if not 1 <= d <= MAX_TEXT_DIM:
        raise ValueError(f"text grammar supports 1 <= d <= {MAX_TEXT_DIM}, got {d}")
    return _Parser(text, d).poly()


def _format_exponent(e) -> str:
    if type(e) is int:
        return str(e)
    return f"({e.numerator}/{e.denominator})"


def format_monomial(exps) -> str:
    parts = []
    for name, e in zip(VARIABLES, exps):
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{_format_exponent(e)}")
    return "*".join(parts)


def _format_coeff(c) -> str:
    c = rational(c)
    return str(c)


def format_poly(p: GenPolynomial) -> str:
    if p.d > MAX_TEXT_DIM:
        raise ValueError(f"cannot print d = {p.d} with named variables")
    if not p:
        return "0"
    out = []
    for exps in sorted(p.terms, key=print_key):
        c = p.terms[exps]
        neg = c < 0
        mag = -c if neg else c
        mono = format_monomial(exps)
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)
