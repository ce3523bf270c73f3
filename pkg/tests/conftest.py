from fractions import Fraction

import pytest
import sympy
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from shw import GenPolynomial, enumerate_rows

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

SYMBOLS = sympy.symbols("x y z w r t u s")


def fractions(lo=-5, hi=5, max_den=4):
    return st.builds(Fraction, st.integers(lo, hi), st.integers(1, max_den))


def nonzero_fractions(lo=-5, hi=5, max_den=4):
    return fractions(lo, hi, max_den).filter(bool)


def exponents(d, hi=4, lo=0):
    return st.tuples(*[st.integers(lo, hi)] * d)


def polys(d, hi=3, max_terms=3, lo=0):
    return st.dictionaries(exponents(d, hi, lo), nonzero_fractions(), max_size=max_terms).map(
        lambda t: GenPolynomial(d, t)
    )


def to_sympy(p: GenPolynomial):
    xs = SYMBOLS[: p.d]
    out = sympy.Integer(0)
    for e, c in p.items():
        c = Fraction(c)
        term = sympy.Rational(c.numerator, c.denominator)
        for v, a in zip(xs, e):
            a = Fraction(a)
            term *= v ** sympy.Rational(a.numerator, a.denominator)
        out += term
    return out


def sympy_bracket(d, k, args):
    """Determinant of the Wronskian matrix computed by sympy, as an oracle."""
    xs = SYMBOLS[:d]
    exprs = [to_sympy(a) for a in args]
    rows = []
    for r in enumerate_rows(d, k):
        row = []
        for f in exprs:
            g = f
            for v, n in zip(xs, r):
                if n:
                    g = sympy.diff(g, v, n)
            row.append(g)
        rows.append(row)
    return sympy.expand(sympy.Matrix(rows).det(method="berkowitz"))


def same(p: GenPolynomial, expr) -> bool:
    return sympy.simplify(to_sympy(p) - expr) == 0


@pytest.fixture
def oracle():
    return sympy_bracket
