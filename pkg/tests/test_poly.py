from fractions import Fraction

import pytest
from conftest import exponents, fractions, polys
from hypothesis import given
from hypothesis import strategies as st

from shw import GenPolynomial, ParseError, degree_profile, derive, format_poly, parse_poly
from shw.poly import falling, rational


def test_rational_normalises():
    assert rational(Fraction(4, 2)) == 2 and type(rational(Fraction(4, 2))) is int
    assert rational(Fraction(3, -6)) == Fraction(-1, 2)
    with pytest.raises(TypeError):
        rational(0.5)


@given(fractions(), fractions(), fractions())
def test_rational_field_laws(a, b, c):
    assert rational((a + b) + c) == rational(a + (b + c))
    assert rational(a * (b + c)) == rational(a * b + a * c)


def test_parse_single_term():
    p = parse_poly("-2*x", 2)
    assert dict(p.terms) == {(1, 0): -2}


def test_parse_perfection_top():
    p = parse_poly("x*y + y*z + z*x", 3)
    assert dict(p.terms) == {(1, 1, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1}


def test_parse_rational_exponent():
    p = parse_poly("x^(3/2)", 1)
    assert dict(p.terms) == {(Fraction(3, 2),): 1}


def test_parse_laurent_and_coefficients():
    p = parse_poly("1/2*y^-1 - 3 + x*x", 2)
    assert dict(p.terms) == {(0, -1): Fraction(1, 2), (0, 0): -3, (2, 0): 1}


@pytest.mark.parametrize(
    "text, d, where",
    [("x +", 1, "position 3"), ("q", 2, "unknown variable"), ("z", 2, "coordinate 3"), ("1/0", 1, "zero denominator"),
     ("x^(1/0)", 1, "zero denominator"), ("2 x", 1, "")],
)
def test_parse_errors(text, d, where):
    with pytest.raises(ParseError) as err:
        parse_poly(text, d)
    assert where in str(err.value)


def test_format_examples():
    assert format_poly(GenPolynomial.zero(2)) == "0"
    assert format_poly(GenPolynomial(2, {(1, 1): 1, (0, 0): 1})) == "x*y + 1"
    assert format_poly(GenPolynomial(2, {(2, 0): Fraction(-1, 2)})) == "-1/2*x^2"
    assert format_poly(parse_poly("y - x^2 + 3*x*y", 2)) == "-x^2 + 3*x*y + y"
    assert format_poly(parse_poly("x^(3/2) - 1", 1)) == "x^(3/2) - 1"


@given(polys(3, hi=4, lo=-2, max_terms=5))
def test_parse_format_roundtrip(p):
    assert parse_poly(format_poly(p), 3) == p


def test_no_zero_terms_stored():
    p = parse_poly("x - x + y", 2)
    assert dict(p.terms) == {(0, 1): 1}
    assert not (p - p)


def test_derive_examples():
    assert derive(parse_poly("x^2*y", 2), (1, 1)) == parse_poly("2*x", 2)
    assert derive(parse_poly("1/2*x^2*y", 2), (2, 1)) == GenPolynomial.constant(2)
    assert derive(parse_poly("x", 1), (2,)) == GenPolynomial.zero(1)
    # formal rule for non-natural exponents
    assert derive(parse_poly("y^-1", 2), (0, 2)) == parse_poly("2*y^-3", 2)


def test_falling():
    assert falling(5, 2) == 20
    assert falling(1, 2) == 0
    assert falling(Fraction(1, 2), 2) == Fraction(-1, 4)


def test_degree_profile():
    assert degree_profile(parse_poly("x^2*y", 2)) == (3, [2, 1])
    assert degree_profile(parse_poly("x*y + y*z + z*x", 3)) == (2, [1, 1, 1])
    assert degree_profile(GenPolynomial.zero(2)) == (None, [None, None])


@given(polys(2), polys(2), fractions(), fractions(), exponents(2, hi=2))
def test_derive_linear(p, q, a, b, r):
    assert derive(p.scale(a) + q.scale(b), r) == derive(p, r).scale(a) + derive(q, r).scale(b)


@given(exponents(2, hi=5, lo=-2), exponents(2, hi=2), exponents(2, hi=2))
def test_derive_composes(e, r, s):
    if sum(r) + sum(s) > 4:
        return
    p = GenPolynomial.monomial(e)
    assert derive(derive(p, r), s) == derive(p, tuple(a + b for a, b in zip(r, s)))


@given(polys(2), polys(2), polys(2))
def test_ring_laws(p, q, s):
    assert (p + q) + s == p + (q + s)
    assert p * (q + s) == p * q + p * s
    assert p * q == q * p


@given(polys(2), st.permutations([0, 1]))
def test_permute_roundtrip(p, perm):
    inverse = [perm.index(c) for c in range(2)]
    assert p.permute_coordinates(perm).permute_coordinates(inverse) == p
