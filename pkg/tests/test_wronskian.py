import itertools
from fractions import Fraction

import pytest
from conftest import exponents, nonzero_fractions, polys, same, sympy_bracket
from hypothesis import given
from hypothesis import strategies as st

from shw import GenPolynomial, bracket, bracket_monomial, context, degree_shift, standard_monomials, van_det
from shw.grammar import parse_poly
from shw.wronskian import bracket_via_monomials, wronskian_matrix

SMALL = [(d, k) for d in (1, 2, 3) for k in (1, 2, 3) if context(d, k).N <= 10]


def P(*texts, d):
    return [parse_poly(t, d) for t in texts]


def test_matrix_examples():
    ctx = context(1, 1)
    m = wronskian_matrix(ctx, P("-2*x", "1", d=1))
    assert m == [P("-2*x", "1", d=1), P("-2", "0", d=1)]
    ctx = context(3, 1)
    m = wronskian_matrix(ctx, P("x", "y", "z", "x*y", d=3))
    assert [row[3] for row in m] == P("x*y", "y", "x", "0", d=3)


@pytest.mark.parametrize(
    "d, k, args, expected",
    [
        (1, 1, ("-2*x", "1"), "2"),
        (2, 1, ("1", "x", "y"), "1"),
        (2, 1, ("x", "y", "y^-1"), "2*y^-1"),
        (2, 2, ("1", "x", "y", "x^2", "x*y", "x*y^2"), "4*x"),
        (2, 1, ("x", "y", "x*y"), "-x*y"),
    ],
)
def test_bracket_examples(d, k, args, expected):
    ctx = context(d, k)
    polys_ = P(*args, d=d)
    assert bracket(ctx, polys_) == parse_poly(expected, d)
    assert same(bracket(ctx, polys_), sympy_bracket(d, k, polys_))


def test_monomial_examples():
    ctx = context(2, 1)
    assert bracket_monomial(ctx, [(1, 0), (0, 1), (1, 1)]) == (-1, (1, 1))
    for n in range(2, 7):
        ms = [0, 1, 3, 4, 7, 9][:n]
        ctx = context(1, n - 1)
        coeff, exp = bracket_monomial(ctx, [(m,) for m in ms])
        vand = 1
        for i, j in itertools.combinations(range(n), 2):
            vand *= ms[j] - ms[i]
        assert (coeff, exp) == (vand, (sum(ms) - n * (n - 1) // 2,))


@pytest.mark.parametrize("d, k", SMALL)
def test_standard_bracket_is_one(d, k):
    ctx = context(d, k)
    assert bracket(ctx, standard_monomials(d, k)) == GenPolynomial.constant(d)
    coeff, exp = bracket_monomial(ctx, ctx.rows)
    assert exp == (0,) * d and coeff == van_det(ctx, ctx.rows)


def test_argument_count():
    with pytest.raises(ValueError):
        bracket(context(2, 1), P("1", "x", d=2))


def _args(d, n, lo=0, hi=3):
    return st.lists(polys(d, hi=hi, lo=lo, max_terms=2), min_size=n, max_size=n)


@st.composite
def ctx_and_args(draw, lo=0, hi=3):
    d, k = draw(st.sampled_from(SMALL))
    ctx = context(d, k)
    return ctx, draw(_args(d, ctx.N, lo, hi))


@given(ctx_and_args(), st.data())
def test_antisymmetry(ca, data):
    ctx, args = ca
    i, j = data.draw(st.lists(st.integers(0, ctx.N - 1), min_size=2, max_size=2, unique=True))
    swapped = list(args)
    swapped[i], swapped[j] = swapped[j], swapped[i]
    assert bracket(ctx, swapped) == -bracket(ctx, args)


@given(ctx_and_args(), st.data(), nonzero_fractions(), nonzero_fractions())
def test_multilinear(ca, data, a, b):
    ctx, args = ca
    slot = data.draw(st.integers(0, ctx.N - 1))
    other = data.draw(polys(ctx.d, max_terms=2))
    mixed = list(args)
    mixed[slot] = args[slot].scale(a) + other.scale(b)
    alt = list(args)
    alt[slot] = other
    assert bracket(ctx, mixed) == bracket(ctx, args).scale(a) + bracket(ctx, alt).scale(b)


@given(ctx_and_args(lo=0, hi=3))
def test_modes_agree(ca):
    ctx, args = ca
    ff = bracket(ctx, args, mode="fraction_free")
    assert ff == bracket(ctx, args, mode="cofactor")
    assert ff == bracket_via_monomials(ctx, args)


@given(ctx_and_args(lo=-2, hi=3))
def test_modes_agree_laurent(ca):
    ctx, args = ca
    assert bracket(ctx, args) == bracket_via_monomials(ctx, args)


@given(st.sampled_from(SMALL), st.data())
def test_monomial_fast_path_and_shift(dk, data):
    d, k = dk
    ctx = context(d, k)
    exps = data.draw(st.lists(exponents(d, hi=4), min_size=ctx.N, max_size=ctx.N))
    coeff, exp = bracket_monomial(ctx, exps)
    value = bracket(ctx, [GenPolynomial.monomial(e) for e in exps])
    if coeff == 0:
        assert not value and exp is None
        return
    assert value == GenPolynomial.monomial(exp, coeff)
    shift = degree_shift(d, k)[0]
    assert list(exp) == [sum(e[i] for e in exps) - shift for i in range(d)]


@given(st.sampled_from([(1, 1), (1, 2), (2, 1)]), st.data())
def test_sympy_oracle(dk, data):
    d, k = dk
    args = data.draw(_args(d, context(d, k).N))
    assert same(bracket(context(d, k), args), sympy_bracket(d, k, args))


@pytest.mark.parametrize("d, k", SMALL)
def test_standard_subsets_are_constant(d, k):
    ctx = context(d, k)
    std = standard_monomials(d, k)
    value = bracket(ctx, list(reversed(std)))
    assert value.is_monomial() and value.sole_term()[0] == (0,) * d


def test_rational_coefficients_cleared():
    ctx = context(2, 1)
    args = P("1/3*x + 1/2", "2/5*y", "x*y - 1/7", d=2)
    assert bracket(ctx, args, mode="fraction_free") == bracket(ctx, args, mode="cofactor")
    assert same(bracket(ctx, args), sympy_bracket(2, 1, args))
    assert bracket(ctx, args) == bracket(ctx, args, mode="cofactor")
    assert Fraction(bracket(ctx, P("1", "x", "y", d=2)).coefficient((0, 0))) == 1
