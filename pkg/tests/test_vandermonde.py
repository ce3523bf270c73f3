from fractions import Fraction
from itertools import combinations, product

import pytest
from conftest import fractions
from hypothesis import given
from hypothesis import strategies as st

from shw import bracket_monomial, context, quasi_triangular_det, van_det, vanishing_certificate
from shw.vandermonde import CertificateKind, ordinary_vandermonde_factored, quasi_triangular_matrix

CTXS = [(d, k) for d in (1, 2, 3) for k in (1, 2, 3)]


def test_examples():
    assert van_det(context(2, 2), context(2, 2).rows) == 4
    assert van_det(context(2, 1), [(1, 0), (1, 1), (1, 2)]) == 0
    assert van_det(context(1, 2), [(0,), (1,), (2,)]) == 2
    assert quasi_triangular_det(context(1, 2), [(0,), (1,), (2,)]) == 2
    assert quasi_triangular_matrix(context(1, 2), [(0,), (1,), (2,)]) == [[1, 1, 1], [0, 1, 2], [0, 0, 2]]
    m = quasi_triangular_matrix(context(2, 2), context(2, 2).rows)
    assert [m[i][i] for i in range(6)] == [1, 1, 1, 2, 1, 2]
    assert all(m[i][j] == 0 for i in range(6) for j in range(i))


def test_certificate_examples():
    c = vanishing_certificate(context(2, 1), [(1, 1), (1, 1), (0, 2)])
    assert c.kind is CertificateKind.DUPLICATE_COLUMNS and str(c) == "DuplicateColumns(1,2)"
    c = vanishing_certificate(context(2, 1), [(0, 0), (0, 1), (0, 2)])
    assert c.kind is CertificateKind.DEFICIENT_DEGREE and c.coordinate == 1
    c = vanishing_certificate(context(2, 1), [(Fraction(1, 2), 0), (Fraction(1, 2), 1), (Fraction(1, 2), 3)])
    assert c.kind is CertificateKind.CONSTANT_COORDINATE and c.coordinate == 1
    c = vanishing_certificate(context(2, 2), context(2, 2).rows)
    assert c.kind is CertificateKind.NONE_FOUND and not c.implies_zero


def test_ordinary_examples():
    assert ordinary_vandermonde_factored([0, 1]) == 1
    assert ordinary_vandermonde_factored([0, 1, 2]) == 2
    assert ordinary_vandermonde_factored([3, 1, 3]) == 0


@st.composite
def ctx_tuples(draw, ctxs=CTXS, small=True):
    d, k = draw(st.sampled_from(ctxs))
    ctx = context(d, k)
    entry = st.one_of(st.integers(0, 4), fractions(-3, 6, 3)) if small else st.integers(0, 6)
    tuples = draw(st.lists(st.tuples(*[entry] * d), min_size=ctx.N, max_size=ctx.N))
    return ctx, tuples


@given(ctx_tuples())
def test_quasi_triangular_identity(ct):
    ctx, tuples = ct
    assert van_det(ctx, tuples) == quasi_triangular_det(ctx, tuples)
    if ctx.N <= 10:
        assert van_det(ctx, tuples, "cofactor") == van_det(ctx, tuples, "bareiss")


@given(ctx_tuples(), st.data())
def test_translation_invariance(ct, data):
    ctx, tuples = ct
    s = data.draw(st.tuples(*[fractions(-3, 3, 3)] * ctx.d))
    moved = [tuple(a + b for a, b in zip(t, s)) for t in tuples]
    assert van_det(ctx, moved) == van_det(ctx, tuples)


@given(ctx_tuples(), st.data())
def test_column_antisymmetry(ct, data):
    ctx, tuples = ct
    i, j = data.draw(st.lists(st.integers(0, ctx.N - 1), min_size=2, max_size=2, unique=True))
    swapped = list(tuples)
    swapped[i], swapped[j] = swapped[j], swapped[i]
    assert van_det(ctx, swapped) == -van_det(ctx, tuples)


@given(ctx_tuples(small=False))
def test_certificates_imply_zero(ct):
    ctx, tuples = ct
    if vanishing_certificate(ctx, tuples).implies_zero:
        assert van_det(ctx, tuples) == 0


@given(ctx_tuples(), st.data())
def test_forced_certificates(ct, data):
    ctx, tuples = ct
    i = data.draw(st.integers(0, ctx.d - 1))
    c = data.draw(fractions())
    const = [t[:i] + (c,) + t[i + 1:] for t in tuples]
    assert vanishing_certificate(ctx, const).implies_zero and van_det(ctx, const) == 0
    dup = list(tuples)
    dup[-1] = dup[0]
    assert vanishing_certificate(ctx, dup).kind is CertificateKind.DUPLICATE_COLUMNS
    assert van_det(ctx, dup) == 0


@pytest.mark.parametrize("d, k", [(1, 1), (1, 2), (1, 3), (2, 1)])
def test_deficient_exhaustive(d, k):
    ctx = context(d, k)
    grid = list(product(range(k + 2), repeat=d))
    seen = 0
    for cols in combinations(grid, ctx.N):
        cert = vanishing_certificate(ctx, cols)
        if any(sum(t[i] for t in cols) < ctx.shift for i in range(d)):
            seen += 1
            assert cert.implies_zero
        if cert.implies_zero:
            assert van_det(ctx, cols) == 0
    # distinct natural exponents in one variable always reach the shift
    assert seen or d == 1


@given(st.integers(2, 7), st.data())
def test_ordinary_factorisation(n, data):
    ms = data.draw(st.lists(fractions(-6, 6, 3), min_size=n, max_size=n))
    ctx = context(1, n - 1)
    assert ordinary_vandermonde_factored(ms) == van_det(ctx, [(m,) for m in ms])


@given(ctx_tuples())
def test_links_to_bracket(ct):
    ctx, tuples = ct
    coeff, _ = bracket_monomial(ctx, tuples)
    assert coeff == van_det(ctx, tuples)
