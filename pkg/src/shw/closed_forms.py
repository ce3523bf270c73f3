"""Factorised formulas for special brackets.

* the lonely-algebra structure constants: one standard monomial replaced;
* the two-replacement formula: 1 -> q and x -> p;
* the Witt-type relations for shifted generalised monomials.

Each formula is independent of the determinant engine, which lets the two
be compared.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, prod

from .combinatorics import BracketContext, degree_shift, standard_monomials
from .poly import GenPolynomial, derive, exps_of, falling, is_natural, rational
from .vandermonde import van_det


def _row(ctx: BracketContext, j: int):
    if not 1 <= j <= ctx.N:
        raise IndexError(f"row {j} outside 1..{ctx.N}")
    return ctx.rows[j - 1]


def lonely_factor(ctx: BracketContext, j: int, deg_a) -> Fraction:
    """(-1)^(k-|r|) / (k-|r|)! * prod_{l=|r|+1}^{k} (deg a - l)."""
    order = sum(_row(ctx, j))
    gap = ctx.k - order
    sign = -1 if gap % 2 else 1
    tail = prod(deg_a - ell for ell in range(order + 1, ctx.k + 1))
    return Fraction(sign * tail, factorial(gap))


def lonely_structure_bracket(ctx: BracketContext, j: int, a_exps) -> GenPolynomial:
    """Bracket of the standard monomials with slot ``j`` (1-based) replaced
    by the monic monomial x^a_exps."""
    r = _row(ctx, j)
    n = exps_of(a_exps)
    if len(n) != ctx.d:
        raise ValueError(f"exponent {n} does not have length {ctx.d}")
    if not is_natural(n):
        raise ValueError("structure formula needs natural exponents")
    falls = prod(falling(n[i], r[i]) for i in range(ctx.d))
    coeff = lonely_factor(ctx, j, sum(n)) * falls
    if not coeff:
        return GenPolynomial.zero(ctx.d)
    return GenPolynomial.monomial(tuple(a - b for a, b in zip(n, r)), coeff)


def lonely_differential_form(ctx: BracketContext, j: int, a: GenPolynomial) -> GenPolynomial:
    """Same bracket as a derivative of ``a``, valid for homogeneous ``a``."""
    degs = {sum(e) for e in a.terms}
    if len(degs) > 1:
        raise ValueError("differential form needs a homogeneous argument")
    if not degs:
        return GenPolynomial.zero(ctx.d)
    return derive(a, _row(ctx, j)).scale(lonely_factor(ctx, j, degs.pop()))


def golden_bracket(ctx: BracketContext, n, m) -> tuple:
    """Bracket of (q, p, standard monomials 3..N) for p = x^n, q = x^m.

    Returns ``(coeff, exponent)`` with exponent n + m - e_1, or ``None`` as
    the exponent if the coefficient vanishes.
    """
    n, m = exps_of(n), exps_of(m)
    if len(n) != ctx.d or len(m) != ctx.d:
        raise ValueError(f"exponents must have length {ctx.d}")
    if not (is_natural(n) and is_natural(m)):
        raise ValueError("the two-replacement formula needs natural exponents")
    k = ctx.k
    dp, dq = sum(n), sum(m)
    coeff = Fraction(1, factorial(k) * factorial(k - 1))
    coeff *= prod((dp - ell) * (dq - ell) for ell in range(2, k + 1))
    coeff *= (dp - 1) * m[0] - (dq - 1) * n[0]
    coeff = rational(coeff)
    if not coeff:
        return 0, None
    exp = tuple(a + b - (1 if i == 0 else 0) for i, (a, b) in enumerate(zip(n, m)))
    return coeff, exp


def golden_arguments(ctx: BracketContext, n, m) -> list:
    """The argument list (q, p, standard rows 3..N) matching golden_bracket."""
    std = standard_monomials(ctx.d, ctx.k)
    return [GenPolynomial.monomial(m), GenPolynomial.monomial(n)] + std[2:]


def witt_shift(ctx: BracketContext) -> Fraction:
    """s = k/(d+1) * N/(N-1)."""
    return rational(Fraction(ctx.k, ctx.d + 1) * Fraction(ctx.N, ctx.N - 1))


def witt_generator(ctx: BracketContext, index) -> GenPolynomial:
    """a_i = x^(i + s*1)."""
    s = witt_shift(ctx)
    return GenPolynomial.monomial(tuple(rational(v + s) for v in exps_of(index)))


def witt_bracket(ctx: BracketContext, indices) -> tuple:
    """``(omega, index_sum)`` with [a_i1, ..., a_iN] = omega * a_(index_sum)."""
    idx = [exps_of(i) for i in indices]
    if len(idx) != ctx.N:
        raise ValueError(f"{ctx} takes {ctx.N} indices, got {len(idx)}")
    if any(len(i) != ctx.d for i in idx):
        raise ValueError(f"indices must have length {ctx.d}")
    omega = van_det(ctx, idx)
    total = tuple(rational(sum(i[c] for i in idx)) for c in range(ctx.d))
    return omega, total


def witt_shift_consistent(ctx: BracketContext) -> bool:
    """N*s - kN/(d+1) = s, the identity that makes a_i closed."""
    s = witt_shift(ctx)
    return ctx.N * s - degree_shift(ctx.d, ctx.k)[0] == s
