"""The complete generalised Wronskian bracket.

Given N = C(d+k, k) polynomials in d variables, the bracket is the
determinant of the N x N matrix whose row j applies the derivative for the
j-th multi-index of order <= k.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import lcm

from .combinatorics import BracketContext, degree_shift
from .linalg import bareiss_poly, cofactor_det
from .poly import GenPolynomial, derive, exps_of, rational
from .vandermonde import van_det

log = logging.getLogger(__name__)

MODES = ("fraction_free", "cofactor")
COFACTOR_MAX_N = 4


def _check_args(ctx: BracketContext, args):
    args = list(args)
    if len(args) != ctx.N:
        raise ValueError(f"{ctx} takes {ctx.N} arguments, got {len(args)}")
    for a in args:
        if not isinstance(a, GenPolynomial):
            raise TypeError(f"arguments must be GenPolynomial, got {type(a).__name__}")
        if a.d != ctx.d:
            raise ValueError(f"argument of dimension {a.d} in a d={ctx.d} bracket")
    return args


def wronskian_matrix(ctx: BracketContext, args) -> list:
    args = _check_args(ctx, args)
    return [[derive(a, r) for a in args] for r in ctx.rows]


def resolve_mode(ctx: BracketContext, args, mode=None) -> str:
    natural = all(a.is_natural() for a in args)
    if mode is None:
        return "cofactor" if ctx.N <= COFACTOR_MAX_N or not natural else "fraction_free"
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    if mode == "fraction_free" and not natural:
        log.info("non-natural exponents: using cofactor mode")
        return "cofactor"
    return mode


def bracket(ctx: BracketContext, args, mode=None) -> GenPolynomial:
    """Exact value of the bracket of ``args``.

    ``mode`` is ``"fraction_free"`` (Bareiss), ``"cofactor"`` (Laplace
    expansion) or ``None`` to choose automatically.
    """
    args = _check_args(ctx, args)
    mode = resolve_mode(ctx, args, mode)
    if mode == "cofactor":
        matrix = [[derive(a, r) for a in args] for r in ctx.rows]
        return cofactor_det(matrix, GenPolynomial.zero(ctx.d))

    # clear denominators column by column, work over Z[x]
    scale = 1
    columns = []
    for a in args:
        den = lcm(1, *(Fraction(c).denominator for c in a.terms.values()))
        scale *= den
        columns.append(a.scale(den) if den != 1 else a)
    matrix = []
    for r in ctx.rows:
        row = []
        for a in columns:
            entry = derive(a, r)
            row.append({e: int(c) for e, c in entry.terms.items()})
        matrix.append(row)
    det = bareiss_poly(matrix, ctx.d)
    return GenPolynomial(ctx.d, det).scale(Fraction(1, scale))


def bracket_monomial(ctx: BracketContext, exps) -> tuple:
    """Bracket of the monic monomials x^(exps[n]) as ``(coeff, exponent)``.

    The exponent is ``None`` when the coefficient vanishes.
    """
    exps = [exps_of(e) for e in exps]
    coeff = van_det(ctx, exps)
    if not coeff:
        return 0, None
    shift = degree_shift(ctx.d, ctx.k)[0]
    out = tuple(rational(sum(e[i] for e in exps) - shift) for i in range(ctx.d))
    return coeff, out


def bracket_via_monomials(ctx: BracketContext, args) -> GenPolynomial:
    """Expand multilinearly and sum monomial brackets.

    Useful when every argument has few terms; cost is the product of the
    term counts.
    """
    args = _check_args(ctx, args)
    total = {}

    def walk(n, chosen, coeff):
        if n == len(args):
            c, e = bracket_monomial(ctx, chosen)
            if c:
                v = total.get(e, 0) + c * coeff
                if v:
                    total[e] = v
                else:
                    total.pop(e, None)
            return
        for e, c in args[n].terms.items():
            if e in chosen:
                continue  # duplicate column
            walk(n + 1, chosen + [e], coeff * c)

    walk(0, [], 1)
    return GenPolynomial(ctx.d, total)
