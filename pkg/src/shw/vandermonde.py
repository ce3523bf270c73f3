"""Generalised Vandermonde determinants of exponent tuples.

For a context with rows r_1..r_N and exponent tuples m_1..m_N the matrix
has entry (j, n) = prod_i (m_n^i)^(r_j^i), with 0^0 = 1.  Its determinant is
the coefficient of the bracket of the monomials x^(m_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import prod

from .combinatorics import BracketContext, degree_shift
from .linalg import cofactor_det, det_rational
from .poly import exps_of, falling, is_natural, rational

COFACTOR_MAX_N = 5


def _check(ctx: BracketContext, tuples):
    tuples = [exps_of(t) for t in tuples]
    if len(tuples) != ctx.N:
        raise ValueError(f"expected {ctx.N} tuples for {ctx}, got {len(tuples)}")
    for t in tuples:
        if len(t) != ctx.d:
            raise ValueError(f"tuple {t} does not have length {ctx.d}")
    return tuples


def _power(base, e: int):
    # Fraction ** int keeps exactness; 0 ** 0 == 1 as required
    return base ** e


def van_matrix(ctx: BracketContext, tuples) -> list:
    tuples = _check(ctx, tuples)
    return [
        [rational(prod(_power(m[i], r[i]) for i in range(ctx.d) if r[i])) for m in tuples]
        for r in ctx.rows
    ]


def _det(matrix, method: str):
    if method == "auto":
        method = "cofactor" if len(matrix) <= COFACTOR_MAX_N else "bareiss"
    if method == "cofactor":
        return rational(cofactor_det(matrix, 0))
    if method == "bareiss":
        return det_rational(matrix)
    raise ValueError(f"unknown determinant method {method!r}")


def van_det(ctx: BracketContext, tuples, method: str = "auto"):
    return _det(van_matrix(ctx, tuples), method)


def quasi_triangular_matrix(ctx: BracketContext, tuples) -> list:
    """Entry (j, n) = prod_i falling(m_n^i, r_j^i)."""
    tuples = _check(ctx, tuples)
    return [
        [rational(prod(falling(m[i], r[i]) for i in range(ctx.d))) for m in tuples]
        for r in ctx.rows
    ]


def quasi_triangular_det(ctx: BracketContext, tuples, method: str = "auto"):
    return _det(quasi_triangular_matrix(ctx, tuples), method)


class CertificateKind(Enum):
    DUPLICATE_COLUMNS = "DuplicateColumns"
    CONSTANT_COORDINATE = "ConstantCoordinate"
    DEFICIENT_DEGREE = "DeficientDegree"
    NONE_FOUND = "NoneFound"


@dataclass(frozen=True)
class VanishingCertificate:
    """Why a generalised Vandermonde determinant must vanish.

    ``columns`` and ``coordinate`` are 1-based.  ``NONE_FOUND`` says nothing
    about the determinant: it may still be zero.
    """

    kind: CertificateKind
    columns: tuple = ()
    coordinate: int | None = None

    @property
    def implies_zero(self) -> bool:
        return self.kind is not CertificateKind.NONE_FOUND

    def __str__(self):
        if self.kind is CertificateKind.DUPLICATE_COLUMNS:
            return f"{self.kind.value}({self.columns[0]},{self.columns[1]})"
        if self.coordinate is not None:
            return f"{self.kind.value}({self.coordinate})"
        return self.kind.value


def vanishing_certificate(ctx: BracketContext, tuples) -> VanishingCertificate:
    tuples = _check(ctx, tuples)
    for a, b in combinations(range(len(tuples)), 2):
        if tuples[a] == tuples[b]:
            return VanishingCertificate(CertificateKind.DUPLICATE_COLUMNS, (a + 1, b + 1))
    natural = all(is_natural(t) for t in tuples)
    need = degree_shift(ctx.d, ctx.k)[0]
    deficient = [natural and sum(t[i] for t in tuples) < need for i in range(ctx.d)]
    for i in range(ctx.d):
        # a constant coordinate that is also deficient is reported as deficient
        if len({t[i] for t in tuples}) == 1 and not deficient[i]:
            return VanishingCertificate(CertificateKind.CONSTANT_COORDINATE, coordinate=i + 1)
    for i in range(ctx.d):
        if deficient[i]:
            return VanishingCertificate(CertificateKind.DEFICIENT_DEGREE, coordinate=i + 1)
    return VanishingCertificate(CertificateKind.NONE_FOUND)


def ordinary_vandermonde_factored(ms):
    """prod_{i<j} (m_j - m_i) for scalar exponents (the d = 1 case)."""
    ms = [Fraction(m) for m in ms]
    out = Fraction(1)
    for i, j in combinations(range(len(ms)), 2):
        out *= ms[j] - ms[i]
    return rational(out)
