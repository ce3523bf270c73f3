"""Exact determinant kernels.

Two independent routes are kept on purpose:

* fraction-free Bareiss elimination, over ``int`` or over polynomials with
  integer coefficients stored as plain ``{exps: int}`` dicts;
* memoised Laplace (cofactor) expansion, generic over any ring whose
  elements support ``+``, ``-``, ``*`` and truthiness for zero.

The Laplace route never divides, so it also handles Laurent and
fractional exponents.  It is the oracle for the Bareiss route.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .poly import rational


def bareiss_int(matrix) -> int:
    """Determinant of a square integer matrix."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        top = m[c][c]
        rowc = m[c]
        for i in range(c + 1, n):
            rowi = m[i]
            lead = rowi[c]
            for j in range(c + 1, n):
                num = rowi[j] * top - lead * rowc[j]
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("inexact Bareiss division")
                rowi[j] = q
        prev = top
    return sign * m[n - 1][n - 1]


def det_rational(matrix):
    """Determinant of a rational matrix via column denominator clearing."""
    m = [[Fraction(v) for v in row] for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    scale = 1
    cols = []
    for j in range(n):
        den = lcm(*(m[i][j].denominator for i in range(n)))
        scale *= den
        cols.append(den)
    ints = [[int(m[i][j] * cols[j]) for j in range(n)] for i in range(n)]
    return rational(Fraction(bareiss_int(ints), scale))


def cofactor_det(matrix, zero):
    """Laplace expansion along successive rows, memoised on the set of
    remaining columns.  Costs O(n 2^n) ring operations."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    memo = {}

    def minor(row, cols):
        if row == n - 1:
            return matrix[row][cols[0]]
        hit = memo.get(cols)
        if hit is not None:
            return hit
        total = zero
        line = matrix[row]
        for pos, c in enumerate(cols):
            e = line[c]
            if not e:
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            if not sub:
                continue
            term = e * sub
            total = total - term if pos % 2 else total + term
        memo[cols] = total
        return total

    return minor(0, tuple(range(n)))


# polynomial dict helpers (integer coefficients, natural exponents)

def _grlex(e):
    return (sum(e), e)


def pmul(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple([x + y for x, y in zip(ea, eb)])
            v = out.get(e, 0) + ca * cb
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def psub(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) - c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def pdiv_exact(a: dict, b: dict) -> dict:
    """Quotient a / b, which must be exact in Z[x]."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    if len(b) == 1:
        (eb, cb), = b.items()
        out = {}
        for ea, ca in a.items():
            q, rem = divmod(ca, cb)
            e = tuple([x - y for x, y in zip(ea, eb)])
            if rem or min(e) < 0:
                raise ArithmeticError("inexact polynomial division")
            out[e] = q
        return out
    lt_b = max(b, key=_grlex)
    lc_b = b[lt_b]
    rest = dict(a)
    quot = {}
    while rest:
        lt = max(rest, key=_grlex)
        e = tuple([x - y for x, y in zip(lt, lt_b)])
        q, rem = divmod(rest[lt], lc_b)
        if rem or min(e) < 0:
            raise ArithmeticError("inexact polynomial division")
        quot[e] = q
        for eb, cb in b.items():
            t = tuple([x + y for x, y in zip(e, eb)])
            v = rest.get(t, 0) - q * cb
            if v:
                rest[t] = v
            else:
                rest.pop(t, None)
    return quot


def bareiss_poly(matrix, d: int) -> dict:
    """Determinant of a square matrix of integer-coefficient polynomials."""
    m = [list(row) for row in matrix]
    n = len(m)
    one = {(0,) * d: 1}
    if n == 0:
        return one
    sign = 1
    prev = one
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return {}
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        top = m[c][c]
        rowc = m[c]
        for i in range(c + 1, n):
            rowi = m[i]
            lead = rowi[c]
            for j in range(c + 1, n):
                num = pmul(rowi[j], top)
                if lead and rowc[j]:
                    num = psub(num, pmul(lead, rowc[j]))
                rowi[j] = pdiv_exact(num, prev) if prev is not one else num
        prev = top
    det = m[n - 1][n - 1]
    if sign < 0:
        det = {e: -c for e, c in det.items()}
    return det
