"""Row multi-indices of the complete Wronskian and related constants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

from .poly import GenPolynomial, multi_factorial


def arity(d: int, k: int) -> int:
    if d < 1 or k < 1:
        raise ValueError(f"need d >= 1 and k >= 1, got d={d}, k={k}")
    return comb(d + k, k)


def enumerate_rows(d: int, k: int) -> list:
    """Multi-indices of order 0..k, each order block listed as
    combinations-with-replacement of the coordinates, so x^2 precedes xy."""
    arity(d, k)
    rows = []
    for order in range(k + 1):
        for combo in combinations_with_replacement(range(d), order):
            rows.append(tuple(combo.count(i) for i in range(d)))
    return rows


@dataclass(frozen=True)
class BracketContext:
    d: int
    k: int
    N: int
    rows: tuple

    @property
    def shift(self) -> int:
        return degree_shift(self.d, self.k)[0]

    def __str__(self):
        return f"ctx(d={self.d}, k={self.k}, N={self.N})"


@lru_cache(maxsize=None)
def context(d: int, k: int) -> BracketContext:
    rows = tuple(enumerate_rows(d, k))
    ctx = BracketContext(d, k, len(rows), rows)
    if ctx.N != arity(d, k):
        raise RuntimeError(f"row enumeration gave {ctx.N} rows for d={d}, k={k}")
    return ctx


@lru_cache(maxsize=None)
def degree_shift(d: int, k: int) -> tuple:
    """Return ``(per_coordinate, total)``: kN/(d+1) and kdN/(d+1).

    The closed forms are checked against a direct sum over the rows.
    """
    n = arity(d, k)
    per = Fraction(k * n, d + 1)
    total = Fraction(k * d * n, d + 1)
    if per.denominator != 1 or total.denominator != 1:
        raise RuntimeError(f"non-integral degree shift for d={d}, k={k}")
    rows = enumerate_rows(d, k)
    sums = [sum(r[i] for r in rows) for i in range(d)]
    if any(s != per for s in sums) or sum(sums) != total:
        raise RuntimeError(f"degree shift mismatch for d={d}, k={k}: {sums}")
    return int(per), int(total)


def standard_monomials(d: int, k: int) -> list:
    """x^r / r! for every row r, in row order."""
    return [
        GenPolynomial.monomial(r, Fraction(1, multi_factorial(r)))
        for r in context(d, k).rows
    ]
