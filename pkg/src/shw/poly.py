"""Sparse generalised polynomials with exact rational coefficients.

A :class:`GenPolynomial` maps exponent vectors (tuples of rationals, one
entry per coordinate) to nonzero rational coefficients.  Exponents may be
negative or fractional, which covers Laurent and generalised monomials.

Rationals are :class:`fractions.Fraction`; values with denominator 1 are
stored as plain ``int`` so that the common all-integer case stays fast.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

Number = int | Fraction
Exps = tuple  # tuple[Number, ...]


def rational(value) -> Number:
    """Normalise ``value`` to an ``int`` if integral, else a ``Fraction``."""
    if type(value) is int:
        return value
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or a string")
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


def exps_of(values: Iterable) -> Exps:
    return tuple(rational(v) for v in values)


def is_natural(exps: Exps) -> bool:
    return all(type(e) is int and e >= 0 for e in exps)


def falling(n: Number, r: int) -> Number:
    """Falling factorial n(n-1)...(n-r+1); empty product is 1."""
    out = 1
    for ell in range(r):
        out *= n - ell
    return out


def canonical_key(exps: Exps):
    """Ascending canonical order: 1, x, y, x^2, xy, y^2, ..."""
    return (sum(exps), tuple(-e for e in exps))


def print_key(exps: Exps):
    """Printing order: highest total degree first, x^2 before xy before y^2."""
    return (-sum(exps), tuple(-e for e in exps))


class GenPolynomial:
    """Immutable finite sum of rational multiples of generalised monomials."""

    __slots__ = ("d", "_terms", "_hash")

    def __init__(self, d: int, terms: Mapping | Iterable | None = None):
        if d < 1:
            raise ValueError(f"dimension must be >= 1, got {d}")
        clean: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        for e, c in items:
            e = exps_of(e)
            if len(e) != d:
                raise ValueError(f"exponent vector {e} does not have length {d}")
            c = rational(c)
            if c:
                c = clean.get(e, 0) + c
                if c:
                    clean[e] = c
                else:
                    del clean[e]
        self.d = d
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, d: int, terms: dict) -> "GenPolynomial":
        # trusted constructor: keys already canonical, no zero coefficients
        p = object.__new__(cls)
        p.d = d
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, d: int) -> "GenPolynomial":
        return cls._wrap(d, {})

    @classmethod
    def constant(cls, d: int, c=1) -> "GenPolynomial":
        c = rational(c)
        return cls._wrap(d, {(0,) * d: c} if c else {})

    @classmethod
    def monomial(cls, exps: Sequence, coeff=1) -> "GenPolynomial":
        e = exps_of(exps)
        c = rational(coeff)
        return cls._wrap(len(e), {e: c} if c else {})

    @classmethod
    def variable(cls, i: int, d: int) -> "GenPolynomial":
        """The coordinate function x^(i+1) (``i`` is 0-based)."""
        return cls.monomial(tuple(int(j == i) for j in range(d)))

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator:
        """Terms in ascending canonical order."""
        for e in sorted(self._terms, key=canonical_key):
            yield e, self._terms[e]

    def support(self) -> list:
        return sorted(self._terms, key=canonical_key)

    def coefficient(self, exps: Sequence) -> Number:
        return self._terms.get(exps_of(exps), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def sole_term(self) -> tuple:
        if len(self._terms) != 1:
            raise ValueError("polynomial is not a single term")
        return next(iter(self._terms.items()))

    def is_natural(self) -> bool:
        """True when every exponent is a non-negative integer."""
        return all(is_natural(e) for e in self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, GenPolynomial):
            return self.d == other.d and self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self == GenPolynomial.constant(self.d, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.d, frozenset(self._terms.items())))
        return self._hash

    def _coerce(self, other) -> "GenPolynomial":
        if isinstance(other, GenPolynomial):
            if other.d != self.d:
                raise ValueError(f"dimension mismatch: {self.d} vs {other.d}")
            return other
        return GenPolynomial.constant(self.d, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            c = out.get(e, 0) + c
            if c:
                out[e] = c
            else:
                out.pop(e, None)
        return GenPolynomial._wrap(self.d, out)

    __radd__ = __add__

    def __neg__(self):
        return GenPolynomial._wrap(self.d, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, factor) -> "GenPolynomial":
        factor = rational(factor)
        if not factor:
            return GenPolynomial.zero(self.d)
        return GenPolynomial._wrap(
            self.d, {e: rational(c * factor) for e, c in self._terms.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, GenPolynomial):
            if isinstance(other, (int, Rational)):
                return self.scale(other)
            return NotImplemented
        other = self._coerce(other)
        out: dict = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = tuple(rational(a + b) for a, b in zip(ea, eb))
                c = out.get(e, 0) + ca * cb
                if c:
                    out[e] = rational(c)
                else:
                    out.pop(e, None)
        return GenPolynomial._wrap(self.d, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def shift_exponents(self, offset: Sequence) -> "GenPolynomial":
        """Multiply by the generalised monomial x^offset."""
        off = exps_of(offset)
        return GenPolynomial._wrap(
            self.d,
            {tuple(rational(a + b) for a, b in zip(e, off)): c for e, c in self._terms.items()},
        )

    def permute_coordinates(self, perm: Sequence[int]) -> "GenPolynomial":
        """Return the polynomial with coordinate ``perm[i]`` renamed to ``i``."""
        return GenPolynomial._wrap(
            self.d, {tuple(e[j] for j in perm): c for e, c in self._terms.items()}
        )

    def __str__(self) -> str:
        from .grammar import format_poly

        return format_poly(self)

    def __repr__(self) -> str:
        return f"GenPolynomial({str(self)!r}, d={self.d})"


def derive(p: GenPolynomial, r: Sequence[int]) -> GenPolynomial:
    """Apply the differential operator d^|r| / dx^r to ``p``.

    Each term c*x^n becomes c * prod_i n_i(n_i-1)...(n_i-r_i+1) * x^(n-r).
    Terms whose falling-factorial factor vanishes are dropped, so natural
    exponents never produce spurious negative powers.
    """
    r = tuple(r)
    if len(r) != p.d:
        raise ValueError(f"multi-index {r} does not match dimension {p.d}")
    if not any(r):
        return p
    out = {}
    for e, c in p._terms.items():
        f = c
        for n_i, r_i in zip(e, r):
            if r_i:
                f *= falling(n_i, r_i)
                if not f:
                    break
        if f:
            out[tuple(rational(n_i - r_i) for n_i, r_i in zip(e, r))] = rational(f)
    return GenPolynomial._wrap(p.d, out)


def degree_profile(p: GenPolynomial):
    """Return ``(total, per_coordinate)``; ``None`` stands for the undefined
    degree of the zero polynomial."""
    if not p:
        return None, [None] * p.d
    total = max(sum(e) for e in p._terms)
    per = [max(e[i] for e in p._terms) for i in range(p.d)]
    return rational(total), [rational(v) for v in per]


def multi_factorial(r: Sequence[int]) -> int:
    from math import factorial

    return prod(factorial(v) for v in r)
