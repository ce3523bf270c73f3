"""Spans of polynomials and the algebras generated under the bracket.

A :class:`SpanBasis` is a reduced row-echelon basis of a finite-dimensional
space of polynomials; the leading monomial of each vector is its highest
term in the canonical graded order.  Everything else in this module is
built from spans and brackets of N-element subsets of a basis (by
multilinearity and antisymmetry these generate the full image).
"""

from __future__ import annotations

import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, islice
from math import prod

from .combinatorics import BracketContext, context, degree_shift, standard_monomials
from .grammar import VARIABLES, format_poly, parse_poly
from .poly import GenPolynomial, canonical_key, is_natural, rational
from .vandermonde import van_det
from .wronskian import bracket, bracket_monomial, bracket_via_monomials

log = logging.getLogger(__name__)

EXPANSION_LIMIT = 256
CHUNK = 2048


def thread_count() -> int:
    """Worker count from SHW_THREADS; 0 or unset means automatic.

    Brackets are pure Python, so with the GIL in place extra threads only
    add overhead and the automatic choice is 1.
    """
    raw = os.environ.get("SHW_THREADS", "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"SHW_THREADS must be an integer, got {raw!r}") from None
    if n < 0:
        raise ValueError("SHW_THREADS must be >= 0")
    if n:
        return n
    gil = getattr(sys, "_is_gil_enabled", lambda: True)()
    return 1 if gil else (os.cpu_count() or 1)


# ---------------------------------------------------------------- spans

def _lead(terms: dict):
    return max(terms, key=canonical_key)


class SpanBasis:
    """Immutable reduced echelon basis over Q."""

    __slots__ = ("d", "_rows")

    def __init__(self, d: int, rows: dict | None = None):
        self.d = d
        self._rows = rows or {}  # lead exponent -> terms dict, lead coeff 1

    @property
    def polys(self) -> tuple:
        return tuple(
            GenPolynomial._wrap(self.d, self._rows[e])
            for e in sorted(self._rows, key=canonical_key)
        )

    @property
    def support(self) -> frozenset:
        return frozenset(e for row in self._rows.values() for e in row)

    @property
    def leads(self) -> list:
        return sorted(self._rows, key=canonical_key)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    def __iter__(self):
        return iter(self.polys)

    def __eq__(self, other):
        return isinstance(other, SpanBasis) and self.d == other.d and self._rows == other._rows

    def __repr__(self):
        return f"SpanBasis([{', '.join(format_poly(p) for p in self.polys)}])"

    def is_monomial(self) -> bool:
        return all(len(row) == 1 for row in self._rows.values())

    def max_degree(self):
        if not self._rows:
            return None
        return max(sum(e) for e in self.support)

    def _reduce_terms(self, terms: dict) -> dict:
        out = dict(terms)
        for e in [e for e in terms if e in self._rows]:
            c = out.get(e)
            if not c:
                continue
            for f, v in self._rows[e].items():
                w = out.get(f, 0) - c * v
                if w:
                    out[f] = rational(w)
                else:
                    out.pop(f, None)
        return out

    def reduce(self, p: GenPolynomial) -> GenPolynomial:
        """Residue of ``p`` modulo the span (zero iff ``p`` is in it)."""
        return GenPolynomial._wrap(self.d, self._reduce_terms(dict(p.terms)))

    def contains(self, p: GenPolynomial) -> bool:
        return not self._reduce_terms(dict(p.terms))

    def extend(self, polys) -> "SpanBasis":
        rows = {e: dict(r) for e, r in self._rows.items()}
        out = SpanBasis(self.d, rows)
        for p in polys:
            out._insert(dict(p.terms))
        return out

    def _insert(self, terms: dict) -> bool:
        v = self._reduce_terms(terms)
        if not v:
            return False
        lead = _lead(v)
        c = v[lead]
        if c != 1:
            inv = Fraction(1) / c
            v = {e: rational(x * inv) for e, x in v.items()}
        for row in self._rows.values():
            a = row.get(lead)
            if a:
                for f, x in v.items():
                    w = row.get(f, 0) - a * x
                    if w:
                        row[f] = rational(w)
                    else:
                        row.pop(f, None)
        self._rows[lead] = v
        return True


def span_reduce(polys, d: int | None = None) -> SpanBasis:
    polys = list(polys)
    if d is None:
        if not polys:
            raise ValueError("cannot infer the dimension of an empty list; pass d")
        d = polys[0].d
    for p in polys:
        if p.d != d:
            raise ValueError(f"mixed dimensions {p.d} and {d}")
    return SpanBasis(d).extend(polys)


def standard_span(ctx: BracketContext) -> SpanBasis:
    """The space of polynomials of degree <= k, spanned by monomials."""
    return span_reduce([GenPolynomial.monomial(r) for r in ctx.rows], ctx.d)


# ---------------------------------------------------------- bracketing

def evaluate(ctx: BracketContext, args) -> GenPolynomial:
    """Bracket of ``args`` by the cheapest exact route available."""
    if all(a.is_monomial() for a in args):
        coeff, exp = bracket_monomial(ctx, [a.sole_term()[0] for a in args])
        if not coeff:
            return GenPolynomial.zero(ctx.d)
        scale = prod(a.sole_term()[1] for a in args)
        return GenPolynomial.monomial(exp, coeff * scale)
    if any(not a for a in args):
        return GenPolynomial.zero(ctx.d)
    if prod(len(a) for a in args) <= EXPANSION_LIMIT:
        return bracket_via_monomials(ctx, args)
    return bracket(ctx, args)


def _pool_map(fn, chunks):
    n = thread_count()
    if n <= 1:
        for chunk in chunks:
            yield fn(chunk)
        return
    with ThreadPoolExecutor(max_workers=n) as ex:
        yield from ex.map(fn, chunks)


def _chunked(it, size=CHUNK):
    it = iter(it)
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield block


def _subsets(count: int, N: int, new_from: int = 0):
    """N-subsets of range(count) that include at least one index >= new_from."""
    for last in range(max(new_from, N - 1), count):
        for head in combinations(range(last), N - 1):
            yield head + (last,)


def _monomial_targets(ctx: BracketContext, exps: list, known: set, new_from: int = 0) -> list:
    """Exponents reachable as nonzero brackets of monic monomials.

    Targets already in ``known`` are not re-evaluated, since every bracket of
    monomials is a multiple of the predicted monomial.
    """
    shift = degree_shift(ctx.d, ctx.k)[0]
    natural = all(is_natural(e) for e in exps)
    d = ctx.d
    found = []
    seen = set(known)

    def work(block):
        local = []
        for sub in block:
            chosen = [exps[i] for i in sub]
            target = tuple(rational(sum(e[c] for e in chosen) - shift) for c in range(d))
            if target in seen:
                continue
            if natural and min(target) < 0:
                continue  # deficient in some coordinate
            if van_det(ctx, chosen):
                local.append(target)
                seen.add(target)
        return local

    for local in _pool_map(work, _chunked(_subsets(len(exps), ctx.N, new_from))):
        for t in local:
            if t not in known and t not in found:
                found.append(t)
    return found


def bracket_image(ctx: BracketContext, basis: SpanBasis) -> SpanBasis:
    """Span of all brackets of basis elements."""
    if basis.d != ctx.d:
        raise ValueError("basis dimension does not match the context")
    polys = basis.polys
    if len(polys) < ctx.N:
        return SpanBasis(ctx.d)
    if basis.is_monomial():
        targets = _monomial_targets(ctx, [p.sole_term()[0] for p in polys], set())
        return span_reduce([GenPolynomial.monomial(t) for t in targets], ctx.d)

    def work(block):
        return [evaluate(ctx, [polys[i] for i in sub]) for sub in block]

    out = SpanBasis(ctx.d)
    for values in _pool_map(work, _chunked(combinations(range(len(polys)), ctx.N))):
        for v in values:
            if v:
                out._insert(dict(v.terms))
    return out


def is_closed(ctx: BracketContext, basis: SpanBasis):
    """``(closed, witness)``; the witness is ``(args, value)`` for one
    bracket that escapes the span, else ``None``."""
    polys = basis.polys
    for sub in combinations(range(len(polys)), ctx.N):
        args = tuple(polys[i] for i in sub)
        value = evaluate(ctx, args)
        if value and not basis.contains(value):
            return False, (args, value)
    return True, None


def is_perfect(ctx: BracketContext, basis: SpanBasis):
    """``(perfect, missing)``: missing spans the basis directions absent
    from the bracket image."""
    image = bracket_image(ctx, basis)
    residues = [image.reduce(p) for p in basis.polys]
    missing = span_reduce([r for r in residues if r], ctx.d)
    inside = all(basis.contains(p) for p in image.polys)
    return (inside and missing.dim == 0), missing


def monomial_top_perfect_possible(d: int, k: int) -> bool:
    return k * (d - 1) <= 1


# ------------------------------------------------------- classification

class Kind(Enum):
    INCONSISTENT = "Inconsistent"
    TRIVIAL = "Trivial"
    LONELY = "Lonely"
    CHUBBY = "Chubby"
    LANKY = "Lanky"
    UNRESOLVED = "Unresolved"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    top: GenPolynomial | None = None
    pair: tuple = ()
    coordinate: int | None = None  # 1-based
    ell: int | None = None
    reason: str = ""

    def __str__(self):
        if self.kind is Kind.LONELY:
            return f"Lonely({format_poly(self.top)})"
        if self.kind is Kind.CHUBBY:
            return f"Chubby({format_poly(self.pair[0])}, {format_poly(self.pair[1])})"
        if self.kind is Kind.LANKY:
            return f"Lanky({VARIABLES[self.coordinate - 1] if self.coordinate <= 8 else self.coordinate}, {self.ell})"
        return self.kind.value


def _divisor_of_degree(exps, degree, reverse=False):
    """Greedy divisor of x^exps with the given total degree."""
    out = [0] * len(exps)
    left = degree
    order = range(len(exps) - 1, -1, -1) if reverse else range(len(exps))
    for i in order:
        take = min(exps[i], left)
        out[i] = take
        left -= take
    return tuple(out)


def classify(ctx: BracketContext, basis: SpanBasis) -> Classification:
    k = ctx.k
    low = standard_span(ctx)
    if not all(basis.contains(p) for p in low.polys):
        return Classification(Kind.INCONSISTENT, reason="span misses a polynomial of degree <= k")
    stripped = []
    for p in basis.polys:
        high = {e: c for e, c in p.terms.items() if sum(e) > k}
        if high:
            stripped.append(GenPolynomial._wrap(ctx.d, high))
    extra = span_reduce(stripped, ctx.d)
    if not extra.dim:
        return Classification(Kind.TRIVIAL)
    if not all(is_natural(e) for e in extra.support):
        return Classification(Kind.UNRESOLVED, reason="non-natural exponents above degree k")
    tops = []
    for p in extra.polys:
        part = {e: c for e, c in p.terms.items() if sum(e) == k + 1}
        if part:
            tops.append(GenPolynomial._wrap(ctx.d, part))
    top_span = span_reduce(tops, ctx.d)
    tall = sorted((e for e in extra.support if sum(e) > k + 1), key=canonical_key)
    if top_span.dim >= 2:
        p, q = top_span.polys[:2]
        return Classification(Kind.CHUBBY, pair=(p, q), reason="two independent degree k+1 directions")
    if not tall:
        return Classification(Kind.LONELY, top=extra.polys[0])
    for e in tall:
        if sum(1 for v in e if v) >= 2:
            a = _divisor_of_degree(e, k + 1)
            b = _divisor_of_degree(e, k + 1, reverse=True)
            return Classification(
                Kind.CHUBBY,
                pair=(GenPolynomial.monomial(a), GenPolynomial.monomial(b)),
                reason=f"tall monomial {format_poly(GenPolynomial.monomial(e))} mixes coordinates",
            )
    coords = {next(i for i, v in enumerate(e) if v) for e in tall}
    if len(coords) == 1:
        i = coords.pop()
        pure = tuple(k + 1 if c == i else 0 for c in range(ctx.d))
        if top_span.dim == 0 or (top_span.dim == 1 and top_span.contains(GenPolynomial.monomial(pure))):
            ell = max(e[i] for e in tall) - k
            return Classification(Kind.LANKY, coordinate=i + 1, ell=ell)
    a, b = tall[0], tall[-1]
    return Classification(
        Kind.CHUBBY,
        pair=(GenPolynomial.monomial(_divisor_of_degree(a, k + 1)),
              GenPolynomial.monomial(_divisor_of_degree(b, k + 1))),
        reason="pure powers in several coordinates",
    )


# ------------------------------------------------------------- closure

class Status(Enum):
    STABILIZED = "Stabilized"
    DEGREE_CAP_HIT = "DegreeCapHit"
    ITER_CAP_HIT = "IterCapHit"


@dataclass
class GrowthReport:
    dims: list
    status: Status
    max_degree_seen: object
    basis: SpanBasis = field(repr=False)

    def __str__(self):
        if self.status is Status.STABILIZED:
            return f"Stabilized({self.dims[-1]})"
        return self.status.value


def closure_iterate(ctx: BracketContext, generators, max_iter: int = 16, max_degree=None) -> GrowthReport:
    """Adjoin bracket images until the span stops growing or a cap is hit.

    ``dims[0]`` is the dimension of the generator span and each further
    entry the dimension after one more round.
    """
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    if max_degree is None:
        max_degree = 4 * (ctx.k + 1)
    if max_degree < ctx.k + 1:
        raise ValueError("max_degree must be >= k+1")
    basis = generators if isinstance(generators, SpanBasis) else span_reduce(list(generators), ctx.d)
    dims = [basis.dim]
    top = basis.max_degree()
    if top is not None and top > max_degree:
        return GrowthReport(dims, Status.DEGREE_CAP_HIT, top, basis)
    monomial = basis.is_monomial()
    order = [p.sole_term()[0] for p in basis.polys] if monomial else None
    new_from = 0
    for _ in range(max_iter):
        if monomial:
            fresh = _monomial_targets(ctx, order, set(order), new_from)
            new_from = len(order)
            order = order + fresh
            grown = basis.extend(GenPolynomial.monomial(t) for t in fresh)
        else:
            grown = basis.extend(bracket_image(ctx, basis).polys)
        dims.append(grown.dim)
        top = grown.max_degree()
        if grown.dim == basis.dim:
            return GrowthReport(dims, Status.STABILIZED, top, grown)
        basis = grown
        if top is not None and top > max_degree:
            return GrowthReport(dims, Status.DEGREE_CAP_HIT, top, basis)
    return GrowthReport(dims, Status.ITER_CAP_HIT, basis.max_degree(), basis)


# ----------------------------------------------------- divergence

@dataclass
class DivergenceWitness:
    case: str
    coordinate: int  # 1-based
    p: GenPolynomial
    q: GenPolynomial
    steps: list  # [(coeff, monic monomial)], steps[0] = (1, p)


def _case(k, n, m):
    """Name the divergence case for p = x^n, q = x^m in coordinate 0."""
    if m[0] > 1 and n[0] == 0:
        return "a"
    if m[0] > n[0] >= 1:
        return "b"
    if m[0] == 1 and n[0] == 0:
        return "c"
    raise ValueError("pair not in normal form")


def normalise_pair(ctx: BracketContext, p: GenPolynomial, q: GenPolynomial):
    """Return ``(case, coordinate, p_exps, q_exps)`` in divergence normal
    form, before any coordinate permutation (coordinate is 0-based)."""
    for a in (p, q):
        if a.d != ctx.d or not a.is_monomial() or not a.is_natural():
            raise ValueError("divergence witness needs natural monomials of the bracket dimension")
    n, m = p.sole_term()[0], q.sole_term()[0]
    k = ctx.k
    coords_n = [i for i, v in enumerate(n) if v]
    coords_m = [i for i, v in enumerate(m) if v]
    if len(coords_n) == 1 and coords_n == coords_m and sum(n) != sum(m):
        if sum(n) < sum(m):
            n, m = m, n
        if sum(m) != k + 1 or sum(n) < k + 2:
            raise ValueError("lanky case needs powers of degree k+1 and >= k+2")
        return "lanky", coords_n[0], n, m
    if sum(n) != k + 1 or sum(m) != k + 1 or n == m:
        raise ValueError("need two distinct degree k+1 monomials (chubby) or a pure-power tower (lanky)")
    i = next(c for c in range(ctx.d) if n[c] != m[c])
    if n[i] > m[i]:
        n, m = m, n
    return None, i, n, m


def divergence_witness(ctx: BracketContext, p: GenPolynomial, q: GenPolynomial, length: int) -> DivergenceWitness:
    """Build p_0 = p and p_j = [q, p_(j-1), standard rows 3..N] for j up to
    ``length``, after putting (p, q) in normal form."""
    if length < 1:
        raise ValueError("length must be >= 1")
    case, i, n, m = normalise_pair(ctx, p, q)
    perm = [i] + [c for c in range(ctx.d) if c != i]
    inverse = [perm.index(c) for c in range(ctx.d)]
    pn = GenPolynomial.monomial(n).permute_coordinates(perm)
    qn = GenPolynomial.monomial(m).permute_coordinates(perm)
    if case is None:
        case = _case(ctx.k, pn.sole_term()[0], qn.sole_term()[0])
    rest = standard_monomials(ctx.d, ctx.k)[2:]
    steps = [(1, pn)]
    cur = pn
    for step in range(1, length + 1):
        value = evaluate(ctx, [qn, cur] + rest)
        if not value or not value.is_monomial():
            raise ArithmeticError(
                f"divergence step {step} vanished for q={format_poly(qn)}, p={format_poly(cur)} in {ctx}"
            )
        e, c = value.sole_term()
        cur = GenPolynomial.monomial(e)
        steps.append((c, cur))
    steps = [(c, a.permute_coordinates(inverse)) for c, a in steps]
    return DivergenceWitness(
        case, i + 1, GenPolynomial.monomial(n), GenPolynomial.monomial(m), steps
    )


def expected_step_factor(ctx: BracketContext, case: str, n0, m0, step: int):
    """Step factor predicted for p_step from p_(step-1); the
    exponents are already in normal form with the distinguished coordinate
    first."""
    k = ctx.k
    j = step - 1
    if case == "a":
        return k * (m0[0] + j)
    if case == "b":
        return k * (m0[0] - n0[0] + j)
    if case == "c":
        return (j + 1) * k
    if case == "lanky":
        ell = sum(n0) - k
        return j * k + ell - 1
    raise ValueError(case)


# ------------------------------------------------------- diagnostics

class DegreeLabel(Enum):
    DEFICIENT = "Deficient"
    EXACT = "Exact"
    ABUNDANT = "Abundant"


@dataclass(frozen=True)
class DegreeSumDiagnostics:
    sums: tuple
    labels: tuple
    shift: int
    short: bool  # fewer than N distinct support monomials

    @property
    def promising(self) -> bool:
        return all(lab is DegreeLabel.ABUNDANT for lab in self.labels)


def degree_sum_diagnostics(ctx: BracketContext, basis: SpanBasis) -> DegreeSumDiagnostics:
    support = sorted(basis.support, key=canonical_key)
    shift = degree_shift(ctx.d, ctx.k)[0]
    sums, labels = [], []
    for i in range(ctx.d):
        degs = sorted((e[i] for e in support), reverse=True)[: ctx.N]
        total = rational(sum(degs))
        sums.append(total)
        if total < shift:
            labels.append(DegreeLabel.DEFICIENT)
        elif total == shift:
            labels.append(DegreeLabel.EXACT)
        else:
            labels.append(DegreeLabel.ABUNDANT)
    return DegreeSumDiagnostics(tuple(sums), tuple(labels), shift, len(support) < ctx.N)


# ------------------------------------------------------- algebra files

def load_algebra(source):
    """Read ``{"dim", "order", "generators"}`` from a path, file or dict."""
    if isinstance(source, dict):
        data = source
    elif hasattr(source, "read"):
        data = json.load(source)
    else:
        with open(source, encoding="utf-8") as fh:
            data = json.load(fh)
    try:
        d, k, gens = int(data["dim"]), int(data["order"]), data["generators"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed algebra description: {exc}") from None
    if not isinstance(gens, list):
        raise ValueError("generators must be a list of strings")
    ctx = context(d, k)
    return ctx, [parse_poly(g, d) for g in gens]


def dump_algebra(ctx: BracketContext, polys) -> dict:
    return {"dim": ctx.d, "order": ctx.k, "generators": [format_poly(p) for p in polys]}
