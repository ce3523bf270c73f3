"""Reproducible checks of published values and identities.

Each check returns a :class:`CheckResult`.  The ``selfcheck`` command and
the acceptance tests both run :func:`run_all`.  Every equality is exact.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod

from . import algebra as alg
from .closed_forms import (
    golden_arguments,
    golden_bracket,
    lonely_differential_form,
    lonely_structure_bracket,
    witt_bracket,
    witt_generator,
    witt_shift,
)
from .combinatorics import arity, context, degree_shift, enumerate_rows, standard_monomials
from .grammar import parse_poly
from .poly import GenPolynomial, degree_profile, derive, multi_factorial
from .vandermonde import (
    CertificateKind,
    ordinary_vandermonde_factored,
    quasi_triangular_det,
    quasi_triangular_matrix,
    van_det,
    vanishing_certificate,
)
from .wronskian import bracket, bracket_monomial, wronskian_matrix

SEED = 1729


class CheckFailure(AssertionError):
    pass


@dataclass
class CheckResult:
    key: str
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.key}: {self.title} ({self.detail}; {self.seconds:.2f}s)"


def expect(cond, message):
    if not cond:
        raise CheckFailure(message)


def P(text, d):
    return parse_poly(text, d)


def mono(exps, coeff=1):
    return GenPolynomial.monomial(exps, coeff)


def unnormalised(d, k):
    return [mono(r) for r in context(d, k).rows]


def _rand_rational(rng, lo=-6, hi=6, dens=(1, 1, 2, 3)):
    return Fraction(rng.randint(lo, hi), rng.choice(dens))


# ------------------------------------------------------------------ 1

def check_sl2(rng):
    ctx = context(1, 1)
    e, h, f = P("1", 1), P("-2*x", 1), P("-x^2", 1)
    expect(bracket(ctx, [h, e]) == e * 2, "W(h,e) != 2e")
    expect(bracket(ctx, [h, f]) == f * -2, "W(h,f) != -2f")
    expect(bracket(ctx, [e, f]) == h, "W(e,f) != h")
    return "W(h,e)=2e, W(h,f)=-2f, W(e,f)=h"


# ------------------------------------------------------------------ 2

def check_divided_powers(rng):
    count = 0
    for n in range(2, 7):
        ctx = context(1, n - 1)
        full = [mono((j,), Fraction(1, factorial(j))) for j in range(n + 1)]
        for ell in range(n + 1):
            args = full[:ell] + full[ell + 1:]
            want = mono((n - ell,), Fraction(1, factorial(n - ell)))
            got = bracket(ctx, args)
            expect(got == want, f"N={n}, l={ell}: got {got}, want {want}")
            count += 1
    return f"{count} brackets"


# ------------------------------------------------------------------ 3

# argument triples and values; the [1,y,xy] and [x,y,xy] entries are the
# determinant values, which differ from the misprinted table
EXAMPLE3 = {
    "x^2": [("1 x y", "1"), ("1 x x^2", "0"), ("1 y x^2", "-2*x"), ("x y x^2", "-x^2")],
    "x*y": [("1 x y", "1"), ("1 x x*y", "x"), ("1 y x*y", "-y"), ("x y x*y", "-x*y")],
    "y^2": [("1 x y", "1"), ("1 x y^2", "2*y"), ("1 y y^2", "0"), ("x y y^2", "-y^2")],
}


def check_example3(rng):
    ctx = context(2, 1)
    for top, table in EXAMPLE3.items():
        for args, value in table:
            got = bracket(ctx, [P(a, 2) for a in args.split()])
            expect(got == P(value, 2), f"A({top}): [{args}] = {got}, want {value}")
        rep = alg.closure_iterate(ctx, [P(a, 2) for a in ("1", "x", "y", top)])
        expect(rep.status is alg.Status.STABILIZED and rep.dims[-1] == 4,
               f"A({top}) closure {rep} dims {rep.dims}")
    return "12 brackets, 3 closures stabilise at 4"


# ------------------------------------------------------------------ 4, 5

def _random_tuples(rng, ctx, rational_share=0.3):
    out = []
    for _ in range(ctx.N):
        if rng.random() < rational_share:
            out.append(tuple(_rand_rational(rng, -4, 6) for _ in range(ctx.d)))
        else:
            out.append(tuple(rng.randint(0, 5) for _ in range(ctx.d)))
    return out


SMALL = [(d, k) for d in (1, 2, 3) for k in (1, 2, 3)]


def check_vandermonde_identity(rng):
    n = 0
    for d, k in SMALL:
        ctx = context(d, k)
        for _ in range(200):
            t = _random_tuples(rng, ctx)
            a, b = van_det(ctx, t), quasi_triangular_det(ctx, t)
            expect(a == b, f"{ctx} {t}: {a} != {b}")
            n += 1
    std = context(2, 2)
    expect(van_det(std, std.rows) == 4, "standard rows at (2,2) do not give 4")
    return f"{n} random inputs, standard value 4"


def check_translation(rng):
    n = 0
    for d, k in SMALL:
        ctx = context(d, k)
        for _ in range(100):
            t = _random_tuples(rng, ctx)
            s = [_rand_rational(rng) for _ in range(d)]
            moved = [tuple(a + b for a, b in zip(m, s)) for m in t]
            expect(van_det(ctx, t) == van_det(ctx, moved), f"{ctx} {t} shift {s}")
            n += 1
    return f"{n} shifted inputs"


# ------------------------------------------------------------------ 6

def check_degree_shift(rng):
    for d in range(1, 9):
        for k in range(1, 9):
            rows = enumerate_rows(d, k)
            n = comb(d + k, k)
            expect(len(rows) == n, f"d={d}, k={k}: {len(rows)} rows")
            per, total = Fraction(k * n, d + 1), Fraction(k * d * n, d + 1)
            expect(per.denominator == 1 and total.denominator == 1, f"non-integral at d={d}, k={k}")
            for i in range(d):
                expect(sum(r[i] for r in rows) == per, f"coordinate {i + 1} at d={d}, k={k}")
            expect(sum(map(sum, rows)) == total, f"total at d={d}, k={k}")
            expect(degree_shift(d, k) == (per, total), f"degree_shift({d},{k})")
    return "64 (d,k) pairs"


# ------------------------------------------------------------------ 7

def check_structure(rng):
    n = 0
    for d, k in SMALL:
        ctx = context(d, k)
        std = standard_monomials(d, k)
        for j in range(1, ctx.N + 1):
            for e in itertools.product(range(k + 3), repeat=d):
                args = list(std)
                args[j - 1] = mono(e)
                got = bracket(ctx, args)
                want = lonely_structure_bracket(ctx, j, e)
                expect(got == want, f"{ctx} row {j}, a=x^{e}: {got} != {want}")
                expect(lonely_differential_form(ctx, j, mono(e)) == want, f"differential form {ctx} {j} {e}")
                n += 1
    return f"{n} replacements"


# ------------------------------------------------------------------ 8

# overall constants in the published raw outputs; TEXT applies to the argument
# order (q, p, y, x^2, ...), RAW to (p, y, x^2, ..., q)
GOLDEN_TEXT = {2: 2, 3: 48, 4: 331776, 5: 19813556551680}
GOLDEN_RAW = {2: -2, 3: -48, 4: 331776, 5: 19813556551680}


def _golden_raw_value(k, n, m, const):
    dp, dq = sum(n), sum(m)
    c = const * prod((dp - l) * (dq - l) for l in range(2, k + 1))
    c *= m[0] * n[1] - m[0] - m[1] * n[0] + n[0]
    if not c:
        return GenPolynomial.zero(2)
    return mono((n[0] + m[0] - 1, n[1] + m[1]), c)


def _golden_point(ctx, n, m, raw_check):
    got = bracket(ctx, golden_arguments(ctx, n, m))
    c, e = golden_bracket(ctx, n, m)
    want = mono(e, c) if c else GenPolynomial.zero(ctx.d)
    expect(got == want, f"{ctx} n={n} m={m}: engine {got}, formula {want}")
    k = ctx.k
    if raw_check and k >= 2:
        std = unnormalised(2, k)
        text = bracket(ctx, [mono(m), mono(n)] + std[2:])
        dp, dq = sum(n), sum(m)
        tc = GOLDEN_TEXT[k] * prod((dp - l) * (dq - l) for l in range(2, k + 1))
        tc *= (dp - 1) * m[0] - (dq - 1) * n[0]
        out = (n[0] + m[0] - 1, n[1] + m[1])
        expect(text == (mono(out, tc) if tc else GenPolynomial.zero(2)),
               f"text constant k={k} n={n} m={m}: {text}")
        raw = bracket(ctx, [mono(n)] + std[2:] + [mono(m)])
        expect(raw == _golden_raw_value(k, n, m, GOLDEN_RAW[k]),
               f"raw output k={k} n={n} m={m}: {raw}")


def check_golden(rng):
    n = 0
    for k in (1, 2, 3):
        ctx = context(2, k)
        for n1, n2, m1, m2 in itertools.product(range(6), repeat=4):
            _golden_point(ctx, (n1, n2), (m1, m2), raw_check=True)
            n += 1
    for k in (4, 5):
        ctx = context(2, k)
        for _ in range(200):
            nn = (rng.randint(0, 9), rng.randint(0, 9))
            mm = (rng.randint(0, 9), rng.randint(0, 9))
            _golden_point(ctx, nn, mm, raw_check=True)
            n += 1
    return f"{n} points, published raw-output constants reproduced"


# ------------------------------------------------------------------ 9

XX_TEXT = {2: -1, 3: -48, 4: -497664, 5: -39627113103360}
XX_RAW = {2: 1, 3: 48, 4: -497664, 5: -39627113103360}


def _xx_raw_factor(m1, m2, n1, n2):
    return (2*m1**2*n1*n2 - 2*m1**2*n1 + m1**2*n2**2 - 3*m1**2*n2 + 2*m1**2
            - 2*m1*m2*n1**2 + 2*m1*m2*n1 + 2*m1*n1**2 - 2*m1*n1*n2 - m1*n2**2
            + 3*m1*n2 - 2*m1 - m2**2*n1**2 + m2**2*n1 + 3*m2*n1**2 - 3*m2*n1
            - 2*n1**2 + 2*n1)


def check_xx_replacement(rng):
    n = 0
    for k in (2, 3, 4, 5):
        ctx = context(2, k)
        std = unnormalised(2, k)
        for _ in range(50):
            n1, n2, m1, m2 = (rng.randint(0, 8) for _ in range(4))
            p, q = mono((n1, n2)), mono((m1, m2))
            dp, dq = n1 + n2, m1 + m2
            tail = prod((dp - l) * (dq - l) for l in range(3, k + 1))
            out = (n1 + m1 - 2, n2 + m2)

            text_args = [q] + std[1:]
            text_args[3] = p  # (q, x, y, p, xy, ...)
            curly = (dp - 1) * (dp - 2) * m1 * (m1 - 1) - (dq - 1) * (dq - 2) * n1 * (n1 - 1)
            c = XX_TEXT[k] * tail * curly
            got = bracket(ctx, text_args)
            expect(got == (mono(out, c) if c else GenPolynomial.zero(2)),
                   f"k={k} p={p} q={q}: {got}")

            raw_args = [p] + [s for i, s in enumerate(std) if i not in (0, 3)] + [q]
            c = XX_RAW[k] * tail * _xx_raw_factor(m1, m2, n1, n2)
            got = bracket(ctx, raw_args)
            expect(got == (mono(out, c) if c else GenPolynomial.zero(2)),
                   f"raw k={k} p={p} q={q}: {got}")
            n += 1
    return f"{n} points per form"


# ------------------------------------------------------------------ 10

def random_homogeneous(rng, d, degree):
    exps = [e for e in itertools.product(range(degree + 1), repeat=d) if sum(e) == degree]
    chosen = rng.sample(exps, rng.randint(1, len(exps)))
    terms = {e: rng.choice([-3, -2, -1, 1, 2, 3, Fraction(1, 2)]) for e in chosen}
    return GenPolynomial(d, terms)


def check_lonely_closed(rng):
    n = 0
    for d, k in SMALL:
        ctx = context(d, k)
        low = [mono(r) for r in ctx.rows]
        for _ in range(20):
            p = random_homogeneous(rng, d, k + 1)
            basis = alg.span_reduce(low + [p], d)
            closed, witness = alg.is_closed(ctx, basis)
            expect(closed, f"{ctx} top {p} escapes via {witness}")
            expect(basis.dim == ctx.N + 1, f"{ctx} dim {basis.dim}")
            n += 1
    return f"{n} lonely algebras closed with dim N+1"


# ------------------------------------------------------------------ 11

# (d, k): list of (p, q, expected case); some pairs are given swapped or in a
# permuted coordinate on purpose
DIVERGENCE_CASES = {
    (2, 1): [("y^2", "x^2", "a"), ("x*y", "x^2", "b"), ("y^2", "x*y", "c"),
             ("x^3", "x^2", "lanky"), ("x^2", "y^2", "a")],
    (2, 2): [("y^3", "x^2*y", "a"), ("x*y^2", "x^2*y", "b"), ("y^3", "x*y^2", "c"),
             ("y^5", "y^3", "lanky")],
    (3, 1): [("y*z", "x^2", "a"), ("x*z", "x^2", "b"), ("y^2", "x*z", "c"),
             ("z^4", "z^2", "lanky"), ("x*y", "y*z", "c"), ("y*z", "y^2", "b")],
}


def check_divergence(rng, length=10):
    n = 0
    for (d, k), cases in DIVERGENCE_CASES.items():
        ctx = context(d, k)
        for ps, qs, case in cases:
            p, q = P(ps, d), P(qs, d)
            w = alg.divergence_witness(ctx, p, q, length)
            expect(w.case == case, f"{ctx} ({ps},{qs}) case {w.case}, want {case}")
            expect(len(w.steps) == length + 1, "wrong witness length")
            deg_p = sum(w.p.sole_term()[0])
            deg_q = sum(w.q.sole_term()[0])
            perm = [w.coordinate - 1] + [c for c in range(d) if c != w.coordinate - 1]
            n0 = [w.p.sole_term()[0][c] for c in perm]
            m0 = [w.q.sole_term()[0][c] for c in perm]
            for j, (coeff, m) in enumerate(w.steps):
                deg = sum(m.sole_term()[0])
                expect(deg == (j + 1) * k + (deg_p - k), f"{ctx} {case}: deg p_{j} = {deg}")
                if j == 0:
                    continue
                expect(coeff != 0, f"{ctx} {case}: zero coefficient at step {j}")
                prev_deg = deg - k
                c = Fraction(prod((prev_deg - l) * (deg_q - l) for l in range(2, k + 1)),
                             factorial(k) * factorial(k - 1))
                want = c * alg.expected_step_factor(ctx, case, n0, m0, j)
                expect(coeff == want, f"{ctx} {case} step {j}: {coeff} != {want}")
            gens = [mono(r) for r in ctx.rows] + [p, q]
            rep = alg.closure_iterate(ctx, gens)
            expect(rep.status is alg.Status.DEGREE_CAP_HIT, f"{ctx} ({ps},{qs}) closure {rep}")
            expect(all(a < b for a, b in zip(rep.dims, rep.dims[1:])), f"dims {rep.dims} not increasing")
            n += 1
    return f"{n} witnesses of length {length}, closures hit the degree cap"


# ------------------------------------------------------------------ 12

def check_perfection(rng):
    c3, c2 = context(3, 1), context(2, 1)
    p = P("x*y + y*z + z*x", 3)
    relations = [("1 x y", "x + y"), ("1 x z", "-x - z"), ("1 y z", "y + z"), ("x y z", "x*y + y*z + z*x")]
    for args, value in relations:
        got = bracket(c3, [P(a, 3) for a in args.split()] + [p])
        expect(got == P(value, 3), f"[{args},p] = {got}, want {value}")
    perfect, _ = alg.is_perfect(c3, alg.span_reduce([P(a, 3) for a in "1 x y z".split()] + [p]))
    expect(perfect, "<1,x,y,z,xy+yz+zx> should be perfect")
    for top, want in (("x*y", True), ("x^2", False), ("y^2", False)):
        ok, _ = alg.is_perfect(c2, alg.span_reduce([P(a, 2) for a in ("1", "x", "y", top)]))
        expect(ok == want, f"A({top}) perfect={ok}")
    ok, missing = alg.is_perfect(c3, alg.span_reduce([P(a, 3) for a in "1 x y z x*y".split()]))
    expect(not ok and missing.polys == (P("z", 3),), f"<1,x,y,z,xy> missing {missing}")
    for d, k in [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)]:
        ctx = context(d, k)
        low = [mono(r) for r in ctx.rows]
        tops = [e for e in itertools.product(range(k + 2), repeat=d) if sum(e) == k + 1]
        found = any(alg.is_perfect(ctx, alg.span_reduce(low + [mono(e)], d))[0] for e in tops)
        expect(found == alg.monomial_top_perfect_possible(d, k), f"(d,k)=({d},{k}): exhaustive {found}")
    return "relations, 5 algebras, 6 exhaustive (d,k)"


# ------------------------------------------------------------------ 13

def check_witt(rng):
    n = 0
    for d, k in [(1, 1), (1, 2), (2, 1)]:
        ctx = context(d, k)
        s = witt_shift(ctx)
        for _ in range(100):
            idx = [tuple(_rand_rational(rng, -5, 5) for _ in range(d)) for _ in range(ctx.N)]
            omega, total = witt_bracket(ctx, idx)
            shifted = [tuple(v + s for v in i) for i in idx]
            expect(omega == van_det(ctx, shifted), f"{ctx} shifted omega {idx}")
            got = bracket(ctx, [witt_generator(ctx, i) for i in idx])
            want = witt_generator(ctx, total).scale(omega) if omega else GenPolynomial.zero(d)
            expect(got == want, f"{ctx} {idx}: {got} != {want}")
            n += 1
    ctx = context(1, 1)
    for i in range(-4, 5):
        for j in range(-4, 5):
            omega, total = witt_bracket(ctx, [(i,), (j,)])
            expect(omega == j - i and total == (i + j,), f"[a_{i}, a_{j}]")
    return f"{n} random tuples, classical relation on a 9x9 grid"


# ------------------------------------------------------------------ 14

def check_consistency(rng):
    n = 0
    for d, k in [(1, 1), (1, 2), (2, 1)]:
        ctx = context(d, k)
        pool = list(itertools.product(range(k + 3), repeat=d))
        rows = set(ctx.rows)
        hit_standard = False
        for subset in itertools.combinations(pool, ctx.N):
            val = bracket(ctx, [mono(e) for e in subset])
            n += 1
            if val and val.is_monomial() and not any(val.sole_term()[0]):
                expect(set(subset) == rows, f"{ctx}: constant {val} from {subset}")
                hit_standard = True
        expect(hit_standard, f"{ctx}: standard set not found")
    return f"{n} monomial tuples"


# ------------------------------------------------------------- examples

def check_published_examples(rng):
    """Published values quoted as examples of individual operations."""
    n = [0]

    def eq(a, b, what):
        expect(a == b, f"{what}: {a!r} != {b!r}")
        n[0] += 1

    p3 = P("x*y + y*z + z*x", 3)
    eq(p3, GenPolynomial(3, {(1, 1, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1}), "parse p")
    eq(degree_profile(p3), (2, [1, 1, 1]), "degree profile of p")
    for d, k in [(1, 3), (2, 2), (3, 2)]:
        for r in context(d, k).rows:
            eq(derive(mono(r, Fraction(1, multi_factorial(r))), r), P("1", d), f"divided power {r}")

    eq(arity(2, 1), 3, "arity(2,1)")
    eq(arity(2, 2), 6, "arity(2,2)")
    for k in range(1, 8):
        eq(arity(1, k), k + 1, f"arity(1,{k})")
    eq(enumerate_rows(2, 1), [(0, 0), (1, 0), (0, 1)], "rows(2,1)")
    eq(enumerate_rows(2, 2), [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)], "rows(2,2)")
    eq(enumerate_rows(1, 2), [(0,), (1,), (2,)], "rows(1,2)")
    eq(degree_shift(2, 1), (1, 2), "shift(2,1)")
    for big in range(2, 9):
        eq(degree_shift(1, big - 1), (big * (big - 1) // 2,) * 2, f"shift(1,{big - 1})")
    eq(standard_monomials(2, 1), [P(a, 2) for a in "1 x y".split()], "standard (2,1)")
    eq(standard_monomials(2, 2), [P(a, 2) for a in ("1", "x", "y", "1/2*x^2", "x*y", "1/2*y^2")], "standard (2,2)")
    eq(standard_monomials(1, 2), [P(a, 1) for a in ("1", "x", "1/2*x^2")], "standard (1,2)")

    c21, c22, c31, c11 = context(2, 1), context(2, 2), context(3, 1), context(1, 1)
    f, g, h = P("x^2*y + 3", 2), P("x - y^3", 2), P("x*y", 2)
    m = wronskian_matrix(c21, [f, g, h])
    eq(m, [[f, g, h], [derive(a, (1, 0)) for a in (f, g, h)], [derive(a, (0, 1)) for a in (f, g, h)]], "3x3 matrix")
    m = wronskian_matrix(c31, [P(a, 3) for a in "x y z x*y".split()])
    eq([row[3] for row in m], [P(a, 3) for a in "x*y y x 0".split()], "last column for xy")
    eq(bracket(c11, [P("-2*x", 1), P("1", 1)]), P("2", 1), "W(h,e)")
    eq(bracket(c21, [P(a, 2) for a in "1 x y".split()]), P("1", 2), "[1,x,y]")
    eq(bracket(c21, [P(a, 2) for a in ("x", "y", "y^-1")]), P("2*y^-1", 2), "[x,y,1/y]")
    eq(bracket(c22, [P(a, 2) for a in "1 x y x^2 x*y x*y^2".split()]), P("4*x", 2), "d=k=2 example")
    for big in range(2, 7):
        ctx = context(1, big - 1)
        ms = list(range(0, 2 * big, 2))
        eq(bracket_monomial(ctx, [(v,) for v in ms]),
           (ordinary_vandermonde_factored(ms), (sum(ms) - big * (big - 1) // 2,)), f"d=1 monomials N={big}")
    for d, k in [(1, 3), (2, 2), (2, 3), (3, 2)]:
        ctx = context(d, k)
        eq(bracket_monomial(ctx, ctx.rows), (prod(multi_factorial(r) for r in ctx.rows), (0,) * d), f"rows {ctx}")

    eq(van_det(c22, c22.rows), 4, "van_det standard (2,2)")
    qt = quasi_triangular_matrix(c22, c22.rows)
    eq([qt[i][i] for i in range(6)], [1, 1, 1, 2, 1, 2], "quasi-triangular diagonal")
    eq(all(qt[i][j] == 0 for i in range(6) for j in range(i)), True, "quasi-triangular shape")
    eq(quasi_triangular_det(c22, c22.rows), 4, "quasi-triangular det")
    cert = vanishing_certificate(c21, [(0, 0), (0, 1), (0, 2)])
    eq((cert.kind, cert.coordinate), (CertificateKind.DEFICIENT_DEGREE, 1), "deficient certificate")
    eq(van_det(c21, [(0, 0), (0, 1), (0, 2)]), 0, "deficient det")
    eq(vanishing_certificate(c22, c22.rows).kind, CertificateKind.NONE_FOUND, "standard certificate")

    c12 = context(1, 2)
    eq(bracket(c12, [P(a, 1) for a in ("1", "1/2*x^2", "1/6*x^3")]), P("1/2*x^2", 1), "removed-factorial example")
    eq(lonely_structure_bracket(c12, 2, (3,)).scale(Fraction(1, 6)), P("-1/2*x^2", 1), "structure slot x")
    eq(lonely_structure_bracket(c21, 2, (2, 0)), P("2*x", 2), "structure x^2 in slot x")
    eq(bracket(c21, [P(a, 2) for a in ("1", "y", "x^2")]), P("-2*x", 2), "[1,y,x^2]")
    for d, k in [(1, 3), (2, 2), (3, 2), (2, 3)]:
        ctx = context(d, k)
        for j, r in enumerate(ctx.rows, 1):
            eq(lonely_structure_bracket(ctx, j, r), P(str(multi_factorial(r)), d), f"structure a=x^r {ctx} {j}")
    for d, k in [(2, 1), (2, 2), (3, 1), (2, 3), (2, 4)]:
        ctx = context(d, k)
        x1 = tuple(int(i == 0) for i in range(d))
        eq(golden_bracket(ctx, x1, (0,) * d), (1, (0,) * d), f"golden p=x, q=1 {ctx}")
        eq(bracket(ctx, golden_arguments(ctx, x1, (0,) * d)), P("1", d), f"engine p=x, q=1 {ctx}")
    for k in range(1, 6):
        ctx = context(2, k)
        eq(golden_bracket(ctx, (0, k + 1), (0, k + 2))[0], 0, f"golden y-powers k={k}")
        eq(bracket(ctx, golden_arguments(ctx, (0, k + 1), (0, k + 2))), GenPolynomial.zero(2), f"engine y-powers k={k}")
    eq(witt_shift(c11), 1, "witt shift (1,1)")
    for big in range(2, 8):
        eq(witt_shift(context(1, big - 1)), Fraction(big, 2), f"witt shift N={big}")
    eq(witt_bracket(c11, [(3,), (5,)]), (2, (8,)), "[a3,a5]")

    low21 = [P(a, 2) for a in "1 x y".split()]
    axy = alg.span_reduce(low21 + [P("x*y", 2)])
    eq(axy.dim, 4, "dim A(xy)")
    eq(alg.bracket_image(c21, axy), axy, "image A(xy)")
    ax2 = alg.span_reduce(low21 + [P("x^2", 2)])
    img = alg.bracket_image(c21, ax2)
    eq((img.contains(P("y", 2)), img.dim), (False, 3), "image A(x^2) misses y")
    for d, k in [(1, 2), (2, 2), (3, 1)]:
        ctx = context(d, k)
        eq(alg.bracket_image(ctx, alg.standard_span(ctx)).polys, (P("1", d),), f"image of k_k {ctx}")
    low31 = [P(a, 3) for a in "1 x y z".split()]
    eq(alg.is_closed(c31, alg.span_reduce(low31 + [P("x*y", 3)]))[0], True, "k_1[x,y,z] + xy closed")
    closed, (args, value) = alg.is_closed(c21, alg.span_reduce(low21 + [P("x^2", 2), P("x*y", 2)]))
    eq((closed, degree_profile(value)[0]), (False, 3), "chubby escape has degree 3")
    basis = alg.span_reduce(low31 + [P("x*y", 3)])
    ok, missing = alg.is_perfect(c31, basis)
    eq((ok, missing.polys), (False, (P("z", 3),)), "z missing")
    for big in range(2, 6):
        ctx = context(1, big - 1)
        ok, _ = alg.is_perfect(ctx, alg.span_reduce([mono((j,), Fraction(1, factorial(j))) for j in range(big + 1)]))
        eq(ok, True, f"k_N[x] perfect N={big}")
    eq(alg.monomial_top_perfect_possible(1, 5), True, "perfect possible (1,5)")
    eq(alg.monomial_top_perfect_possible(2, 1), True, "perfect possible (2,1)")
    eq(alg.monomial_top_perfect_possible(3, 1), False, "perfect possible (3,1)")
    eq(str(alg.classify(c21, alg.span_reduce(low21 + [P("x^2", 2)]))), "Lonely(x^2)", "classify A(x^2)")
    eq(str(alg.classify(c21, alg.span_reduce(low21 + [P("x^3", 2)]))), "Lanky(x, 2)", "classify x^3")
    eq(alg.classify(c21, alg.span_reduce(low21 + [P("x^2*y", 2)])).kind, alg.Kind.CHUBBY, "classify x^2y")
    rep = alg.closure_iterate(c21, low21 + [P("x*y", 2)])
    eq((str(rep), rep.dims), ("Stabilized(4)", [4, 4]), "closure A(xy)")
    rep = alg.closure_iterate(c21, low21 + [P("x^2", 2), P("x*y", 2)], max_degree=12)
    eq(rep.status, alg.Status.DEGREE_CAP_HIT, "chubby closure status")
    eq(all(a < b for a, b in zip(rep.dims, rep.dims[1:])), True, "chubby closure dims increase")
    eq(str(alg.closure_iterate(c22, [mono(r) for r in c22.rows])), "Stabilized(6)", "closure k_2[x,y]")
    w = alg.divergence_witness(c21, P("x^3", 2), P("x^2", 2), 3)
    eq(w.steps[1], (1, P("x^4", 2)), "lanky first step")
    w = alg.divergence_witness(c21, P("y^2", 2), P("x*y", 2), 10)
    eq(all(c for c, _ in w.steps), True, "xy, y^2 coefficients nonzero")
    eq([sum(m.sole_term()[0]) for _, m in w.steps], [j + 2 for j in range(11)], "chubby k=1 degrees")
    diag = alg.degree_sum_diagnostics(c21, alg.standard_span(c21))
    eq(diag.labels, (alg.DegreeLabel.EXACT,) * 2, "k_1[x,y] exact")
    eq((diag.sums, diag.shift), ((1, 1), 1), "k_1[x,y] sums")
    c210 = context(2, 10)
    tower = alg.span_reduce([mono((0, j)) for j in range(101)])
    diag = alg.degree_sum_diagnostics(c210, tower)
    eq(diag.labels[0], alg.DegreeLabel.DEFICIENT, "y tower deficient in x")
    pick = random.Random(SEED)
    for _ in range(3):
        chosen = sorted(pick.sample(range(101), c210.N))
        eq(bracket_monomial(c210, [(0, j) for j in chosen])[0], 0, "y tower bracket")
    diag = alg.degree_sum_diagnostics(c21, axy)
    eq((diag.labels, diag.promising), ((alg.DegreeLabel.ABUNDANT,) * 2, True), "A(xy) promising")

    from .cli import run

    eq(run(["bracket", "--dim", "2", "--order", "1", "1", "x", "y"]), (0, "1"), "cli bracket")
    eq(run(["vandermonde", "--dim", "2", "--order", "2", "--tuples", "0,0;1,0;0,1;2,0;1,1;0,2"]), (0, "4"), "cli vandermonde")
    code, out = run(["witt", "--dim", "1", "--order", "1", "--indices", "3;5"])
    eq((code, out.split()), (0, ["omega", "2", "sum", "8"]), "cli witt")
    return f"{n[0]} published values"


CHECKS = [
    ("1", "sl(2) relations", check_sl2),
    ("2", "divided-power tower", check_divided_powers),
    ("3", "d=2, k=1 algebra tables and closure", check_example3),
    ("4", "Vandermonde = quasi-triangular", check_vandermonde_identity),
    ("5", "translation invariance", check_translation),
    ("6", "degree-shift identities", check_degree_shift),
    ("7", "structure formula vs engine", check_structure),
    ("8", "two-replacement formula grid", check_golden),
    ("9", "x^2-replacement outputs", check_xx_replacement),
    ("10", "lonely algebras are closed", check_lonely_closed),
    ("11", "divergence of chubby and lanky algebras", check_divergence),
    ("12", "perfection", check_perfection),
    ("13", "Witt relations", check_witt),
    ("14", "constant brackets come from standard sets", check_consistency),
    ("E", "published operation examples", check_published_examples),
]


def run_check(key: str, seed: int = SEED) -> CheckResult:
    for k, title, fn in CHECKS:
        if k == key:
            break
    else:
        raise KeyError(key)
    rng = random.Random(f"{seed}:{key}")
    start = time.perf_counter()
    try:
        detail, ok = fn(rng), True
    except CheckFailure as exc:
        detail, ok = str(exc), False
    return CheckResult(key, title, ok, detail, time.perf_counter() - start)


def run_all(seed: int = SEED, keys=None):
    for key, _, _ in CHECKS:
        if keys is None or key in keys:
            yield run_check(key, seed)
