"""Command-line interface.

    shw bracket --dim 2 --order 1 "1" "x" "y"
    shw vandermonde --dim 2 --order 2 --tuples "0,0;1,0;0,1;2,0;1,1;0,2"
    shw classify --algebra algebra.json --after-closure
    shw selfcheck

Exit status: 0 on success, 1 for domain errors (bad polynomial text, wrong
argument count, failed self-check), 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import algebra as alg
from .closed_forms import golden_arguments, golden_bracket, lonely_structure_bracket, witt_bracket, witt_shift
from .combinatorics import context, degree_shift
from .grammar import ParseError, format_poly, parse_poly
from .poly import GenPolynomial, rational
from .vandermonde import quasi_triangular_det, van_det, vanishing_certificate
from .wronskian import bracket

SCHEMA = 1


class DomainError(Exception):
    pass


def _num(v) -> str:
    return str(rational(v))


def _tuple_text(t) -> str:
    return ",".join(_num(v) for v in t)


def parse_tuples(text: str, d: int | None = None) -> list:
    """"a,b;c,d" -> [(a, b), (c, d)] with rational entries."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise DomainError(f"empty tuple in {text!r}")
        try:
            t = tuple(rational(Fraction(v.strip())) for v in chunk.split(","))
        except (ValueError, ZeroDivisionError):
            raise DomainError(f"bad tuple {chunk!r}") from None
        if d is not None and len(t) != d:
            raise DomainError(f"tuple {chunk!r} has {len(t)} entries, expected {d}")
        out.append(t)
    return out


def _ctx(args):
    if args.dim is None or args.order is None:
        raise DomainError("--dim and --order are required")
    try:
        return context(args.dim, args.order)
    except ValueError as exc:
        raise DomainError(str(exc)) from None


def _mode(args):
    return {"bareiss": "fraction_free", "cofactor": "cofactor", None: None}[args.mode]


def _emit(args, payload: dict, text: str) -> str:
    if args.format == "json":
        return json.dumps({"schema": SCHEMA, "command": args.command, **payload}, sort_keys=True)
    return text


def _algebra_input(args):
    if args.algebra:
        try:
            ctx, gens = alg.load_algebra(args.algebra)
        except OSError as exc:
            raise DomainError(f"cannot read {args.algebra}: {exc.strerror}") from None
        return ctx, gens
    ctx = _ctx(args)
    if not args.generators:
        raise DomainError("give generators or --algebra FILE")
    return ctx, [parse_poly(g, ctx.d) for g in args.generators]


# ------------------------------------------------------------- commands

def cmd_bracket(args):
    ctx = _ctx(args)
    polys = [parse_poly(a, ctx.d) for a in args.polys]
    if len(polys) != ctx.N:
        raise DomainError(f"d={ctx.d}, k={ctx.k} takes {ctx.N} arguments, got {len(polys)}")
    value = bracket(ctx, polys, mode=_mode(args))
    return _emit(args, {"dim": ctx.d, "order": ctx.k, "args": [format_poly(p) for p in polys],
                        "result": format_poly(value)}, format_poly(value))


def cmd_rows(args):
    ctx = _ctx(args)
    return _emit(args, {"dim": ctx.d, "order": ctx.k, "N": ctx.N, "rows": [list(r) for r in ctx.rows]},
                 "\n".join(_tuple_text(r) for r in ctx.rows))


def cmd_shift(args):
    ctx = _ctx(args)
    per, total = degree_shift(ctx.d, ctx.k)
    return _emit(args, {"dim": ctx.d, "order": ctx.k, "N": ctx.N, "per_coordinate": per, "total": total},
                 f"per_coordinate {per}\ntotal {total}")


def cmd_vandermonde(args):
    ctx = _ctx(args)
    tuples = parse_tuples(args.tuples, ctx.d)
    if len(tuples) != ctx.N:
        raise DomainError(f"expected {ctx.N} tuples, got {len(tuples)}")
    det = van_det(ctx, tuples)
    tri = quasi_triangular_det(ctx, tuples)
    cert = vanishing_certificate(ctx, tuples)
    text = _num(det)
    if args.certificate:
        text += f"\n{cert}"
    return _emit(args, {"dim": ctx.d, "order": ctx.k, "det": _num(det), "quasi_triangular": _num(tri),
                        "certificate": str(cert)}, text)


def cmd_structure(args):
    ctx = _ctx(args)
    (exps,) = parse_tuples(args.exps, ctx.d)
    try:
        value = lonely_structure_bracket(ctx, args.row, exps)
    except (IndexError, ValueError) as exc:
        raise DomainError(str(exc)) from None
    return _emit(args, {"dim": ctx.d, "order": ctx.k, "row": args.row, "exps": [_num(v) for v in exps],
                        "result": format_poly(value)}, format_poly(value))


def cmd_golden(args):
    ctx = _ctx(args)
    (n,) = parse_tuples(args.p, ctx.d)
    (m,) = parse_tuples(args.q, ctx.d)
    try:
        coeff, exp = golden_bracket(ctx, n, m)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    value = GenPolynomial.monomial(exp, coeff) if coeff else GenPolynomial.zero(ctx.d)
    payload = {"dim": ctx.d, "order": ctx.k, "coeff": _num(coeff),
               "exp": None if exp is None else [_num(v) for v in exp], "result": format_poly(value)}
    if args.verify:
        engine = bracket(ctx, golden_arguments(ctx, n, m), mode=_mode(args))
        payload["engine"] = format_poly(engine)
        if engine != value:
            raise DomainError(f"formula {format_poly(value)} differs from engine {format_poly(engine)}")
    return _emit(args, payload, format_poly(value))


def cmd_witt(args):
    ctx = _ctx(args)
    idx = parse_tuples(args.indices, ctx.d)
    if len(idx) != ctx.N:
        raise DomainError(f"expected {ctx.N} indices, got {len(idx)}")
    omega, total = witt_bracket(ctx, idx)
    return _emit(args, {"dim": ctx.d, "order": ctx.k, "omega": _num(omega), "sum": [_num(v) for v in total],
                        "shift": _num(witt_shift(ctx))},
                 f"omega {_num(omega)}\nsum {_tuple_text(total)}")


def cmd_classify(args):
    ctx, gens = _algebra_input(args)
    basis = alg.span_reduce(gens, ctx.d)
    payload = {"dim": ctx.d, "order": ctx.k}
    if args.after_closure:
        rep = alg.closure_iterate(ctx, basis, args.max_iter, args.max_degree)
        payload["closure"] = {"status": rep.status.value, "dims": rep.dims}
        if rep.status is not alg.Status.STABILIZED:
            raise DomainError(f"closure did not stabilise: {rep} with dims {rep.dims}")
        basis = rep.basis
    c = alg.classify(ctx, basis)
    payload.update({"kind": c.kind.value, "label": str(c), "reason": c.reason})
    if c.top is not None:
        payload["top"] = format_poly(c.top)
    if c.pair:
        payload["pair"] = [format_poly(p) for p in c.pair]
    if c.coordinate is not None:
        payload.update({"coordinate": c.coordinate, "ell": c.ell})
    return _emit(args, payload, str(c))


def cmd_closure(args):
    ctx, gens = _algebra_input(args)
    rep = alg.closure_iterate(ctx, gens, args.max_iter, args.max_degree)
    payload = {"dim": ctx.d, "order": ctx.k, "status": rep.status.value, "dims": rep.dims,
               "max_degree_seen": None if rep.max_degree_seen is None else _num(rep.max_degree_seen)}
    if args.show_basis:
        payload["basis"] = [format_poly(p) for p in rep.basis.polys]
    text = [str(rep), "dims " + " ".join(map(str, rep.dims)), f"max_degree {payload['max_degree_seen']}"]
    if args.show_basis:
        text += payload["basis"]
    return _emit(args, payload, "\n".join(text))


def cmd_perfect(args):
    ctx, gens = _algebra_input(args)
    ok, missing = alg.is_perfect(ctx, alg.span_reduce(gens, ctx.d))
    miss = [format_poly(p) for p in missing.polys]
    text = "perfect" if ok else "not perfect\nmissing " + ", ".join(miss)
    return _emit(args, {"dim": ctx.d, "order": ctx.k, "perfect": ok, "missing": miss}, text)


def cmd_diagnose(args):
    from .grammar import VARIABLES

    ctx, gens = _algebra_input(args)
    diag = alg.degree_sum_diagnostics(ctx, alg.span_reduce(gens, ctx.d))
    lines = [f"shift {diag.shift}"]
    coords = []
    for i, (s, lab) in enumerate(zip(diag.sums, diag.labels)):
        lines.append(f"{VARIABLES[i]} {_num(s)} {lab.value}")
        coords.append({"coordinate": i + 1, "sum": _num(s), "label": lab.value})
    lines.append(f"promising {'yes' if diag.promising else 'no'}")
    if diag.short:
        lines.append(f"note fewer than {ctx.N} distinct monomials")
    return _emit(args, {"dim": ctx.d, "order": ctx.k, "shift": diag.shift, "coordinates": coords,
                        "promising": diag.promising, "short": diag.short}, "\n".join(lines))


def cmd_selfcheck(args):
    from .checks import CHECKS, run_all

    keys = None
    if args.only:
        keys = {k.strip() for k in args.only.split(",")}
        unknown = keys - {k for k, _, _ in CHECKS}
        if unknown:
            raise DomainError(f"unknown checks: {', '.join(sorted(unknown))}")
    results = []
    for res in run_all(args.seed, keys):
        results.append(res)
        if args.stream:
            print(res.line(), file=args.stream, flush=True)
    failed = [r for r in results if not r.passed]
    text = "\n".join(r.line() for r in results)
    text += f"\n{len(results) - len(failed)}/{len(results)} checks passed"
    payload = {"passed": not failed,
               "checks": [{"key": r.key, "title": r.title, "passed": r.passed, "detail": r.detail} for r in results]}
    out = _emit(args, payload, text)
    if failed:
        raise _Failed(out)
    return out


class _Failed(Exception):
    pass


# --------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim", type=int, help="number of variables d")
    common.add_argument("--order", type=int, help="differential order k")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--mode", choices=("bareiss", "cofactor"), help="determinant algorithm")

    algebra = argparse.ArgumentParser(add_help=False)
    algebra.add_argument("generators", nargs="*", help="generator polynomials")
    algebra.add_argument("--algebra", help='JSON file {"dim", "order", "generators"}')
    algebra.add_argument("--max-iter", type=int, default=16)
    algebra.add_argument("--max-degree", type=int, default=None)

    parser = argparse.ArgumentParser(prog="shw", description="Complete generalised Wronskian brackets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bracket", parents=[common], help="evaluate the bracket of N polynomials")
    p.add_argument("polys", nargs="+")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("rows", parents=[common], help="list the row multi-indices")
    p.set_defaults(func=cmd_rows)

    p = sub.add_parser("shift", parents=[common], help="degree shift kN/(d+1)")
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("vandermonde", parents=[common], help="generalised Vandermonde determinant")
    p.add_argument("--tuples", required=True, help='exponent tuples, e.g. "0,0;1,0;0,1"')
    p.add_argument("--certificate", action="store_true", help="also print a vanishing certificate")
    p.set_defaults(func=cmd_vandermonde)

    p = sub.add_parser("structure", parents=[common], help="standard monomials with one slot replaced")
    p.add_argument("--row", type=int, required=True, help="1-based slot")
    p.add_argument("--exps", required=True, help="exponent tuple of the replacing monomial")
    p.set_defaults(func=cmd_structure)

    p = sub.add_parser("golden", parents=[common], help="1 -> q and x -> p replaced")
    p.add_argument("--p", required=True, help="exponents of p (replaces x)")
    p.add_argument("--q", required=True, help="exponents of q (replaces 1)")
    p.add_argument("--verify", action="store_true", help="compare with the determinant engine")
    p.set_defaults(func=cmd_golden)

    p = sub.add_parser("witt", parents=[common], help="Witt-type relation for shifted monomials")
    p.add_argument("--indices", required=True, help='index tuples, e.g. "3;5"')
    p.set_defaults(func=cmd_witt)

    p = sub.add_parser("classify", parents=[common, algebra], help="trivial/lonely/chubby/lanky")
    p.add_argument("--after-closure", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("closure", parents=[common, algebra], help="iterate the bracket image")
    p.add_argument("--show-basis", action="store_true")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("perfect", parents=[common, algebra], help="does the bracket span the algebra")
    p.set_defaults(func=cmd_perfect)

    p = sub.add_parser("diagnose", parents=[common, algebra], help="maximal degree sums")
    p.set_defaults(func=cmd_diagnose)

    p = sub.add_parser("selfcheck", parents=[common], help="replay the published values")
    p.add_argument("--only", help="comma-separated check keys, e.g. 1,2,E")
    p.add_argument("--seed", type=int, default=1729)
    p.set_defaults(func=cmd_selfcheck, stream=None)
    return parser


def run(argv, stream=None):
    """Run one command; return ``(exit_code, output)``.

    On failure the output is the one-line diagnostic (or the self-check
    report).
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (2 if exc.code else 0), ""
    if args.command == "selfcheck":
        args.stream = stream
    if getattr(args, "max_iter", 1) < 1:
        return 2, "error: --max-iter must be >= 1"
    try:
        return 0, args.func(args)
    except _Failed as exc:
        return 1, str(exc)
    except (DomainError, ParseError, ValueError, ArithmeticError) as exc:
        return 1, f"error: {exc}"


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    stream = sys.stdout if argv[:1] == ["selfcheck"] and "json" not in argv else None
    code, out = run(argv, stream=stream)
    if stream is not None and code in (0, 1) and out and not out.startswith("error:"):
        print(out.splitlines()[-1])
    elif code == 0:
        print(out)
    elif out:
        print(out, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
