"""Command-line entry point: ``sl2trace <command> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on bad usage.
Every command accepts ``--format pretty|json|csv``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import counting
from .charvar.epoly import EPOLY_TABLE, consistency_checks
from .charvar.f3 import discriminant_f3, f3_equation, reducible_locus_f3
from .charvar.free import (
    DegenerateEliminationError,
    dimension,
    eliminate_tcd_at_point,
    generator_counts,
    jacobian_rank,
    transcendental_basis,
)
from .charvar.genus2 import genus2_relations
from .charvar.torus import hessian_classify, projective_checks, singular_points, torus_fiber
from .engine import reduce_trace, trace_assignment
from .poly import Poly
from .sl2 import random_sl2
from .verify import genus2_r1_nonzero_rate, verify_engine, verify_genus2, verify_identities


@dataclass
class Result:
    """What a command produced; rendered according to --format."""
    data: dict
    pretty: str
    rows: list[list] = field(default_factory=list)  # header first
    ok: bool = True


class UsageError(Exception):
    pass


def rat(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def rat_str(v) -> str:
    f = Fraction(v)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def int_list(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from None


def rat_list(text: str) -> list[Fraction]:
    return [rat(s) for s in text.split(",") if s.strip()]


def poly_data(P: Poly) -> dict:
    return {"text": str(P), "poly": P.to_json()}


def poly_rows(named: list[tuple[str, Poly]]) -> list[list]:
    return [["name", "polynomial"]] + [[n, str(P)] for n, P in named]


def _poly_result(named: list[tuple[str, Poly]]) -> Result:
    pretty = "\n".join(str(P) if len(named) == 1 else f"{n}: {P}" for n, P in named)
    data = {n: poly_data(P) for n, P in named}
    return Result(data, pretty, poly_rows(named))


# ---------------------------------------------------------------- commands

def cmd_reduce(a) -> Result:
    P = reduce_trace(a.word, a.gens)
    return Result({"word": a.word, **poly_data(P)}, str(P), [["word", "trace"], [a.word, str(P)]])


def cmd_verify(a) -> Result:
    if a.what == "engine":
        rep = verify_engine(a.words, a.max_len, a.gens, a.prime, a.seed, a.assignments)
        return Result(rep.as_dict(), rep.summary(),
                      [["check", "passed", "total"], ["engine", rep.passed, rep.total]], rep.ok)
    reps = verify_identities(a.prime, a.samples, a.seed, None if a.no_exhaustive else 3)
    lines = [f"{name}: {r.summary()}" for name, r in reps.items()]
    rows = [["check", "passed", "total"]] + [[n, r.passed, r.total] for n, r in reps.items()]
    return Result({n: r.as_dict() for n, r in reps.items()}, "\n".join(lines), rows,
                  all(r.ok for r in reps.values()))


def cmd_equation(a) -> Result:
    if a.which == "f3":
        return _poly_result([("f3", f3_equation())])
    if a.which == "discriminant":
        return _poly_result([("discriminant", discriminant_f3())])
    if a.which == "reducible":
        return _poly_result([(f"r{i + 1}", P) for i, P in enumerate(reducible_locus_f3())])
    return _poly_result([("torus", torus_fiber(a.t))])


def cmd_singular(a) -> Result:
    pts = sorted(singular_points(a.t), key=lambda p: tuple(Fraction(x) for x in p))
    as_str = [[rat_str(x) for x in p] for p in pts]
    pretty = "\n".join("(" + ", ".join(p) + ")" for p in as_str) or "none"
    return Result({"t": rat_str(a.t), "points": as_str}, pretty, [["x", "y", "z"]] + as_str)


def cmd_hessian(a) -> Result:
    if len(a.point) != 3:
        raise UsageError("--point needs three coordinates")
    rep = hessian_classify(a.point, a.t)
    pt = [rat_str(x) for x in rep.point]
    det = rat_str(rep.hessian_det)
    return Result({"t": rat_str(a.t), "point": pt, "hessian_det": det, "kind": rep.kind},
                  f"({', '.join(pt)}): det = {det}, {rep.kind}",
                  [["x", "y", "z", "hessian_det", "kind"], pt + [det, rep.kind]])


def cmd_projective(a) -> Result:
    rep = projective_checks(a.t, a.prime)
    d = rep.as_dict()
    pretty = "\n".join([
        f"p = {rep.p}, t = {rep.t}",
        f"gradient zeros at infinity: {len(rep.gradient_zero_at_infinity)}",
        f"points at infinity: {rep.infinity_count} (expected {rep.expected_infinity_count})",
        f"locus at infinity is xyz = 0: {rep.lines_ok}",
        f"affine singular points: {d['affine_singular']}",
        "PASS" if rep.passed else "FAIL",
    ])
    rows = [["key", "value"]] + [[k, json.dumps(v) if isinstance(v, list) else v] for k, v in d.items()]
    return Result(d, pretty, rows, rep.passed)


def _records(recs) -> Result:
    recs = list(recs)
    pretty = "\n".join(f"p={r.p} t={r.t} n={r.n} ({r.method})" for r in recs)
    rows = [["p", "t", "n", "method"]] + [[r.p, r.t, r.n, r.method] for r in recs]
    data = {"records": [counting.record_dict(r) for r in recs]}
    return Result(data, pretty, rows)


def cmd_count(a) -> Result:
    if a.what == "fiber":
        if a.t is None:
            raise UsageError("count fiber needs --t")
        return _records([counting.count_fiber(a.prime, a.t, a.method, a.workers)])
    if a.what == "all":
        table = counting.count_all_fibers(a.prime, a.method, a.workers)
        res = _records(table.values())
        total = sum(r.n for r in table.values())
        res.data["sum"] = total
        res.pretty += f"\nsum = {total} (p^3 = {a.prime ** 3})"
        res.ok = total == a.prime ** 3
        return res
    if a.what == "fit":
        if a.t is None:
            raise UsageError("count fit needs --t")
        method = a.method
        recs = [counting.count_fiber(p, a.t, "brute" if p == 2 else method, a.workers) for p in a.primes]
        fit = counting.fit_count_polynomial(recs)
        res = _records(recs)
        res.data["fit"] = str(fit.poly) if fit.poly is not None else None
        res.data["interpolant"] = [rat_str(c) for c in fit.interpolant]
        res.data["residuals"] = {str(p): rat_str(v) for p, v in fit.residuals.items()}
        if fit.poly is not None:
            res.pretty += f"\nfit: {fit.poly}"
        else:
            a2, a1, a0 = (rat_str(c) for c in fit.interpolant)
            res.pretty += (f"\nno polynomial fit; interpolant {a2} q^2 + {a1} q + {a0}, residuals "
                           + ", ".join(f"{p}: {rat_str(v)}" for p, v in fit.residuals.items()))
        return res
    n = counting.count_commuting_pairs(a.prime)
    return Result({"p": a.prime, "commuting_pairs": n}, str(n), [["p", "commuting_pairs"], [a.prime, n]])


def cmd_epoly(a) -> Result:
    if a.what == "table":
        tab = EPOLY_TABLE
        return Result({k: str(v) for k, v in tab.items()}, "\n".join(f"{k}: {v}" for k, v in tab.items()),
                      [["key", "epoly"]] + [[k, str(v)] for k, v in tab.items()])
    checks = consistency_checks()
    ok = all(checks.values())
    return Result({"checks": checks, "ok": ok},
                  "\n".join(f"{'ok  ' if v else 'FAIL'} {k}" for k, v in checks.items()),
                  [["check", "ok"]] + [[k, v] for k, v in checks.items()], ok)


def cmd_basis(a) -> Result:
    basis = [str(v) for v in transcendental_basis(a.gens)]
    total, small = generator_counts(a.gens)
    dim = dimension(a.gens)
    pretty = f"basis ({len(basis)}): {' '.join(basis)}\ndimension: {dim}\ngenerators: {total} products, {small} of length <= 3"
    return Result({"k": a.gens, "basis": basis, "dimension": dim, "generators": [total, small]}, pretty,
                  [["k", "basis", "dimension", "products", "short_products"],
                   [a.gens, " ".join(basis), dim, total, small]])


def cmd_jacobian(a) -> Result:
    r = jacobian_rank(a.gens, a.prime, a.seed, a.samples)
    want = 3 * (a.gens - 1)
    return Result({"k": a.gens, "rank": r, "expected": want}, f"rank {r} (expected {want})",
                  [["k", "rank", "expected"], [a.gens, r, want]], r == want)


def cmd_eliminate(a) -> Result:
    if a.values is not None:
        values = a.values
        true_s = None
    else:
        rng = random.Random(a.seed)
        mats = [random_sl2(a.prime, rng) for _ in range(4)]
        vals = trace_assignment(mats, a.prime, 4)
        values = [vals[v] for v in transcendental_basis(4)]
        true_s = (mats[2] @ mats[3]).trace
    E = eliminate_tcd_at_point(values, a.prime)
    data = {"values": [rat_str(v) for v in values], **poly_data(E), "degree": E.degree()}
    pretty = str(E)
    ok = True
    if true_s is not None:
        from .charvar.free import S_VAR
        ok = E.evaluate({S_VAR: true_s}, a.prime) == 0
        data["true_t34"] = true_s
        data["vanishes"] = ok
        pretty += f"\ntrue t[3,4] = {true_s}: {'vanishes' if ok else 'DOES NOT VANISH'}"
    return Result(data, pretty, [["degree", "polynomial"], [E.degree(), str(E)]], ok)


def cmd_genus2(a) -> Result:
    if a.what == "relations":
        return _poly_result([(f"R{i + 1}", P) for i, P in enumerate(genus2_relations())])
    rep = verify_genus2(a.primes, a.samples, a.seed)
    rate = genus2_r1_nonzero_rate(samples=a.samples, seed=a.seed)
    ok = rep.ok and rate >= 0.95
    return Result({**rep.as_dict(), "r1_nonzero_rate": rate},
                  f"relations: {rep.summary()}\nR1 nonzero on random tuples: {rate:.3f}",
                  [["check", "passed", "total"], ["genus2", rep.passed, rep.total],
                   ["r1_nonzero_rate", rate, ""]], ok)


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["pretty", "json", "csv"], default="pretty")

    ap = argparse.ArgumentParser(prog="sl2trace", description="SL2 trace identities and character varieties")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("reduce", parents=[fmt], help="trace polynomial of a word")
    s.add_argument("word")
    s.add_argument("--gens", type=int, default=None)
    s.set_defaults(fn=cmd_reduce)

    s = sub.add_parser("verify", parents=[fmt], help="randomized identity and engine checks")
    s.add_argument("what", choices=["identity", "engine"])
    s.add_argument("--words", type=int, default=500)
    s.add_argument("--max-len", type=int, default=10)
    s.add_argument("--gens", type=int, default=4)
    s.add_argument("--assignments", type=int, default=20)
    s.add_argument("--samples", type=int, default=500)
    s.add_argument("--no-exhaustive", action="store_true", help="skip the SL2(F_3) sweep")
    s.add_argument("--prime", type=int, default=10007)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("equation", parents=[fmt], help="defining polynomials")
    s.add_argument("which", choices=["f3", "torus", "discriminant", "reducible"])
    s.add_argument("--t", type=rat, default=Fraction(0))
    s.set_defaults(fn=cmd_equation)

    s = sub.add_parser("singular", parents=[fmt], help="singular points of F = t")
    s.add_argument("--t", type=rat, required=True)
    s.set_defaults(fn=cmd_singular)

    s = sub.add_parser("hessian", parents=[fmt], help="Hessian at a singular point of F = t")
    s.add_argument("--t", type=rat, required=True)
    s.add_argument("--point", type=rat_list, required=True, help="x,y,z")
    s.set_defaults(fn=cmd_hessian)

    s = sub.add_parser("projective", parents=[fmt], help="checks on the projective closure over F_p")
    s.add_argument("--t", type=rat, required=True)
    s.add_argument("--prime", type=int, required=True)
    s.set_defaults(fn=cmd_projective)

    s = sub.add_parser("count", parents=[fmt], help="point counts over F_p")
    s.add_argument("what", choices=["fiber", "all", "fit", "commuting-pairs"])
    s.add_argument("--prime", type=int, default=3)
    s.add_argument("--primes", type=int_list, default=[3, 5, 7, 11])
    s.add_argument("--t", type=int, default=None)
    s.add_argument("--method", choices=["fast", "brute"], default="fast")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(fn=cmd_count)

    s = sub.add_parser("epoly", parents=[fmt], help="E-polynomial table")
    s.add_argument("what", choices=["table", "check"])
    s.set_defaults(fn=cmd_epoly)

    s = sub.add_parser("basis", parents=[fmt], help="transcendence basis of the free-group character variety")
    s.add_argument("--gens", type=int, required=True)
    s.set_defaults(fn=cmd_basis)

    s = sub.add_parser("jacobian-rank", parents=[fmt], help="rank of the basis traces' differential")
    s.add_argument("--gens", type=int, required=True)
    s.add_argument("--prime", type=int, default=10007)
    s.add_argument("--samples", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_jacobian)

    s = sub.add_parser("eliminate-tcd", parents=[fmt], help="eliminant for t[3,4] over the nine basis traces")
    s.add_argument("--values", type=rat_list, default=None,
                   help="t1,t2,t12,t3,t13,t23,t4,t14,t24; omit to sample a random tuple")
    s.add_argument("--prime", type=int, default=None)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_eliminate)

    s = sub.add_parser("genus2", parents=[fmt], help="genus-2 trace relations")
    s.add_argument("what", choices=["relations", "check"])
    s.add_argument("--primes", type=int_list, default=[5, 7, 11])
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_genus2)
    return ap


def render(res: Result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"ok": res.ok, **res.data}, indent=2, default=str)
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(res.rows)
        return buf.getvalue().rstrip("\n")
    return res.pretty


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if getattr(a, "command", None) == "eliminate-tcd" and a.values is None and a.prime is None:
        a.prime = 10007
    try:
        res = a.fn(a)
    except DegenerateEliminationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        ap.print_usage(sys.stderr)
        return 2
    print(render(res, a.format))
    return 0 if res.ok else 1


if __name__ == "__main__":
    sys.exit(main())
