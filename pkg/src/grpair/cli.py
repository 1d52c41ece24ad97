"""Command-line front end.

Exit codes: 0 on success, 1 when a check fails, 2 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from .exactalg import GF, Matrix, MatrixFormatError, parse_field, random_invertible, random_matrix
from .report import emit_report
from .suites import Options, UnknownSuite, run_suite, suite_names

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str, n: int | None = None) -> tuple:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None
    if n is not None and len(vals) != n:
        raise UsageError(f"expected {n} integers, got {len(vals)}")
    return vals


def _write(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as e:
        raise UsageError(f"cannot write {out}: {e}") from None


def cmd_verify(args) -> int:
    opt = Options(prime=args.prime, trials=args.trials, timings=args.timings)
    try:
        report = run_suite(args.suite, args.seed, opt)
    except UnknownSuite as e:
        raise UsageError(e.args[0]) from None
    _write(emit_report(report, args.format), args.out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_invariant_eval(args) -> int:
    from .invariants import f_evaluate, f_pgl

    try:
        with open(args.matrix, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {args.matrix}: {e}") from None
    try:
        field = parse_field(args.field) if args.field else None
        g = Matrix.loads(text, field)
    except (MatrixFormatError, ValueError) as e:
        raise UsageError(str(e)) from None
    if g.shape != (10, 10):
        raise UsageError(f"need a 10x10 matrix, got {g.shape[0]}x{g.shape[1]}")
    try:
        git = g.inverse_transpose()
    except (ZeroDivisionError, ValueError):
        raise UsageError("matrix is singular") from None
    doc = {
        "field": g.field.tag,
        "f(g)": str(f_evaluate(g)),
        "f(g^-t)": str(f_evaluate(git)),
        "f_pgl(g)": str(f_pgl(g)),
        "f_pgl(g^-t)": str(f_pgl(git)),
    }
    _write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", args.out)
    return EXIT_OK


def cmd_plethysm(args) -> int:
    from .symfunc import plethysm_with_e2, schur_multiplicity

    lam, mu = _int_list(args.lam), _int_list(args.mu)
    t0 = time.perf_counter()
    try:
        m = schur_multiplicity(plethysm_with_e2(lam), mu)
    except ValueError as e:
        raise UsageError(str(e)) from None
    doc = {"lambda": list(lam), "mu": list(mu), "multiplicity": m, "elapsed": round(time.perf_counter() - t0, 3)}
    _write(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_bwb(args) -> int:
    from .cohomology import HomogeneousBundle, bott_single, bundle_cohomology

    w = _int_list(args.weights, 5)
    try:
        bundle = HomogeneousBundle.irreducible(w).twist(args.twist)
    except ValueError as e:
        raise UsageError(str(e)) from None
    (wt, _), = bundle.summands
    table = bundle_cohomology(bundle)
    r = bott_single(wt)
    doc = {
        "weight": list(wt),
        "rank": bundle.rank(),
        "h": table.as_list(),
        "nonzero_degree": None if r is None else r.degree,
        "euler_characteristic": table.euler_characteristic(),
    }
    _write(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_count_points(args) -> int:
    from .geometry import (
        TranslateModel,
        gaussian_binomial_25,
        jacobian_ranks,
        weil_window,
        x_points,
        y_points,
        z_v_points,
    )

    try:
        F = GF(args.prime)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.prime > 7 and not args.allow_large:
        raise UsageError("primes above 7 enumerate #Gr ~ p^6 points; pass --allow-large")
    rng = random.Random(args.seed)
    t0 = time.perf_counter()
    doc = {"prime": F.p, "seed": args.seed, "variant": args.variant}
    if args.variant in ("xg", "yg"):
        g = random_invertible(10, F, rng)
        model = TranslateModel(g) if args.variant == "xg" else TranslateModel(g).inverse_transpose()
        pts = x_points(g) if args.variant == "xg" else y_points(g)
        ranks = jacobian_ranks(pts, model.quadrics())
        doc["count"] = len(pts)
        doc["jacobian_ranks"] = {str(k): ranks.count(k) for k in sorted(set(ranks))}
        doc["smooth"] = all(k == 6 for k in ranks)
        centre, radius = weil_window(F.p)
        doc["weil_window"] = [centre, round(radius, 3)]
    else:
        v = random_matrix(10, 10, F, rng)
        pts = z_v_points(v if args.variant == "zv" else v.T)
        doc["count"] = len(pts)
        doc["smooth"] = None
    doc["grassmannian"] = gaussian_binomial_25(F.p)
    if args.timings:
        doc["elapsed"] = round(time.perf_counter() - t0, 3)
    _write(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="grpair", description="Exact checks for Gr(2,5) ∩ gGr(2,5).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, help=", ".join(suite_names()))
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--prime", type=int, default=10007)
    v.add_argument("--trials", type=int, default=20)
    v.add_argument("--format", choices=("text", "machine"), default="text")
    v.add_argument("--timings", action="store_true", help="include per-check elapsed times")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("invariant-eval", help="evaluate f on a 10x10 matrix file")
    i.add_argument("--matrix", required=True)
    i.add_argument("--field", help="rational or fp:P; overrides the file")
    i.add_argument("--out")
    i.set_defaults(func=cmd_invariant_eval)

    pl = sub.add_parser("plethysm", help="multiplicity of s_mu in s_lambda[e2]")
    pl.add_argument("--lambda", dest="lam", required=True)
    pl.add_argument("--mu", required=True)
    pl.add_argument("--out")
    pl.set_defaults(func=cmd_plethysm)

    b = sub.add_parser("bwb", help="cohomology of a homogeneous bundle on Gr(2,5)")
    b.add_argument("--weights", required=True, help="a1,a2,b1,b2,b3")
    b.add_argument("--twist", type=int, default=0)
    b.add_argument("--out")
    b.set_defaults(func=cmd_bwb)

    c = sub.add_parser("count-points", help="F_p point counts of X_g, Y_g, Z_v")
    c.add_argument("--prime", type=int, required=True)
    c.add_argument("--seed", type=int, default=42)
    c.add_argument("--variant", choices=("xg", "yg", "zv", "zvt"), default="xg")
    c.add_argument("--allow-large", action="store_true")
    c.add_argument("--timings", action="store_true")
    c.add_argument("--out")
    c.set_defaults(func=cmd_count_points)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as e:
        print(f"grpair: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
