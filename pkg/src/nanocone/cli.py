"""``nanocone`` command line: build, compute, verify, fit, bench.

Exit codes: 0 success, 1 verification or fit difference, 2 usage or domain
error, 3 internal invariant violation or method disagreement.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
import time
from pathlib import Path

from nanocone import closed_forms, cuts, families, verify
from nanocone.fitting import NotPolynomialError, UnderdeterminedError
from nanocone.formats import GraphDocument, serialize
from nanocone.graph import DisconnectedGraphError, Graph, InvariantError, hyper_wiener, w_lambda

EXIT_OK, EXIT_DIFF, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

# above this many vertices the definitional Theta* closure (quadratic in the
# edge count, with convexity re-checks) gives way to the two-BFS cut finder
_FAST_CUTS_THRESHOLD = 400


class UsageError(Exception):
    """Request is well-formed but not valid for the instance (exit 2)."""


class InternalError(Exception):
    """Methods disagree or an invariant broke (exit 3)."""


def _params_from_args(args) -> tuple[int, ...]:
    family = families.canonical_family(args.family)
    values = []
    for name in families.param_names(family):
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"family {family} needs --{name}")
        values.append(v)
    return tuple(values)


def _instance(args) -> families.FamilyInstance:
    return families.build(args.family, _params_from_args(args))


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


# -- compute -------------------------------------------------------------------


def _lambda_of(index: str, lam: int | None) -> int | None:
    if index == "wiener":
        return 1
    if index == "wlambda":
        if lam is None:
            raise UsageError("--index wlambda needs --lambda")
        if lam < 0:
            raise UsageError(f"--lambda must be non-negative, got {lam}")
        return lam
    return None  # hyper


def compute_bfs(g: Graph, index: str, lam: int | None) -> int:
    lam = _lambda_of(index, lam)
    return hyper_wiener(g) if lam is None else w_lambda(g, lam)


def cut_partition(g: Graph, fast: bool = False) -> cuts.CutPartition:
    if fast or g.vertex_count > _FAST_CUTS_THRESHOLD:
        return cuts.convex_cuts(g)
    return cuts.theta_star_classes(g)


def compute_cuts(g: Graph, index: str, lam: int | None, fast: bool = False) -> int:
    lam = _lambda_of(index, lam)
    try:
        part = cut_partition(g, fast)
    except cuts.UnsupportedGraphError as exc:
        raise UsageError(f"cut method not applicable: {exc}") from exc
    if lam is None:
        return cuts.hyper_wiener_via_cuts(g, part)
    if lam == 1:
        return cuts.wiener_via_cuts(g, part)
    return cuts.wlambda_via_recursion(g, lam, part)


def _closed_value(fid: str, params) -> int:
    f = closed_forms.get_formula(fid)
    if not f.domain(*params):
        raise UsageError(f"{fid} is defined for {f.domain_text}, got {params}")
    if not f.agrees(*params):
        raise UsageError(
            f"{fid} disagrees with brute force outside {f.agrees_text}; use --method bfs or cuts"
        )
    return closed_forms.eval_formula(fid, params)


def compute_closed(inst: families.FamilyInstance, index: str, lam: int | None) -> int:
    lam = _lambda_of(index, lam)
    fam, params = inst.family, inst.params
    if lam == 0:
        return math.comb(inst.graph.vertex_count, 2)
    if lam == 1:
        if fam == "Cone":
            return closed_forms.cone_wiener_closed(params[0])
        return _closed_value(f"W_{fam}", params)
    if lam is None:
        f = closed_forms.closed_form_for(fam, "hyper")
        if f is None:
            raise UsageError(f"no closed form for the hyper-Wiener index of family {fam}")
        return _closed_value(f.id, params)
    if lam == 2:
        hyper = closed_forms.closed_form_for(fam, "hyper")
        if hyper is None:
            raise UsageError(f"no closed form for W_2 of family {fam}")
        w1 = compute_closed(inst, "wiener", None)
        return 2 * _closed_value(hyper.id, params) - w1
    raise UsageError(f"no closed form for W_lambda with lambda={lam}")


def compute_theorem3(inst: families.FamilyInstance, index: str, lam: int | None) -> int:
    if inst.family != "Cone":
        raise UsageError("method theorem3 applies to the cone family only")
    lam = _lambda_of(index, lam)
    (n,) = inst.params
    if lam is not None:
        return closed_forms.theorem3_wlambda(n, lam)
    twice = closed_forms.theorem3_wlambda(n, 2) + closed_forms.theorem3_wlambda(n, 1)
    if twice % 2:
        raise InvariantError("W_2 + W_1 is odd")
    return twice // 2


def compute(inst: families.FamilyInstance, index: str, method: str, lam: int | None = None,
            fast_cuts: bool = False) -> int:
    if method == "bfs":
        return compute_bfs(inst.graph, index, lam)
    if method == "cuts":
        return compute_cuts(inst.graph, index, lam, fast_cuts)
    if method == "closed":
        return compute_closed(inst, index, lam)
    if method == "theorem3":
        return compute_theorem3(inst, index, lam)
    raise UsageError(f"unknown method {method!r}")


# -- commands ------------------------------------------------------------------


def cmd_build(args) -> int:
    inst = _instance(args)
    _emit(serialize(GraphDocument.from_instance(inst), args.format), args.output)
    return EXIT_OK


def cmd_compute(args) -> int:
    inst = _instance(args)
    print(compute(inst, args.index, args.method, args.lam))
    return EXIT_OK


def cmd_verify(args) -> int:
    limits = verify.Limits() if args.max_n is None else verify.Limits.from_max_n(args.max_n)
    report = verify.run_suite(args.suite, limits)
    text = report.to_json() + "\n" if args.format == "json" else report.to_text() + "\n"
    _emit(text, args.output)
    return EXIT_OK if report.passed else EXIT_DIFF


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(p) for p in text.split(".."))
    except ValueError:
        raise UsageError(f"--points expects a..b, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"--points range {text!r} is empty or negative")
    return lo, hi


def cmd_fit(args) -> int:
    lo, hi = _parse_range(args.points)
    try:
        fitted, published = verify.fit_target(args.target, lo, hi, args.degree)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    except (UnderdeterminedError, NotPolynomialError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE if isinstance(exc, UnderdeterminedError) else EXIT_DIFF
    print(fitted.polynomial)
    print(f"points used: {len(fitted.used)}, held out: {len(fitted.held_out)}")
    diff = fitted.polynomial - published
    if diff.is_zero():
        print("diff: none")
        return EXIT_OK
    print(f"diff (fitted - published): {diff}")
    return EXIT_DIFF


def bench_instance(family: str, size: int) -> families.FamilyInstance:
    """Size ``s`` maps to Z(s,s), M(2s,s), A(s), ZL(s,s,0) or the cone G_s."""
    family = families.canonical_family(family)
    params = {"Z": (size, size), "M": (2 * size, size), "A": (size,),
              "ZL": (size, size, 0), "Cone": (size,)}[family]
    return families.build(family, params)


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    for m in methods:
        if m not in ("bfs", "cuts", "closed", "theorem3"):
            raise UsageError(f"unknown bench method {m!r}")
    out = sys.stdout if not args.output else open(args.output, "w", newline="")
    try:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["family", "params", "vertices", "index", "method", "seconds", "value"])
        status = EXIT_OK
        for size in sizes:
            inst = bench_instance(args.family, size)
            values = set()
            for m in methods:
                t0 = time.perf_counter()
                value = compute(inst, args.index, m, args.lam, fast_cuts=True)
                elapsed = time.perf_counter() - t0
                values.add(value)
                w.writerow([inst.family, " ".join(map(str, inst.params)), inst.graph.vertex_count,
                            args.index, m, f"{elapsed:.6f}", str(value)])
                out.flush()
            if len(values) > 1:
                print(f"error: methods disagree on {inst.name}: {sorted(values)}", file=sys.stderr)
                status = EXIT_INTERNAL
        return status
    finally:
        if out is not sys.stdout:
            out.close()


# -- parser --------------------------------------------------------------------


def _add_instance_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, help="a, z, m, zl or cone")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nanocone", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="emit a family instance as JSON, DOT or CSV")
    _add_instance_args(p)
    p.add_argument("--format", choices=("json", "dot", "csv"), default="json")
    p.add_argument("--output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("compute", help="exact Wiener-type index of an instance")
    _add_instance_args(p)
    p.add_argument("--index", choices=("wiener", "hyper", "wlambda"), default="wiener")
    p.add_argument("--lambda", dest="lam", type=int)
    p.add_argument("--method", choices=("bfs", "cuts", "closed", "theorem3"), default="bfs")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run cross-check suites")
    p.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    p.add_argument("--max-n", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fit", help="re-derive a closed form by exact interpolation")
    p.add_argument("--target", required=True, help=", ".join(verify.FIT_TARGETS))
    p.add_argument("--points", required=True, help="n range a..b")
    p.add_argument("--degree", type=int)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("bench", help="time methods over a size schedule (CSV)")
    p.add_argument("--family", required=True)
    p.add_argument("--sizes", required=True, help="comma-separated, e.g. 10,20,40")
    p.add_argument("--methods", default="bfs,cuts,closed")
    p.add_argument("--index", choices=("wiener", "hyper", "wlambda"), default="wiener")
    p.add_argument("--lambda", dest="lam", type=int)
    p.add_argument("--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InternalError, InvariantError, DisconnectedGraphError, cuts.InvalidCutError,
            ArithmeticError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, ValueError, KeyError, TypeError, IndexError) as exc:
        msg = exc.args[0] if exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
