"""Cross-checks between brute force, the cut method and the closed forms.

Every check compares two exact values computed by different routes and is
recorded as a :class:`CheckResult`. Failures are data: a suite never raises
because one instance misbehaves.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterator

from nanocone import closed_forms, cuts, families
from nanocone.closed_forms import eval_formula, get_formula
from nanocone.fitting import FittedPolynomial, fit_multivariate, fit_univariate
from nanocone.graph import (
    Graph,
    d_lambda,
    hyper_wiener,
    is_bipartite,
    is_connected,
    w_lambda,
    wiener,
)
from nanocone.polynomial import Polynomial

SUITES = ("structure", "formulas", "cuts", "cone", "theorem3", "sectors", "fit")


@dataclass(frozen=True)
class CheckResult:
    id: str
    params: tuple
    expected: object
    expected_method: str
    actual: object
    actual_method: str
    note: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.expected == self.actual else "fail"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["params"] = list(self.params)
        d["status"] = self.status
        for key in ("expected", "actual"):
            if isinstance(d[key], (tuple, frozenset, set)):
                d[key] = sorted(d[key]) if isinstance(d[key], (set, frozenset)) else list(d[key])
        return d


@dataclass(frozen=True)
class Limits:
    """Instance sizes used by the suites."""

    max_n: int = 6  # lattice grids: l <= k <= n <= max_n
    max_a: int = 8
    max_cone_n: int = 8
    max_theorem3_n: int = 6
    max_sector_n: int = 4
    max_edge_count_n: int = 20
    lambdas: tuple[int, ...] = (0, 1, 2, 3)

    @classmethod
    def from_max_n(cls, max_n: int) -> Limits:
        return cls(
            max_n=max_n,
            max_a=max_n,
            max_cone_n=max_n,
            max_theorem3_n=max_n,
            max_sector_n=min(4, max_n),
            max_edge_count_n=max(max_n, 0),
        )


@dataclass
class VerificationReport:
    suite: str
    limits: Limits
    checks: list[CheckResult] = field(default_factory=list)
    fits: dict[str, dict] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def sort(self) -> None:
        self.checks.sort(key=lambda c: (c.id, tuple(map(str, c.params))))

    def to_json(self) -> str:
        payload = {
            "suite": self.suite,
            "limits": asdict(self.limits),
            "passed": self.passed,
            "total": len(self.checks),
            "failed": len(self.failures),
            "checks": [c.to_dict() for c in self.checks],
            "fits": self.fits,
        }
        return json.dumps(payload, indent=2)

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: {len(self.checks)} checks, {len(self.failures)} failed"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            line = (f"{mark} {c.id} {c.params}: {c.expected_method}={c.expected} "
                    f"{c.actual_method}={c.actual}")
            if c.note:
                line += f"  ({c.note})"
            lines.append(line)
        for name, fit in self.fits.items():
            lines.append(f"fit {name}: {fit['fitted']}")
            if fit.get("paper_diff") not in (None, "0"):
                lines.append(f"    fitted minus published: {fit['paper_diff']}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


def _guarded(check_id: str, params, fn: Callable[[], CheckResult]) -> CheckResult:
    try:
        return fn()
    except Exception as exc:  # failures are data
        return CheckResult(check_id, tuple(params), "no error", "expected",
                           f"{type(exc).__name__}: {exc}", "raised")


def _eq(check_id, params, expected, expected_method, actual, actual_method, note=""):
    return CheckResult(check_id, tuple(params), expected, expected_method, actual, actual_method, note)


# -- grids --------------------------------------------------------------------


def z_grid(max_n: int):
    return [(n, k) for n in range(max_n + 1) for k in range(n + 1)]


def m_grid(max_n: int):
    return z_grid(max_n)


def zl_grid(max_n: int):
    return [(n, k, l) for n in range(max_n + 1) for k in range(n + 1) for l in range(k + 1)]


def lattice_instances(limits: Limits) -> Iterator[families.FamilyInstance]:
    for n in range(limits.max_a + 1):
        yield families.build_A(n)
    for n, k in z_grid(limits.max_n):
        yield families.build_Z(n, k)
    for n, k in m_grid(limits.max_n):
        yield families.build_M(n, k)
    for n, k, l in zl_grid(limits.max_n):
        yield families.build_ZL(n, k, l)


def _cycle(m: int) -> Graph:
    return Graph(m, tuple((i, (i + 1) % m) for i in range(m)))


def _path(m: int) -> Graph:
    return Graph(m, tuple((i, i + 1) for i in range(m - 1)))


# -- suites -------------------------------------------------------------------


def suite_structure(limits: Limits) -> list[CheckResult]:
    out = []
    insts = list(lattice_instances(limits))
    insts += [families.build_cone(n) for n in range(limits.max_cone_n + 1)]
    for inst in insts:
        p = inst.params
        fam = inst.family
        count_id = {"A": "count_A", "Z": "count_Z", "M": "count_M", "ZL": "count_ZL",
                    "Cone": "count_cone"}[fam]
        out.append(_eq(f"structure.{fam}.vertex_count", p,
                       families.expected_vertex_count(fam, p), "count formula",
                       inst.graph.vertex_count, "construction"))
        out.append(_eq(f"structure.{fam}.count_table", p, eval_formula(count_id, p),
                       "count table", inst.graph.vertex_count, "construction"))
        out.append(_eq(f"structure.{fam}.connected", p, True, "required",
                       is_connected(inst.graph), "bfs"))
        out.append(_eq(f"structure.{fam}.max_degree_3", p, True, "required",
                       max((inst.graph.degree(v) for v in range(inst.graph.vertex_count)),
                           default=0) <= 3, "adjacency"))
        out.append(_eq(f"structure.{fam}.bipartite", p, fam != "Cone", "expected", is_bipartite(inst.graph), "two-colouring"))
        out.append(_eq(f"structure.{fam}.distinct_coordinates", p, inst.graph.vertex_count,
                       "vertex count", len(set(inst.embedding)), "embedding"))
    for n in range(limits.max_edge_count_n + 1):
        cone = families.build_cone(n)
        out.append(_eq("structure.Cone.edge_count", (n,), 5 * (n + 1) * (3 * n + 2) // 2,
                       "5(n+1)(3n+2)/2", cone.graph.edge_count, "construction"))
        out.append(_eq("structure.Cone.rotation_automorphism", (n,), True, "required",
                       _rotation_is_automorphism(cone), "edge set"))
    for n in range(limits.max_sector_n + 1):
        out.extend(_sector_structure_checks(n))
    for n in range(limits.max_n + 1):
        z = families.build_Z(n, 0).graph
        m = families.build_M(n, 0).graph
        out.append(_eq("structure.Z.degenerate_path", (n, 0), True, "P_{2n+2}",
                       families.find_isomorphism(z, _path(2 * n + 2)) is not None, "isomorphism"))
        out.append(_eq("structure.M.degenerate_path", (n, 0), True, "P_{2n+3}",
                       families.find_isomorphism(m, _path(2 * n + 3)) is not None, "isomorphism"))
    return out


def _rotation_is_automorphism(cone: families.FamilyInstance) -> bool:
    index = {lab: i for i, lab in enumerate(cone.labels)}
    rot = [index[families.rotate_sector(lab)] for lab in cone.labels]
    image = {tuple(sorted((rot[u], rot[v]))) for u, v in cone.graph.edges}
    return image == set(cone.graph.edges)


def _sector_structure_checks(n: int) -> list[CheckResult]:
    from nanocone.cuts import is_isometric

    out = []
    cone = families.build_cone(n)
    parts = families.sector_partition(cone)
    out.append(_eq("structure.sectors.sizes", (n,), (n + 1) ** 2, "(n+1)^2",
                   len(parts[0]), "partition"))
    for count in (1, 2, 3):
        chosen = set().union(*parts[:count])
        out.append(_eq(f"structure.sectors.isometric_{count}", (n,), True, "required",
                       is_isometric(cone.graph, chosen), "distance comparison"))
        if count == 1 and n == 0:
            continue
        model = families.sector_model(cone, count)
        out.append(_guarded(f"structure.sectors.isomorphic_{count}", (n,), lambda: _eq(
            f"structure.sectors.isomorphic_{count}", (n,), model.graph.vertex_count,
            f"|V({model.name})|", len(families.sector_bijection(cone, count)), "label bijection")))
    return out


def _compare_formula(fid: str, params, actual: int, method: str) -> CheckResult:
    f = get_formula(fid)
    note = "" if f.agrees(*params) else f"outside the confirmed region {f.agrees_text}"
    return _guarded(f"formula.{fid}", params, lambda: _eq(
        f"formula.{fid}", params, eval_formula(fid, params), "published table",
        actual, method, note))


def suite_formulas(limits: Limits) -> list[CheckResult]:
    out = []
    for n in range(limits.max_a + 1):
        out.append(_compare_formula("W_A", (n,), wiener(families.build_A(n).graph), "bfs"))
    for n, k in z_grid(limits.max_n):
        g = families.build_Z(n, k).graph
        out.append(_compare_formula("W_Z", (n, k), wiener(g), "bfs"))
        out.append(_compare_formula("WW_Z", (n, k), hyper_wiener(g), "bfs"))
    for n, k in m_grid(limits.max_n):
        g = families.build_M(n, k).graph
        out.append(_compare_formula("W_M", (n, k), wiener(g), "bfs"))
        out.append(_compare_formula("WW_M", (n, k), hyper_wiener(g), "bfs"))
    for n, k, l in zl_grid(limits.max_n):
        g = families.build_ZL(n, k, l).graph
        out.append(_compare_formula("W_ZL", (n, k, l), wiener(g), "bfs"))
    top = max(limits.max_cone_n, 8)
    for n in range(top + 1):
        out.append(_eq("formula.chain.WW_Z_diagonal", (n,), eval_formula("WW_Znn", (n,)), "WW_Znn",
                       eval_formula("WW_Z", (n, n)), "WW_Z(n,n)"))
        out.append(_eq("formula.chain.WW_M_2n_n", (n,), eval_formula("WW_M2nn", (n,)), "WW_M2nn",
                       eval_formula("WW_M", (2 * n, n)), "WW_M(2n,n)"))
        out.append(_eq("formula.chain.cone", (n,), eval_formula("WW_cone", (n,)), "WW_cone",
                       5 * (eval_formula("WW_M2nn", (n,)) - eval_formula("WW_Znn", (n,))),
                       "5(WW_M2nn - WW_Znn)"))
        out.append(_eq("formula.degenerate.W_Z_path", (n, 0), closed_forms.path_wiener(2 * n + 2),
                       "path Wiener", eval_formula("W_Z", (n, 0)), "W_Z(n,0)"))
        out.append(_eq("formula.degenerate.W_M_path", (n, 0), closed_forms.path_wiener(2 * n + 3),
                       "path Wiener", eval_formula("W_M", (n, 0)), "W_M(n,0)"))
    return out


def _cut_checks(name: str, params, g: Graph) -> list[CheckResult]:
    cid = f"cuts.{name}"

    def run() -> list[CheckResult]:
        part = cuts.theta_star_classes(g)
        cuts.check_partition(part)
        fast = cuts.convex_cuts(g)
        res = [
            _eq(f"{cid}.partition", params, g.edge_count, "|E|",
                sum(len(c.edges) for c in part), "sum of class sizes"),
            _eq(f"{cid}.two_convex_sides", params, len(part), "classes",
                sum(1 for c in part if cuts.is_convex(g, c.side_a) and cuts.is_convex(g, c.side_b)),
                "classes with convex sides"),
            _eq(f"{cid}.fast_classes", params,
                sorted(c.edges for c in part), "theta closure",
                sorted(tuple(sorted(c.edges)) for c in fast), "bfs cuts"),
            _eq(f"{cid}.wiener", params, wiener(g), "bfs", cuts.wiener_via_cuts(g, part), "cuts"),
            _eq(f"{cid}.w2_recursion", params, w_lambda(g, 2), "bfs",
                cuts.wlambda_via_recursion(g, 2, part), "cut recursion"),
            _eq(f"{cid}.hyper_wiener", params, hyper_wiener(g), "bfs",
                cuts.hyper_wiener_via_cuts(g, part), "cuts"),
        ]
        return res

    try:
        return run()
    except Exception as exc:
        return [_eq(cid, params, "valid cut partition", "expected",
                    f"{type(exc).__name__}: {exc}", "raised")]


def suite_cuts(limits: Limits) -> list[CheckResult]:
    out = []
    out += _cut_checks("P3", (), _path(3))
    out += _cut_checks("C6", (), _cycle(6))
    for inst in lattice_instances(limits):
        out += _cut_checks(inst.family, inst.params, inst.graph)
    for n in range(1, min(limits.max_cone_n, 3) + 1):
        g = families.build_cone(n).graph
        try:
            cuts.theta_star_classes(g)
            outcome = "accepted"
        except cuts.UnsupportedGraphError:
            outcome = "rejected"
        out.append(_eq("cuts.Cone.rejected", (n,), "rejected", "non-bipartite", outcome, "theta"))
    return out


def suite_cone(limits: Limits) -> list[CheckResult]:
    out = []
    for n in range(limits.max_cone_n + 1):
        g = families.build_cone(n).graph
        ww = hyper_wiener(g)
        w = wiener(g)
        out.append(_eq("cone.WW", (n,), eval_formula("WW_cone", (n,)), "WW_cone table", ww, "bfs"))
        out.append(_eq("cone.W", (n,), closed_forms.cone_wiener_closed(n),
                       "5(W_M(2n,n) - W_Z(n,n)) tables", w, "bfs"))
        out.append(_eq("cone.WW_sector_difference", (n,),
                       5 * (hyper_wiener(families.build_M(2 * n, n).graph)
                            - hyper_wiener(families.build_Z(n, n).graph)),
                       "5(WW(M_2n,n) - WW(Z_n,n)) by bfs", ww, "bfs"))
        out.append(_eq("cone.WW_Znn", (n,), eval_formula("WW_Znn", (n,)), "WW_Znn table",
                       hyper_wiener(families.build_Z(n, n).graph), "bfs"))
        out.append(_eq("cone.WW_M2nn", (n,), eval_formula("WW_M2nn", (n,)), "WW_M2nn table",
                       hyper_wiener(families.build_M(2 * n, n).graph), "bfs"))
    return out


def suite_theorem3(limits: Limits) -> list[CheckResult]:
    out = []
    for n in range(limits.max_theorem3_n + 1):
        g = families.build_cone(n).graph
        for lam in limits.lambdas:
            brute = w_lambda(g, lam)
            for source in ("standalone", "sectors"):
                out.append(_eq(f"theorem3.{source}", (n, lam), brute, "bfs on G_n",
                               closed_forms.theorem3_wlambda(n, lam, source),
                               f"5(W(M) - W(Z)), {source}"))
        if 0 in limits.lambdas:
            out.append(_eq("theorem3.pair_count", (n, 0), math.comb(5 * (n + 1) ** 2, 2),
                           "C(|V|,2)", closed_forms.theorem3_wlambda(n, 0), "5(W_0(M) - W_0(Z))"))
    return out


def suite_sectors(limits: Limits) -> list[CheckResult]:
    out = []
    for n in range(limits.max_sector_n + 1):
        cone = families.build_cone(n)
        g = cone.graph
        parts = families.sector_partition(cone)
        every = range(g.vertex_count)
        for lam in (1, 2):
            m = w_lambda(families.build_M(2 * n, n).graph, lam)
            z = w_lambda(families.build_Z(n, n).graph, lam)
            row = [d_lambda(g, f, every, lam) for f in parts]
            out.append(_eq("sectors.D_first_sector", (n, lam), m - z, "W(M_2n,n) - W(Z_n,n)",
                           row[0], "D(F_1, V)", "ordered pairs count each unordered pair twice"))
            out.append(_eq("sectors.D_first_sector_ordered", (n, lam), 2 * (m - z),
                           "2 (W(M_2n,n) - W(Z_n,n))", row[0], "D(F_1, V)"))
            out.append(_eq("sectors.D_rotation_equal", (n, lam), 1, "one distinct value",
                           len(set(row)), "D(F_s, V), s=1..5"))
            out.append(_eq("sectors.D_total", (n, lam), 2 * w_lambda(g, lam), "2 W(G_n)",
                           sum(row), "sum_s D(F_s, V)"))
            f12 = parts[0] | parts[1]
            f123 = f12 | parts[2]
            out.append(_eq("sectors.D_two_sectors", (n, lam), 2 * z, "2 W(Z_n,n)",
                           d_lambda(g, f12, f12, lam), "D(F_1+F_2, F_1+F_2)"))
            out.append(_eq("sectors.D_three_sectors", (n, lam), 2 * m, "2 W(M_2n,n)",
                           d_lambda(g, f123, f123, lam), "D(F_1+F_2+F_3, same)"))
    return out


# -- fits ---------------------------------------------------------------------


def _brute(family: str, index: str):
    build = {"A": families.build_A, "Z": families.build_Z, "M": families.build_M,
             "ZL": families.build_ZL, "Cone": families.build_cone}[family]
    fn = wiener if index == "wiener" else hyper_wiener

    def value(*params):
        return fn(build(*params).graph)

    return value


def _ww_znn(n):
    return hyper_wiener(families.build_Z(n, n).graph)


def _ww_m2nn(n):
    return hyper_wiener(families.build_M(2 * n, n).graph)


# target id -> (published formula, oracle, number of variables, degree)
FIT_TARGETS: dict[str, tuple[str, Callable, int, int]] = {
    "w_a": ("W_A", _brute("A", "wiener"), 1, 5),
    "ww_cone": ("WW_cone", _brute("Cone", "hyper"), 1, 6),
    "ww_znn": ("WW_Znn", _ww_znn, 1, 6),
    "ww_m2nn": ("WW_M2nn", _ww_m2nn, 1, 6),
    "w_z": ("W_Z", _brute("Z", "wiener"), 2, 5),
    "w_m": ("W_M", _brute("M", "wiener"), 2, 5),
    "ww_z": ("WW_Z", _brute("Z", "hyper"), 2, 6),
    "ww_m": ("WW_M", _brute("M", "hyper"), 2, 6),
    "w_zl": ("W_ZL", _brute("ZL", "wiener"), 3, 5),
}


def fit_points(nvars: int, lo: int, hi: int) -> list[tuple[int, ...]]:
    """Sample grid: ``lo <= n <= hi`` with ``l <= k <= n - lo`` for extra variables.

    The offset keeps grids with different ``lo`` disjoint while each stays a
    shifted copy of the unisolvent triangle.
    """
    if nvars == 1:
        return [(n,) for n in range(lo, hi + 1)]
    if nvars == 2:
        return [(n, k) for n in range(lo, hi + 1) for k in range(n - lo + 1)]
    return [(n, k, l) for n in range(lo, hi + 1) for k in range(n - lo + 1) for l in range(k + 1)]


def fit_target(target: str, lo: int = 0, hi: int | None = None,
               degree: int | None = None) -> tuple[FittedPolynomial, Polynomial]:
    """Fit brute-force values of ``target`` and return it with the published polynomial."""
    key = target.lower()
    if key not in FIT_TARGETS:
        raise KeyError(f"unknown fit target {target!r}; known: {', '.join(FIT_TARGETS)}")
    fid, oracle, nvars, deg = FIT_TARGETS[key]
    degree = deg if degree is None else degree
    if hi is None:
        hi = lo + degree + (1 if nvars == 1 else 0)
    pts = fit_points(nvars, lo, hi)
    published = get_formula(fid).polynomial
    if nvars == 1:
        fitted = fit_univariate([(p[0], oracle(*p)) for p in pts], degree, published.variables[0])
    else:
        fitted = fit_multivariate([(p, oracle(*p)) for p in pts], published.variables, degree)
    return fitted, published


def _fit_record(fitted: FittedPolynomial, published: Polynomial) -> dict:
    return {
        "fitted": str(fitted.polynomial),
        "published": str(published),
        "paper_diff": str(fitted.polynomial - published),
        "used_points": len(fitted.used),
        "held_out_points": len(fitted.held_out),
    }


def _as_line(poly: Polynomial, images: list[Polynomial]) -> Polynomial:
    return poly.substitute(("n",), images)


def suite_fit(limits: Limits, report: VerificationReport | None = None) -> list[CheckResult]:
    out = []
    fitted_tables: dict[str, Polynomial] = {}
    for key, (fid, _oracle, nvars, degree) in FIT_TARGETS.items():
        hi = degree + (2 if nvars == 1 else 1)
        try:
            fit_a, published = fit_target(key, 0, hi)
            shift = hi + 1
            fit_b, _ = fit_target(key, shift, shift + degree + (1 if nvars == 1 else 0))
        except Exception as exc:
            out.append(_eq(f"fit.{fid}", (), "fit", "expected", f"{type(exc).__name__}: {exc}", "raised"))
            continue
        fitted_tables[fid] = fit_a.polynomial
        if report is not None:
            report.fits[fid] = _fit_record(fit_a, published)
        out.append(_eq(f"fit.{fid}.held_out", (0, hi), True, "exact",
                       len(fit_a.held_out) > 0, "held-out points reproduced"))
        diff = fit_a.polynomial - published
        note = "" if diff.is_zero() else f"differs from the published table by {diff}"
        out.append(_eq(f"fit.{fid}.two_grids", (0, shift), str(fit_a.polynomial), "grid from 0",
                       str(fit_b.polynomial), f"grid from {shift}", note))
        if diff.is_zero():
            out.append(_eq(f"fit.{fid}.published", (), str(published), "published table",
                           str(fit_a.polynomial), "fitted from bfs"))
        # otherwise acceptance rests on the two-grid and chain checks; the
        # difference stays in report.fits
    if {"WW_Z", "WW_M", "WW_cone"} <= fitted_tables.keys():
        n = Polynomial.from_terms(("n",), [(1, (1,))])
        diag = _as_line(fitted_tables["WW_Z"], [n, n])
        half = _as_line(fitted_tables["WW_M"], [n.scale(2), n])
        out.append(_eq("fit.chain.WW_Znn", (), str(fitted_tables["WW_Znn"]), "fitted WW_Znn",
                       str(diag), "fitted WW_Z(n,n)"))
        out.append(_eq("fit.chain.WW_M2nn", (), str(fitted_tables["WW_M2nn"]), "fitted WW_M2nn",
                       str(half), "fitted WW_M(2n,n)"))
        out.append(_eq("fit.chain.cone", (), str(fitted_tables["WW_cone"]), "fitted WW_cone",
                       str((half - diag).scale(5)), "5(WW_M(2n,n) - WW_Z(n,n))"))
    return out


_SUITE_FUNCS = {
    "structure": suite_structure,
    "formulas": suite_formulas,
    "cuts": suite_cuts,
    "cone": suite_cone,
    "theorem3": suite_theorem3,
    "sectors": suite_sectors,
}


def run_suite(suite: str, limits: Limits | None = None) -> VerificationReport:
    limits = Limits() if limits is None else limits
    names = SUITES if suite == "all" else (suite,)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite {unknown[0]!r}; choose from all, {', '.join(SUITES)}")
    report = VerificationReport(suite, limits)
    for name in names:
        if name == "fit":
            report.checks.extend(suite_fit(limits, report))
        else:
            report.checks.extend(_SUITE_FUNCS[name](limits))
    report.sort()
    return report
