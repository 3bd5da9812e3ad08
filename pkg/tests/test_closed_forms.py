import math
from fractions import Fraction

import pytest

from nanocone import closed_forms, families
from nanocone.closed_forms import (
    FORMULAS,
    FormulaDomainError,
    NonIntegralValueError,
    eval_formula,
    get_formula,
    list_formulas,
    theorem3_wlambda,
)
from nanocone.graph import hyper_wiener, wiener


@pytest.mark.parametrize("fid, params, expected", [
    ("WW_cone", (0,), 20),
    ("WW_cone", (1,), 1505),
    ("W_A", (1,), 84),
    ("W_A", (0,), 9),
    ("W_Z", (1, 1), 62),
    ("W_M", (2, 1), 185),
    ("WW_Z", (1, 1), 115),
    ("WW_M", (2, 1), 416),
    ("W_M", (0, 0), 4),
    ("WW_M", (0, 0), 5),
    ("WW_Znn", (1,), 115),
    ("WW_M2nn", (1,), 416),
])
def test_anchor_values(fid, params, expected):
    assert eval_formula(fid, params) == expected


def test_cone_chain_at_one():
    assert eval_formula("WW_cone", (1,)) == 5 * (416 - 115)


def test_cone_rational_sum():
    p = get_formula("WW_cone").polynomial
    assert sum(c for _, c in p.terms) * 24 == 36120


@pytest.mark.parametrize("n, lam, expected", [(1, 0, 190), (1, 1, 615), (1, 2, 2395)])
def test_theorem3(n, lam, expected):
    assert theorem3_wlambda(n, lam) == expected
    assert theorem3_wlambda(n, lam, "sectors") == expected


def test_theorem3_pair_count():
    assert theorem3_wlambda(1, 0) == math.comb(20, 2)


def test_theorem3_bad_source():
    with pytest.raises(ValueError):
        theorem3_wlambda(1, 1, "elsewhere")


def test_list_formulas():
    entries = {e["id"]: e for e in list_formulas()}
    assert entries["WW_cone"]["degree"] == 6
    assert entries["WW_cone"]["terms"] == 7
    assert entries["W_ZL"]["variables"] == ["n", "k", "l"]
    assert entries["W_Z"]["terms"] == 17
    assert all(e["source"] and "'" in e["source"] for e in entries.values() if not e["id"].startswith("count"))


def test_domain_errors():
    with pytest.raises(FormulaDomainError):
        eval_formula("W_M", (1, 2))
    with pytest.raises(FormulaDomainError):
        eval_formula("W_A", (-1,))
    with pytest.raises(FormulaDomainError):
        eval_formula("W_A", (1, 2))
    with pytest.raises(FormulaDomainError):
        eval_formula("W_A", (Fraction(1, 2),))
    with pytest.raises(KeyError):
        get_formula("W_Q")


def test_case_insensitive_lookup():
    assert get_formula("ww_cone") is FORMULAS["WW_cone"]


def test_non_integral_detection(monkeypatch):
    from nanocone.polynomial import Polynomial
    f = FORMULAS["W_A"]
    broken = type(f)(**{**f.__dict__, "polynomial": Polynomial.from_terms("n", [("1/2", (1,))])})
    monkeypatch.setitem(FORMULAS, "W_A", broken)
    with pytest.raises(NonIntegralValueError):
        eval_formula("W_A", (1,))


@pytest.mark.parametrize("m", range(1, 12))
def test_path_helpers(m):
    from conftest import path
    g = path(m)
    assert closed_forms.path_wiener(m) == wiener(g)
    assert closed_forms.path_hyper_wiener(m) == hyper_wiener(g)


@pytest.mark.parametrize("n", range(0, 7))
def test_degenerate_rows_are_paths(n):
    assert eval_formula("W_Z", (n, 0)) == closed_forms.path_wiener(2 * n + 2)
    assert eval_formula("W_M", (n, 0)) == closed_forms.path_wiener(2 * n + 3)


@pytest.mark.parametrize("n", range(0, 8))
def test_cone_wiener_from_tables(n):
    assert closed_forms.cone_wiener_closed(n) == wiener(families.build_cone(n).graph)


def test_w_z_holds_one_row_beyond_square():
    for n in range(5):
        assert eval_formula("W_Z", (n, n + 1)) == wiener(families.build_Z(n, n + 1).graph)
    # and not two rows beyond
    assert get_formula("W_Z").polynomial(1, 3) != wiener(families.build_Z(1, 3).graph)


@pytest.mark.parametrize("n", range(0, 9))
def test_ww_tables_on_cone_diagonals(n):
    assert eval_formula("WW_Z", (n, n)) == eval_formula("WW_Znn", (n,))
    assert eval_formula("WW_M", (2 * n, n)) == eval_formula("WW_M2nn", (n,))


def test_ww_tables_agreement_band():
    z, m = get_formula("WW_Z"), get_formula("WW_M")
    for n in range(7):
        for k in range(n + 1):
            zb = hyper_wiener(families.build_Z(n, k).graph)
            mb = hyper_wiener(families.build_M(n, k).graph)
            assert (z.polynomial(n, k) == zb) == z.agrees(n, k)
            assert (m.polynomial(n, k) == mb) == m.agrees(n, k)


def test_closed_form_for():
    assert closed_forms.closed_form_for("cone", "hyper").id == "WW_cone"
    assert closed_forms.closed_form_for("A", "hyper") is None
