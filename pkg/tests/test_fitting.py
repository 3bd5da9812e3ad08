from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nanocone import families
from nanocone.closed_forms import get_formula
from nanocone.fitting import (
    NotPolynomialError,
    UnderdeterminedError,
    fit_multivariate,
    fit_univariate,
)
from nanocone.graph import hyper_wiener, wiener
from nanocone.polynomial import Polynomial, monomials


def test_line():
    fit = fit_univariate([(0, 1), (1, 3)], 1)
    assert str(fit.polynomial) == "2 n + 1"
    assert fit.residual == 0


def test_cone_polynomial():
    data = [(n, hyper_wiener(families.build_cone(n).graph)) for n in range(7)]
    fit = fit_univariate(data, 6)
    coeffs = [fit.polynomial.coefficient((d,)) for d in range(7)]
    assert coeffs == [Fraction(20), Fraction(533, 4), Fraction(8501, 24), Fraction(5795, 12),
                      Fraction(8575, 24), Fraction(409, 3), Fraction(21)]


def test_triangle_polynomial():
    data = [(n, wiener(families.build_A(n).graph)) for n in range(6)]
    fit = fit_univariate(data, 5)
    coeffs = [fit.polynomial.coefficient((d,)) for d in range(6)]
    assert coeffs == [9, Fraction(261, 10), 29, Fraction(31, 2), 4, Fraction(2, 5)]


def test_parallelogram_wiener_table():
    samples = [((n, k), wiener(families.build_Z(n, k).graph)) for n in range(7) for k in range(n + 1)]
    fit = fit_multivariate(samples, ("n", "k"), 5)
    assert fit.polynomial == get_formula("W_Z").polynomial
    assert len(fit.polynomial) == 17
    assert fit.held_out


def test_trapezoid_hyper_wiener_table():
    # the published table disagrees away from n = 2k; this records the mismatch
    samples = [((n, k), hyper_wiener(families.build_M(n, k).graph)) for n in range(8) for k in range(n + 1)]
    fit = fit_multivariate(samples, ("n", "k"), 6)
    assert fit.polynomial == get_formula("WW_M").polynomial


def test_zero_data():
    fit = fit_multivariate([((n, k), 0) for n in range(4) for k in range(n + 1)], ("n", "k"), 2)
    assert fit.polynomial.is_zero()
    assert str(fit.polynomial) == "0"


def test_duplicate_points():
    with pytest.raises(ValueError, match="duplicate"):
        fit_univariate([(1, 1), (1, 2)], 1)


def test_underdetermined_counts():
    with pytest.raises(UnderdeterminedError, match="need at least 7 points for degree 6"):
        fit_univariate([(x, x) for x in range(5)], 6)


def test_underdetermined_degenerate_grid():
    # enough points, but all on one line: the k direction is missing
    with pytest.raises(UnderdeterminedError, match="monomials"):
        fit_multivariate([((n, 0), n) for n in range(10)], ("n", "k"), 1)


def test_not_polynomial():
    with pytest.raises(NotPolynomialError):
        fit_univariate([(x, 2 ** x) for x in range(6)], 3)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=1, max_size=6), st.integers(1, 12))
def test_recovers_random_univariate(numerators, denominator):
    # integer-valued on the samples once scaled by the common denominator
    p = Polynomial.from_terms("n", [(Fraction(c, denominator), (i,)) for i, c in enumerate(numerators)])
    p = p.scale(denominator)
    degree = len(numerators) - 1
    fit = fit_univariate([(x, int(p(x))) for x in range(degree + 3)], degree)
    assert fit.polynomial == p
    assert len(fit.held_out) == 2


@settings(max_examples=25, deadline=None)
@given(st.dictionaries(st.sampled_from(monomials(2, 3)), st.integers(-20, 20), max_size=10))
def test_recovers_random_bivariate(coeffs):
    p = Polynomial.from_dict(("n", "k"), coeffs)
    samples = [((n, k), int(p(n, k))) for n in range(5) for k in range(n + 1)]
    fit = fit_multivariate(samples, ("n", "k"), 3)
    assert fit.polynomial == p


def test_polynomial_arithmetic():
    n = Polynomial.from_terms("n", [(1, (1,))])
    one = Polynomial.from_terms("n", [(1, (0,))])
    sq = (n + one) * (n + one)
    assert str(sq) == "n^2 + 2 n + 1"
    assert (sq - n * n).degree == 1
    assert sq.substitute(("n",), [n.scale(2)])(3) == 49
    assert str(n.scale(-1) - one) == "-n - 1"


def test_monomials_graded():
    assert monomials(2, 1) == [(0, 0), (0, 1), (1, 0)]
    assert len(monomials(3, 5)) == 56


def _band(x):
    """Difference between published and fitted tables along the off-band variable."""
    return Fraction(x * (x - 1) * (x - 2) * (x + 1) * (2 * x * x - 2 * x + 3), 180)


@pytest.mark.parametrize("family, fid, shift", [("Z", "WW_Z", lambda n, k: n - k),
                                                ("M", "WW_M", lambda n, k: n - 2 * k)])
def test_hyper_wiener_tables_off_band(family, fid, shift):
    build = {"Z": families.build_Z, "M": families.build_M}[family]
    samples = [((n, k), hyper_wiener(build(n, k).graph)) for n in range(8) for k in range(n + 1)]
    fit = fit_multivariate(samples, ("n", "k"), 6)
    diff = get_formula(fid).polynomial - fit.polynomial
    for n in range(-3, 12):
        for k in range(-3, 12):
            assert diff(n, k) == _band(shift(n, k))
