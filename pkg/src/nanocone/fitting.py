"""Exact polynomial interpolation over the rationals.

Fits solve the full (possibly overdetermined) Vandermonde-type system by
Gaussian elimination on :class:`fractions.Fraction`. Samples whose rows are
eliminated to zero are not needed to pin the coefficients and serve as
held-out checks; any inconsistency means the data is not a polynomial of the
requested degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from nanocone.polynomial import Polynomial, monomials


class UnderdeterminedError(ValueError):
    """The sample points do not determine every coefficient."""


class NotPolynomialError(ValueError):
    """No polynomial of the requested degree passes through all samples."""


@dataclass(frozen=True)
class FittedPolynomial:
    polynomial: Polynomial
    degree: int
    used: tuple[tuple[int, ...], ...]
    held_out: tuple[tuple[int, ...], ...]

    @property
    def variables(self) -> tuple[str, ...]:
        return self.polynomial.variables

    @property
    def residual(self) -> int:
        # exact by construction; kept so reports can state it
        return 0


def _solve(points: Sequence[tuple[int, ...]], values: Sequence[int], basis):
    ncols = len(basis)
    rows = []
    for p, y in zip(points, values):
        row = []
        for exps in basis:
            t = Fraction(1)
            for v, e in zip(p, exps):
                t *= Fraction(v) ** e
            row.append(t)
        row.append(Fraction(y))
        rows.append(row)

    pivots: list[tuple[int, int]] = []  # (column, original row)
    active = list(range(len(rows)))
    for col in range(ncols):
        pick = next((r for r in active if rows[r][col] != 0), None)
        if pick is None:
            continue
        active.remove(pick)
        prow = rows[pick]
        inv = 1 / prow[col]
        for j in range(col, ncols + 1):
            prow[j] *= inv
        for r in range(len(rows)):
            if r != pick and rows[r][col] != 0:
                factor = rows[r][col]
                rr = rows[r]
                for j in range(col, ncols + 1):
                    rr[j] -= factor * prow[j]
        pivots.append((col, pick))

    pivot_cols = {c for c, _ in pivots}
    missing = [basis[c] for c in range(ncols) if c not in pivot_cols]
    inconsistent = [points[r] for r in active if rows[r][ncols] != 0]
    if inconsistent:
        raise NotPolynomialError(
            f"samples are not a polynomial of this degree; first failing point {inconsistent[0]}"
        )
    if missing:
        raise UnderdeterminedError(
            f"underdetermined: no sample pins the monomials {missing}"
        )
    coeffs = {basis[c]: rows[r][ncols] for c, r in pivots}
    used = tuple(points[r] for _, r in sorted(pivots, key=lambda cr: cr[1]))
    held = tuple(points[r] for r in active)
    return coeffs, used, held


def fit_multivariate(samples: Iterable[tuple[tuple[int, ...], int]],
                     variables: Sequence[str], degree: int) -> FittedPolynomial:
    """Fit the polynomial of total degree ``<= degree`` through ``samples``.

    ``samples`` are ``(point, value)`` pairs with one integer coordinate per
    variable.
    """
    samples = [(tuple(int(c) for c in p), int(y)) for p, y in samples]
    variables = tuple(variables)
    points = [p for p, _ in samples]
    if len(set(points)) != len(points):
        raise ValueError("duplicate sample points make the system singular")
    for p in points:
        if len(p) != len(variables):
            raise ValueError(f"sample point {p} does not match variables {variables}")
    basis = monomials(len(variables), degree)
    if len(points) < len(basis):
        raise UnderdeterminedError(
            f"underdetermined: need at least {len(basis)} points for degree {degree} "
            f"in {len(variables)} variable(s), got {len(points)}"
        )
    coeffs, used, held = _solve(points, [y for _, y in samples], basis)
    poly = Polynomial.from_dict(variables, coeffs)
    for p, y in samples:
        if poly(*p) != y:
            raise NotPolynomialError(f"fitted polynomial misses sample {p}")
    return FittedPolynomial(poly, degree, used, held)


def fit_univariate(values: Iterable[tuple[int, int]], degree: int,
                   variable: str = "n") -> FittedPolynomial:
    return fit_multivariate((((x,), y) for x, y in values), (variable,), degree)
