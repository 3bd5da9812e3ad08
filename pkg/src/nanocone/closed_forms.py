"""Published closed forms for the Wiener-type indices of the graph families.

Every polynomial is stored once, as transcribed, with exact rational
coefficients. ``domain`` is where a formula may be evaluated. ``agrees`` is
the region where it has been confirmed against brute-force distances on the
constructions in :mod:`nanocone.families`. For the two bivariate
hyper-Wiener tables that region is only a band around the lines the cone
result needs; elsewhere the published coefficients are wrong (at ``k = 0``
they cannot be right for any graph, because both families degenerate to
paths whose hyper-Wiener index is a quartic).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from nanocone import families
from nanocone.graph import w_lambda
from nanocone.polynomial import Polynomial


class FormulaDomainError(ValueError):
    pass


class NonIntegralValueError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Formula:
    id: str
    polynomial: Polynomial
    source: str
    domain: Callable[..., bool]
    domain_text: str
    agrees: Callable[..., bool]
    agrees_text: str
    family: str | None = None
    index: str | None = None

    @property
    def variables(self) -> tuple[str, ...]:
        return self.polynomial.variables

    @property
    def degree(self) -> int:
        return self.polynomial.degree

    def __call__(self, *params) -> int:
        return eval_formula(self.id, params)


def _nonneg(*xs) -> bool:
    return all(x >= 0 for x in xs)


_W_A = [
    ("9", (0,)), ("261/10", (1,)), ("29", (2,)), ("31/2", (3,)), ("4", (4,)), ("2/5", (5,)),
]

# exponents are (n, k)
_W_Z = [
    ("1", (0, 0)), ("56/15", (0, 1)), ("32/3", (1, 1)), ("11/3", (1, 0)), ("4", (0, 2)),
    ("1/3", (1, 4)), ("6", (2, 2)), ("2/3", (2, 3)), ("-1/15", (0, 5)), ("4/3", (3, 0)),
    ("4/3", (3, 2)), ("8/3", (3, 1)), ("28/3", (1, 2)), ("8/3", (1, 3)), ("4", (2, 0)),
    ("4/3", (0, 3)), ("28/3", (2, 1)),
]

_W_M = [
    ("4", (0, 0)), ("26/3", (1, 0)), ("109/15", (0, 1)), ("1/2", (0, 2)), ("16", (1, 1)),
    ("4", (1, 2)), ("-8/3", (1, 3)), ("-5/2", (0, 3)), ("34/3", (2, 1)), ("6", (2, 0)),
    ("2/3", (1, 4)), ("8/3", (3, 1)), ("4", (2, 2)), ("-4/3", (2, 3)), ("4/3", (3, 2)),
    ("-4/15", (0, 5)), ("4/3", (3, 0)),
]

# exponents are (n, k, l)
_W_ZL = [
    ("4/5", (0, 0, 1)), ("-1/15", (0, 1, 0)), ("2/3", (1, 0, 0)), ("4/3", (1, 1, 0)),
    ("-5/6", (0, 2, 0)), ("13/3", (1, 0, 1)), ("4/3", (0, 1, 1)), ("3/2", (0, 0, 2)),
    ("-1/6", (0, 2, 1)), ("23/6", (0, 1, 2)), ("2", (0, 2, 2)), ("-7/6", (0, 3, 0)),
    ("-2/3", (0, 4, 0)), ("7", (1, 1, 1)), ("4", (1, 1, 2)), ("-4/3", (1, 1, 3)),
    ("1/3", (1, 0, 2)), ("10/3", (2, 1, 0)), ("2", (2, 0, 0)), ("-7/6", (0, 0, 3)),
    ("-4/3", (1, 0, 3)), ("-2", (2, 0, 2)), ("4", (2, 0, 1)), ("8", (2, 1, 1)),
    ("4", (1, 2, 2)), ("-8/3", (1, 3, 1)), ("4", (2, 2, 1)), ("-2", (2, 1, 2)),
    ("-4/3", (0, 1, 3)), ("2/3", (1, 4, 0)), ("2/3", (0, 4, 1)), ("-2/3", (0, 3, 2)),
    ("-4/3", (2, 3, 0)), ("1/3", (0, 1, 4)), ("-4/15", (0, 5, 0)), ("4/3", (3, 0, 0)),
    ("-2/15", (0, 0, 5)), ("4/3", (3, 2, 0)), ("8/3", (3, 1, 0)), ("-1/3", (1, 0, 4)),
]

_WW_Z = [
    ("1", (0, 0)), ("43/10", (0, 1)), ("21/5", (1, 0)), ("211/36", (0, 2)),
    ("1043/180", (2, 0)), ("1283/90", (1, 1)), ("2", (1, 4)), ("38/3", (2, 2)),
    ("10/3", (2, 3)), ("13/3", (3, 2)), ("67/9", (3, 1)), ("47/3", (1, 2)),
    ("67/9", (1, 3)), ("47/3", (2, 1)), ("-2/15", (0, 5)), ("10/3", (3, 0)),
    ("10/3", (0, 3)), ("3/2", (4, 1)), ("25/36", (0, 4)), ("1/2", (2, 4)),
    ("1/5", (1, 5)), ("2/9", (3, 3)), ("-1/30", (5, 0)), ("25/36", (4, 0)),
    ("-1/18", (0, 6)), ("5/6", (4, 2)), ("-1/15", (5, 1)), ("1/90", (6, 0)),
]

_WW_M = [
    ("5", (0, 0)), ("113/12", (0, 1)), ("193/15", (1, 0)), ("4/3", (4, 2)),
    ("-2/15", (5, 1)), ("-34/15", (1, 5)), ("727/30", (1, 1)), ("35/6", (1, 2)),
    ("-23/6", (1, 3)), ("22", (2, 1)), ("-1/3", (1, 4)), ("26/3", (3, 1)),
    ("41/6", (2, 2)), ("-2/3", (2, 3)), ("2", (3, 2)), ("7/24", (0, 4)),
    ("2123/180", (2, 0)), ("133/120", (0, 2)), ("-29/12", (0, 3)), ("14/3", (3, 0)),
    ("5/3", (4, 1)), ("1/90", (6, 0)), ("3/5", (0, 6)), ("10/3", (2, 4)),
    ("-8/3", (3, 3)), ("-1/30", (5, 0)), ("25/36", (4, 0)),
]

_WW_ZNN = [
    ("1", (0,)), ("17/2", (1,)), ("1166/45", (2,)), ("38", (3,)), ("521/18", (4,)),
    ("11", (5,)), ("74/45", (6,)),
]

_WW_M2NN = [
    ("5", (0,)), ("703/20", (1,)), ("34831/360", (2,)), ("1615/12", (3,)),
    ("7229/72", (4,)), ("574/15", (5,)), ("263/45", (6,)),
]

_WW_CONE = [
    ("20", (0,)), ("533/4", (1,)), ("8501/24", (2,)), ("5795/12", (3,)),
    ("8575/24", (4,)), ("409/3", (5,)), ("21", (6,)),
]

# vertex counts, expanded
_COUNT_A = [("4", (0,)), ("4", (1,)), ("1", (2,))]
_COUNT_Z = [("2", (0, 0)), ("2", (1, 0)), ("2", (0, 1)), ("2", (1, 1))]
_COUNT_M = [("3", (0, 0)), ("2", (1, 0)), ("2", (0, 1)), ("2", (1, 1)), ("-1", (0, 2))]
_COUNT_ZL = [
    ("1", (0, 0, 0)), ("2", (1, 0, 0)), ("2", (0, 0, 1)), ("2", (1, 1, 0)),
    ("-1", (0, 2, 0)), ("-1", (0, 0, 2)), ("2", (0, 1, 1)),
]
_COUNT_CONE = [("5", (0,)), ("10", (1,)), ("5", (2,))]


def _formula(id, variables, terms, source, domain, domain_text, agrees=None,
             agrees_text=None, family=None, index=None) -> Formula:
    return Formula(
        id=id,
        polynomial=Polynomial.from_terms(variables, terms),
        source=source,
        domain=domain,
        domain_text=domain_text,
        agrees=agrees or domain,
        agrees_text=agrees_text or domain_text,
        family=family,
        index=index,
    )


_TABLE = [
    _formula("W_A", "n", _W_A, "Wiener index of A_n: '9 + 261/10 n + 29 n^2 ...'",
             lambda n: n >= 0, "n >= 0", family="A", index="wiener"),
    _formula("W_Z", "nk", _W_Z, "Wiener index of Z_{n,k}: '1 + 56/15 k + 32/3 nk ...'",
             lambda n, k: _nonneg(n, k) and k <= n + 1, "0 <= k <= n + 1",
             family="Z", index="wiener"),
    _formula("W_M", "nk", _W_M, "Wiener index of M_{n,k}: '4 + 26/3 n + 109/15 k ...'",
             lambda n, k: 0 <= k <= n, "0 <= k <= n", family="M", index="wiener"),
    _formula("W_ZL", "nkl", _W_ZL, "Wiener index of Z_{n,k,l}: '4/5 l - 1/15 k + 2/3 n ...'",
             lambda n, k, l: 0 <= l <= k <= n, "0 <= l <= k <= n", family="ZL", index="wiener"),
    _formula("WW_Z", "nk", _WW_Z, "hyper-Wiener index of Z_{n,k}: '1 + 43/10 k + 21/5 n ...'",
             lambda n, k: _nonneg(n, k) and k <= n + 1, "0 <= k <= n + 1",
             agrees=lambda n, k: _nonneg(n, k) and n - 2 <= k <= n + 1,
             agrees_text="n - 2 <= k <= n + 1", family="Z", index="hyper"),
    _formula("WW_M", "nk", _WW_M, "hyper-Wiener index of M_{n,k}: '5 + 113/12 k + 193/15 n ...'",
             lambda n, k: 0 <= k <= n, "0 <= k <= n",
             agrees=lambda n, k: 0 <= k <= n and 2 * k - 1 <= n <= 2 * k + 2,
             agrees_text="0 <= k <= n and 2k - 1 <= n <= 2k + 2", family="M", index="hyper"),
    _formula("WW_Znn", "n", _WW_ZNN, "hyper-Wiener index of Z_{n,n}: '1 + 17/2 n ...'",
             lambda n: n >= 0, "n >= 0"),
    _formula("WW_M2nn", "n", _WW_M2NN, "hyper-Wiener index of M_{2n,n}: '5 + 703/20 n ...'",
             lambda n: n >= 0, "n >= 0"),
    _formula("WW_cone", "n", _WW_CONE, "hyper-Wiener index of the nanocone G_n: '20 + 533/4 n ...'",
             lambda n: n >= 0, "n >= 0", family="Cone", index="hyper"),
    _formula("count_A", "n", _COUNT_A, "vertex count a_n = (n+2)^2",
             lambda n: n >= 0, "n >= 0"),
    _formula("count_Z", "nk", _COUNT_Z, "vertex count z_{n,k} = 2(n+1)(k+1)",
             lambda n, k: _nonneg(n, k), "n, k >= 0"),
    _formula("count_M", "nk", _COUNT_M, "vertex count m_{n,k} = (k+1)(2n-k+3)",
             lambda n, k: 0 <= k <= n, "0 <= k <= n"),
    _formula("count_ZL", "nkl", _COUNT_ZL, "vertex count z_{n,k,l} = 2(n+1)(k+1) - (k-l+1)^2",
             lambda n, k, l: 0 <= l <= k <= n, "0 <= l <= k <= n"),
    _formula("count_cone", "n", _COUNT_CONE, "vertex count 5(n+1)^2 of G_n (forced by the pair-count case of the sector identity)",
             lambda n: n >= 0, "n >= 0"),
]

FORMULAS: dict[str, Formula] = {f.id: f for f in _TABLE}


def get_formula(formula_id: str) -> Formula:
    for key, f in FORMULAS.items():
        if key.lower() == str(formula_id).lower():
            return f
    raise KeyError(f"unknown formula {formula_id!r}; known: {', '.join(FORMULAS)}")


def eval_formula(formula_id: str, params) -> int:
    """Exact integer value of a stored formula.

    Raises FormulaDomainError outside the formula's domain and
    NonIntegralValueError if the rational value is not an integer.
    """
    f = get_formula(formula_id)
    params = tuple(params)
    if len(params) != len(f.variables):
        raise FormulaDomainError(f"{f.id} takes {len(f.variables)} parameters, got {len(params)}")
    if any(isinstance(p, bool) or int(p) != p for p in params):
        raise FormulaDomainError(f"{f.id} needs integer parameters, got {params}")
    params = tuple(int(p) for p in params)
    if not f.domain(*params):
        raise FormulaDomainError(f"{f.id} is defined for {f.domain_text}, got {params}")
    value = f.polynomial(*params)
    if value.denominator != 1:
        raise NonIntegralValueError(f"{f.id}{params} = {value} is not an integer")
    return int(value)


def list_formulas() -> list[dict]:
    return [
        {
            "id": f.id,
            "variables": list(f.variables),
            "degree": f.degree,
            "terms": len(f.polynomial),
            "source": f.source,
            "domain": f.domain_text,
            "agrees_with_oracle": f.agrees_text,
        }
        for f in _TABLE
    ]


def closed_form_for(family: str, index: str) -> Formula | None:
    family = families.canonical_family(family)
    for f in _TABLE:
        if f.family == family and f.index == index:
            return f
    return None


def cone_wiener_closed(n: int) -> int:
    """W(G_n) from the Wiener tables of M_{2n,n} and Z_{n,n}."""
    return 5 * (eval_formula("W_M", (2 * n, n)) - eval_formula("W_Z", (n, n)))


def theorem3_wlambda(n: int, lam: int, source: str = "standalone") -> int:
    """``5 * (W_lam(M_{2n,n}) - W_lam(Z_{n,n}))`` with both terms by BFS.

    ``source="standalone"`` builds M and Z with the lattice constructors;
    ``source="sectors"`` takes them as three and two consecutive sectors of
    ``G_n``.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if source == "standalone":
        m = families.build_M(2 * n, n).graph
        z = families.build_Z(n, n).graph
    elif source == "sectors":
        cone = families.build_cone(n)
        m = families.sector_union(cone, 3)[0]
        z = families.sector_union(cone, 2)[0]
    else:
        raise ValueError(f"source must be 'standalone' or 'sectors', got {source!r}")
    return 5 * (w_lambda(m, lam) - w_lambda(z, lam))


def path_wiener(m: int) -> int:
    """Wiener index of the path on ``m`` vertices."""
    return m * (m * m - 1) // 6


def path_hyper_wiener(m: int) -> int:
    return math.comb(m + 2, 4)

