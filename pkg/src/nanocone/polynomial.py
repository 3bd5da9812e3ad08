"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


@dataclass(frozen=True)
class Polynomial:
    variables: tuple[str, ...]
    # exponent tuple -> nonzero coefficient
    terms: tuple[tuple[tuple[int, ...], Fraction], ...]

    @classmethod
    def from_terms(cls, variables: Iterable[str], terms) -> Polynomial:
        """Build from ``(coefficient, exponents)`` pairs; coefficients may be strings like ``"261/10"``."""
        variables = tuple(variables)
        acc: dict[tuple[int, ...], Fraction] = {}
        for coeff, exps in terms:
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise ValueError(f"exponent tuple {exps} does not match variables {variables}")
            acc[exps] = acc.get(exps, Fraction(0)) + Fraction(coeff)
        return cls._normalized(variables, acc)

    @classmethod
    def from_dict(cls, variables: Iterable[str], coeffs: Mapping) -> Polynomial:
        return cls.from_terms(variables, ((c, e) for e, c in coeffs.items()))

    @classmethod
    def _normalized(cls, variables, acc) -> Polynomial:
        items = sorted(
            ((e, c) for e, c in acc.items() if c != 0),
            key=lambda item: (sum(item[0]), item[0]),
        )
        return cls(tuple(variables), tuple(items))

    def as_dict(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self.terms)

    @property
    def degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=0)

    def __len__(self) -> int:
        return len(self.terms)

    def __call__(self, *values) -> Fraction:
        if len(values) != len(self.variables):
            raise ValueError(f"expected {len(self.variables)} values, got {len(values)}")
        total = Fraction(0)
        for exps, coeff in self.terms:
            term = coeff
            for v, e in zip(values, exps):
                term *= Fraction(v) ** e
            total += term
        return total

    def __sub__(self, other: Polynomial) -> Polynomial:
        if self.variables != other.variables:
            raise ValueError("polynomials over different variables")
        acc = self.as_dict()
        for e, c in other.terms:
            acc[e] = acc.get(e, Fraction(0)) - c
        return self._normalized(self.variables, acc)

    def __add__(self, other: Polynomial) -> Polynomial:
        if self.variables != other.variables:
            raise ValueError("polynomials over different variables")
        acc = self.as_dict()
        for e, c in other.terms:
            acc[e] = acc.get(e, Fraction(0)) + c
        return self._normalized(self.variables, acc)

    def scale(self, factor) -> Polynomial:
        f = Fraction(factor)
        return self._normalized(self.variables, {e: c * f for e, c in self.terms})

    def substitute(self, new_variables: Iterable[str], images: Iterable[Polynomial]) -> Polynomial:
        """Compose: replace each variable by a polynomial in ``new_variables``."""
        new_variables = tuple(new_variables)
        images = list(images)
        one = Polynomial.from_terms(new_variables, [(1, (0,) * len(new_variables))])
        result = Polynomial(new_variables, ())
        for exps, coeff in self.terms:
            term = one.scale(coeff)
            for img, e in zip(images, exps):
                for _ in range(e):
                    term = term * img
            result = result + term
        return result

    def __mul__(self, other: Polynomial) -> Polynomial:
        if self.variables != other.variables:
            raise ValueError("polynomials over different variables")
        acc: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return self._normalized(self.variables, acc)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Iterable[int]) -> Fraction:
        return self.as_dict().get(tuple(exps), Fraction(0))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in reversed(self.terms):
            mono = " ".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exps) if e
            )
            mag = abs(coeff)
            if mono:
                text = mono if mag == 1 else f"{mag} {mono}"
            else:
                text = str(mag)
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, text))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out


def monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent tuples of total degree at most ``degree``, graded order."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], remaining: int, left: int):
        if left == 0:
            out.append(prefix)
            return
        for e in range(remaining + 1):
            rec(prefix + (e,), remaining - e, left - 1)

    rec((), degree, nvars)
    return sorted(out, key=lambda e: (sum(e), e))
