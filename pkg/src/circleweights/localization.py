"""Localization sums for Pontryagin numbers.

For a circle action with isolated fixed points on M^(2n) and a symmetric
polynomial ``sigma`` in n variables, the characteristic number p_sigma[M] is

    sum over fixed points q of  sign(q) * sigma(w_1^2, ..., w_n^2) / (w_1 * ... * w_n)

where w_k are the weights at q. Polynomials are written in the basis of
products of elementary symmetric functions e_k of the squared weights, so
p_1 corresponds to e_1, p_2 to e_2, p_1^2 to e_1*e_1 and so on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import FixedPointData, InvalidDataError


class InvalidSpecError(ValueError):
    pass


class DimensionMismatchError(InvalidDataError):
    pass


@dataclass(frozen=True)
class SymmetricPolynomialSpec:
    """Integer combination of e-monomials, e.g. ``((1, (1, 1)), (-2, (2,)))``
    for e_1^2 - 2 e_2. An empty monomial ``()`` is the constant 1."""

    terms: tuple[tuple[int, tuple[int, ...]], ...]

    def __post_init__(self):
        terms = []
        for coef, mono in self.terms:
            if isinstance(coef, bool) or not isinstance(coef, int):
                raise InvalidSpecError(f"coefficient {coef!r} is not an integer")
            mono = tuple(sorted(mono, reverse=True))
            if any(isinstance(k, bool) or not isinstance(k, int) or k < 1 for k in mono):
                raise InvalidSpecError(f"monomial indices must be integers >= 1, got {mono}")
            terms.append((coef, mono))
        degrees = {sum(m) for _, m in terms}
        if len(degrees) > 1:
            raise InvalidSpecError(f"mixed-degree polynomial (degrees {sorted(degrees)})")
        object.__setattr__(self, "terms", tuple(terms))

    @classmethod
    def monomial(cls, *indices: int, coefficient: int = 1) -> "SymmetricPolynomialSpec":
        return cls(((coefficient, tuple(indices)),))

    @property
    def degree(self) -> int | None:
        """Degree in the grading deg e_k = k; None for the zero polynomial."""
        if not self.terms:
            return None
        return sum(self.terms[0][1])

    @property
    def max_index(self) -> int:
        return max((k for _, m in self.terms for k in m), default=0)

    def __add__(self, other: "SymmetricPolynomialSpec") -> "SymmetricPolynomialSpec":
        return SymmetricPolynomialSpec(self.terms + other.terms)


UNIT = SymmetricPolynomialSpec.monomial()
E1 = SymmetricPolynomialSpec.monomial(1)
E2 = SymmetricPolynomialSpec.monomial(2)
E1_SQUARED = SymmetricPolynomialSpec.monomial(1, 1)


def elementary_symmetric(values: Sequence[int], kmax: int) -> list[int]:
    """[e_0, e_1, ..., e_kmax] of ``values`` (zero beyond len(values))."""
    e = [1] + [0] * kmax
    for v in values:
        for k in range(min(kmax, len(values)), 0, -1):
            e[k] += e[k - 1] * v
    return e


def eval_sigma(sigma: SymmetricPolynomialSpec, weights: Iterable[int]) -> int:
    """Evaluate ``sigma`` at the squares of ``weights``."""
    ws = tuple(weights)
    n = len(ws)
    kmax = sigma.max_index
    if kmax > n:
        raise InvalidSpecError(f"e_{kmax} requested for {n} weights")
    e = elementary_symmetric([w * w for w in ws], kmax)
    total = 0
    for coef, mono in sigma.terms:
        term = coef
        for k in mono:
            term *= e[k]
        total += term
    return total


def localization_sum(data: FixedPointData, sigma: SymmetricPolynomialSpec) -> Fraction:
    if sigma.max_index > data.half_dimension:
        raise InvalidSpecError(
            f"e_{sigma.max_index} requested in half dimension {data.half_dimension}"
        )
    total = Fraction(0)
    for p in data.points:
        total += Fraction(p.sign * eval_sigma(sigma, p.weights), p.weights.product)
    return total


@dataclass(frozen=True)
class PontryaginReport:
    unit_sum: Fraction
    p1_sum: Fraction
    p1_squared: Fraction
    p2: Fraction
    # (7 p2 - p1^2) / 45: the degree-2 L-genus. Consistency probe only.
    signature_candidate: Fraction

    @property
    def integral(self) -> bool:
        return self.p1_squared.denominator == 1 and self.p2.denominator == 1

    def as_dict(self) -> dict[str, Fraction]:
        return {
            "unit_sum": self.unit_sum,
            "p1_sum": self.p1_sum,
            "p1_squared": self.p1_squared,
            "p2": self.p2,
            "signature_candidate": self.signature_candidate,
        }


def pontryagin_report(data: FixedPointData) -> PontryaginReport:
    """All characteristic numbers of degree <= 2 for 8-dimensional data."""
    if data.half_dimension != 4:
        raise DimensionMismatchError(
            f"Pontryagin report needs 8-dimensional data, got dimension {data.dimension}"
        )
    p1_squared = localization_sum(data, E1_SQUARED)
    p2 = localization_sum(data, E2)
    return PontryaginReport(
        unit_sum=localization_sum(data, UNIT),
        p1_sum=localization_sum(data, E1),
        p1_squared=p1_squared,
        p2=p2,
        signature_candidate=(7 * p2 - p1_squared) / 45,
    )
