"""Fixed-point data model, exact rationals and normalization helpers.

A circle action with isolated fixed points is described here purely by its
fixed-point data: for every fixed point, the multiset of (positive) weights
of the tangent representation together with the sign of the point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

# All localization arithmetic goes through Python's exact Fraction type:
# arbitrary-precision numerator/denominator, always in lowest terms.
ExactRational = Fraction


class InvalidDataError(ValueError):
    """Structurally invalid fixed-point data (zero weight, bad sign, ...)."""


def format_rational(value) -> str:
    """Render an exact rational as ``num/den``, or just ``num`` for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _check_weight(w) -> int:
    if isinstance(w, bool) or not isinstance(w, int):
        raise InvalidDataError(f"weight {w!r} is not an integer")
    if w < 1:
        raise InvalidDataError(
            f"weight {w} is not positive (fixed points must be isolated)"
        )
    return w


class WeightMultiset(tuple):
    """Multiset of positive integer weights, stored in descending order."""

    def __new__(cls, weights: Iterable[int] = ()):
        ws = sorted((_check_weight(w) for w in weights), reverse=True)
        return super().__new__(cls, ws)

    @property
    def product(self) -> int:
        p = 1
        for w in self:
            p *= w
        return p

    def __repr__(self):
        return "{" + ",".join(map(str, self)) + "}"


@dataclass(frozen=True, order=True)
class FixedPoint:
    weights: WeightMultiset
    sign: int

    def __post_init__(self):
        if not isinstance(self.weights, WeightMultiset):
            object.__setattr__(self, "weights", WeightMultiset(self.weights))
        if self.sign not in (1, -1) or isinstance(self.sign, bool):
            raise InvalidDataError(f"sign must be +1 or -1, got {self.sign!r}")

    def flipped(self) -> "FixedPoint":
        return FixedPoint(self.weights, -self.sign)

    def __repr__(self):
        return f"{self.weights!r}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class FixedPointData:
    """Weights and signs at the fixed points of a circle action on M^(2n)."""

    half_dimension: int
    points: tuple[FixedPoint, ...]

    def __post_init__(self):
        n = self.half_dimension
        if isinstance(n, bool) or not isinstance(n, int) or n < 1:
            raise InvalidDataError(f"half dimension must be a positive integer, got {n!r}")
        pts = tuple(
            p if isinstance(p, FixedPoint) else FixedPoint(*p) for p in self.points
        )
        if not pts:
            raise InvalidDataError("at least one fixed point is required")
        for i, p in enumerate(pts):
            if len(p.weights) != n:
                raise InvalidDataError(
                    f"point {i} has {len(p.weights)} weights, expected {n}"
                )
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_points(cls, points: Sequence[tuple[Iterable[int], int]]) -> "FixedPointData":
        """Build from ``[(weights, sign), ...]``; the dimension is inferred."""
        pts = tuple(FixedPoint(WeightMultiset(w), s) for w, s in points)
        if not pts:
            raise InvalidDataError("at least one fixed point is required")
        return cls(len(pts[0].weights), pts)

    @property
    def dimension(self) -> int:
        return 2 * self.half_dimension

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(p.sign for p in self.points)

    @property
    def weight_sets(self) -> tuple[WeightMultiset, ...]:
        return tuple(p.weights for p in self.points)

    def all_weights(self) -> list[int]:
        return [w for p in self.points for w in p.weights]

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"FixedPointData(n={self.half_dimension}, {list(self.points)!r})"


def global_gcd(data: FixedPointData) -> int:
    return reduce(gcd, data.all_weights())


def normalize_faithful(data: FixedPointData) -> FixedPointData:
    """Divide every weight by the GCD of all weights (factor out the kernel)."""
    g = global_gcd(data)
    if g == 1:
        return data
    return FixedPointData(
        data.half_dimension,
        tuple(
            FixedPoint(WeightMultiset(w // g for w in p.weights), p.sign)
            for p in data.points
        ),
    )


def pointwise_gcd(data: FixedPointData) -> list[int]:
    return [reduce(gcd, p.weights) for p in data.points]


def canonical_form(data: FixedPointData) -> FixedPointData:
    """Deterministic representative up to point order and orientation.

    Points are sorted by (weights, sign) and the orientation is chosen so
    that +1 is the majority sign. On a tie, the orientation whose sorted
    point list is lexicographically larger wins, i.e. the first point at
    which the two orientations differ carries sign +1.
    """
    pts = sorted(data.points)
    total = sum(p.sign for p in pts)
    if total < 0:
        pts = sorted(p.flipped() for p in pts)
    elif total == 0:
        alt = sorted(p.flipped() for p in pts)
        if alt > pts:
            pts = alt
    return FixedPointData(data.half_dimension, tuple(pts))
