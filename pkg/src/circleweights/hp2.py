"""Circle actions on HP^2 and their fixed-point data.

The action t.(x1:x2:x3) = (e^{2 pi i t p1} x1 : e^{2 pi i t p2} x2 : e^{2 pi i t p3} x3)
with p1, p2, p3 all integers (standard family) or all half-integers
(semi-integer family) has three fixed points with weights

    (1:0:0): |p2 +- p1|, |p3 +- p1|
    (0:1:0): |p2 +- p1|, |p3 +- p2|
    (0:0:1): |p3 +- p2|, |p3 +- p1|

Parameters are stored doubled, d_i = 2 p_i, so both families live in the
integers and the family is the common parity of the d_i.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

from .constraints import Pairing, enumerate_pairings
from .core import (
    FixedPoint,
    FixedPointData,
    WeightMultiset,
    canonical_form,
    normalize_faithful,
)

_MAJORITY_PLUS = ((-1, 1, 1), (1, -1, 1), (1, 1, -1))


class Family(enum.Enum):
    STANDARD = "Standard"
    SEMI_INTEGER = "SemiInteger"

    def __str__(self):
        return self.value


class InvalidParamsError(ValueError):
    pass


class NoSolutionError(ValueError):
    pass


class AmbiguousSignsError(ValueError):
    pass


class NotClassifiableError(ValueError):
    """No relabelling of the data matches the HP^2 weight pattern."""


@dataclass(frozen=True, order=True)
class Hp2ActionParams:
    doubled: tuple[int, int, int]

    def __post_init__(self):
        d = tuple(self.doubled)
        if len(d) != 3 or any(isinstance(x, bool) or not isinstance(x, int) for x in d):
            raise InvalidParamsError(f"need three integers, got {self.doubled!r}")
        d1, d2, d3 = d
        if not 0 <= d1 < d2 < d3:
            raise InvalidParamsError(
                f"doubled parameters must satisfy 0 <= d1 < d2 < d3, got {d}"
            )
        if not d1 % 2 == d2 % 2 == d3 % 2:
            raise InvalidParamsError(f"doubled parameters must share parity, got {d}")
        object.__setattr__(self, "doubled", d)

    @classmethod
    def from_exponents(cls, k: Sequence[int], family: Family | str) -> "Hp2ActionParams":
        """Parameters from raw family exponents (any integers, any order).

        Standard: p_i = k_i. Semi-integer: p_i = (1 + 2 k_i) / 2. Weights only
        depend on the sorted absolute values of the p_i.
        """
        family = Family(family) if not isinstance(family, Family) else family
        if family is Family.STANDARD:
            raw = [2 * x for x in k]
        else:
            raw = [1 + 2 * x for x in k]
        d = sorted(abs(x) for x in raw)
        if len(set(d)) != len(d):
            raise InvalidParamsError(
                f"exponents {tuple(k)} give coinciding |p_i| and hence a zero weight"
            )
        return cls(tuple(d))

    @property
    def family(self) -> Family:
        return Family.STANDARD if self.doubled[0] % 2 == 0 else Family.SEMI_INTEGER

    @property
    def p(self) -> tuple[Fraction, Fraction, Fraction]:
        return tuple(Fraction(x, 2) for x in self.doubled)

    @property
    def max_weight(self) -> int:
        return (self.doubled[1] + self.doubled[2]) // 2

    @property
    def weight_gcd(self) -> int:
        return reduce(gcd, (w for ws in fixed_point_weights(self) for w in ws))

    @property
    def is_effective(self) -> bool:
        """True when the action is faithful (its weights have GCD 1)."""
        return self.weight_gcd == 1

    def reduced(self) -> "Hp2ActionParams":
        """Parameters of the effective action obtained by factoring out the kernel."""
        g = self.weight_gcd
        return Hp2ActionParams(tuple(x // g for x in self.doubled))


def iter_params(max_d3: int, *, effective_only: bool = False):
    """All valid doubled triples with d3 <= max_d3, ordered by (d3, d2, d1)."""
    for d3 in range(4, max_d3 + 1):
        for d2 in range(2 - d3 % 2, d3, 2):
            for d1 in range(d2 % 2, d2, 2):
                params = Hp2ActionParams((d1, d2, d3))
                if effective_only and not params.is_effective:
                    continue
                yield params


def fixed_point_weights(params: Hp2ActionParams) -> tuple[tuple[int, ...], ...]:
    """Raw weights at (1:0:0), (0:1:0), (0:0:1), before any normalization."""
    d1, d2, d3 = params.doubled

    def pm(x, y):
        return (abs(x + y) // 2, abs(x - y) // 2)

    return (
        pm(d2, d1) + pm(d3, d1),
        pm(d2, d1) + pm(d3, d2),
        pm(d3, d2) + pm(d3, d1),
    )


def sign_solve(weight_sets: Sequence[Sequence[int]]) -> tuple[int, int, int]:
    """Signs (one minus, two plus) making the unit-class localization sum vanish."""
    if len(weight_sets) != 3:
        raise ValueError("sign_solve needs exactly three weight multisets")
    prods = []
    for ws in weight_sets:
        prods.append(WeightMultiset(ws).product)
    P1, P2, P3 = prods
    # s1/P1 + s2/P2 + s3/P3 = 0  <=>  s1 P2 P3 + s2 P1 P3 + s3 P1 P2 = 0
    hits = [
        s for s in _MAJORITY_PLUS if s[0] * P2 * P3 + s[1] * P1 * P3 + s[2] * P1 * P2 == 0
    ]
    if not hits:
        raise NoSolutionError(f"no sign pattern annihilates the unit class for {weight_sets}")
    if len(hits) > 1:
        raise AmbiguousSignsError(f"several sign patterns work for {weight_sets}: {hits}")
    return hits[0]


def weights_from_params(params: Hp2ActionParams) -> FixedPointData:
    """Canonical fixed-point data of the HP^2 action with these parameters."""
    raw = fixed_point_weights(params)
    signs = sign_solve(raw)
    data = FixedPointData(
        4, tuple(FixedPoint(WeightMultiset(w), s) for w, s in zip(raw, signs))
    )
    return canonical_form(normalize_faithful(data))


@dataclass(frozen=True)
class Recovery:
    params: Hp2ActionParams
    pairing: Pairing

    @property
    def role_permutation(self) -> tuple[int, int, int]:
        return self.pairing.point_order

    @property
    def point_names(self) -> tuple[str, ...]:
        """For each input point, the HP^2 fixed point it corresponds to."""
        # q1 is (0:1:0); q2 shares the a-pair {p3 +- p2} with it, so it is
        # (0:0:1); q3 shares the b-pair {p2 +- p1}, so it is (1:0:0).
        role_names = ("(0:1:0)", "(0:0:1)", "(1:0:0)")
        names = [""] * 3
        for role, idx in enumerate(self.pairing.point_order):
            names[idx] = role_names[role]
        return tuple(names)


def _params_from_pairing(p: Pairing) -> Hp2ActionParams | None:
    a1, a2 = p.a_pair
    b1, b2 = p.b_pair
    if a1 != a2 + b1 + b2:
        return None
    try:
        return Hp2ActionParams((b1 - b2, a1 - a2, a1 + a2))
    except InvalidParamsError:
        return None


def recover_params(data: FixedPointData) -> Recovery:
    """Find HP^2 parameters whose weights reproduce ``data``.

    The minority-sign point plays q1; its largest weight a1 must equal the sum
    of its other three weights a2 + b1 + b2. Then d3 = a1 + a2, d2 = a1 - a2 and
    d1 = b1 - b2. When repeated weights allow several such readings, the one
    whose regenerated data matches is preferred.
    """
    if len(data.points) != 3 or data.half_dimension != 4:
        raise NotClassifiableError("HP^2 recovery needs three points in dimension 8")
    signs = data.signs
    minus = [i for i, s in enumerate(signs) if s == -1]
    plus = [i for i, s in enumerate(signs) if s == 1]
    minority = minus if len(minus) == 1 else plus if len(plus) == 1 else []
    if not minority:
        raise NotClassifiableError(f"sign pattern {signs} has no minority point")
    target = canonical_form(data)
    first = None
    for pairing in enumerate_pairings(data):
        if pairing.point_order[0] != minority[0]:
            continue
        params = _params_from_pairing(pairing)
        if params is None:
            continue
        rec = Recovery(params, pairing)
        if weights_from_params(params) == target:
            return rec
        if first is None:
            first = rec
    if first is not None:
        return first
    raise NotClassifiableError(f"no relabelling of {data!r} fits an HP^2 action")
