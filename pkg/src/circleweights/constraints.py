"""Combinatorial necessary conditions on three-fixed-point weight data.

* weight pairing: the twelve weights of an 8-dimensional action with three
  fixed points split into pairs of equal weights living at different points,
  so the points look like {a1,a2,b1,b2}, {a1,a2,c1,c2}, {b1,b2,c1,c2};
* divisibility profiles: for every a > 1 the nonzero counts of weights
  divisible by a agree across the fixed points;
* the three admissible shapes of the c-pair relative to a1, b1, b2.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Optional

from .core import FixedPointData
from .localization import DimensionMismatchError


def _desc(pair) -> tuple[int, int]:
    x, y = pair
    return (x, y) if x >= y else (y, x)


@dataclass(frozen=True, order=True)
class Pairing:
    """Role assignment of the weights of three fixed points.

    ``point_order[r]`` is the index (in the input data) of the point playing
    role q_(r+1).
    """

    point_order: tuple[int, int, int]
    a_pair: tuple[int, int]
    b_pair: tuple[int, int]
    c_pair: tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "point_order", tuple(self.point_order))
        for name in ("a_pair", "b_pair", "c_pair"):
            object.__setattr__(self, name, _desc(getattr(self, name)))

    @property
    def a1(self) -> int:
        return self.a_pair[0]

    @property
    def a2(self) -> int:
        return self.a_pair[1]

    @property
    def b1(self) -> int:
        return self.b_pair[0]

    @property
    def b2(self) -> int:
        return self.b_pair[1]

    def role_weights(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        """Weight multisets of q1, q2, q3 (descending)."""
        a, b, c = self.a_pair, self.b_pair, self.c_pair
        return (
            tuple(sorted(a + b, reverse=True)),
            tuple(sorted(a + c, reverse=True)),
            tuple(sorted(b + c, reverse=True)),
        )

    def reconstruct(self) -> list[tuple[int, ...]]:
        """Weight multisets in the input point order."""
        out: list = [None, None, None]
        for role, ws in zip(self.point_order, self.role_weights()):
            out[role] = ws
        return out


class CaseLabel(enum.Enum):
    CASE1 = 1  # {c1, c2} = {a1 - b1, a1 - b2}
    CASE2 = 2  # {c1, c2} = {b1, b2}
    CASE3 = 3  # {c1, c2} = {a1 - b_i, b_j}, b_j != a1/2

    def __str__(self):
        return f"Case{self.value}"


@dataclass(frozen=True)
class MultiplicityProfile:
    divisor: int
    counts: tuple[int, ...]

    @property
    def nonzero(self) -> tuple[int, ...]:
        return tuple(c for c in self.counts if c)

    @property
    def consistent(self) -> bool:
        nz = self.nonzero
        return len(nz) != 1 and len(set(nz)) <= 1


def _require_three_by_four(data: FixedPointData):
    if len(data.points) != 3 or data.half_dimension != 4:
        raise DimensionMismatchError(
            "weight pairing needs three fixed points in dimension 8, got "
            f"{len(data.points)} points in dimension {data.dimension}"
        )


def enumerate_pairings(data: FixedPointData) -> list[Pairing]:
    """All role assignments with a1 equal to the largest weight overall."""
    _require_three_by_four(data)
    ws = data.weight_sets
    top = max(data.all_weights())
    found = set()
    for order in permutations(range(3)):
        q1, q2, q3 = (ws[i] for i in order)
        if top not in q1 or top not in q2:
            continue
        q2_count = Counter(q2)
        q3_count = Counter(q3)
        for idx in combinations(range(4), 2):
            a = _desc(q1[i] for i in idx)
            if a[0] != top:
                continue
            rest = q2_count.copy()
            rest.subtract(a)
            if min(rest.values()) < 0:
                continue
            c = tuple(rest.elements())
            b = tuple(q1[i] for i in range(4) if i not in idx)
            if Counter(b + c) != q3_count:
                continue
            found.add(Pairing(order, a, b, c))
    return sorted(found)


def multiplicity_profile(data: FixedPointData, a: int) -> MultiplicityProfile:
    if a < 2:
        raise ValueError(f"divisor must be at least 2, got {a}")
    return MultiplicityProfile(
        a, tuple(sum(1 for w in ws if w % a == 0) for ws in data.weight_sets)
    )


def multiplicity_consistent(data: FixedPointData) -> tuple[bool, Optional[int]]:
    """Check every divisor 2..max weight; return (ok, first violating divisor).

    A profile fails when its nonzero counts differ, or when exactly one point
    has a nonzero count (a fixed component cannot carry a single fixed point).
    """
    for a in range(2, max(data.all_weights()) + 1):
        if not multiplicity_profile(data, a).consistent:
            return False, a
    return True, None


def residues_mod_a(weights: Iterable[int], a: int) -> tuple[int, ...]:
    """Images of the weights in Z_a / {+-1}, as a descending tuple."""
    if a < 2:
        raise ValueError(f"modulus must be at least 2, got {a}")
    out = []
    for w in weights:
        r = w % a
        out.append(min(r, a - r))
    return tuple(sorted(out, reverse=True))


def classify_case(p: Pairing) -> Optional[CaseLabel]:
    """Match the c-pair against the three shapes; lowest case number wins.

    Returns None when no shape matches (the pairing is inadmissible).
    """
    a1, (b1, b2), c = p.a1, p.b_pair, sorted(p.c_pair)
    if a1 <= 1:
        return None
    if c == sorted((a1 - b1, a1 - b2)):
        return CaseLabel.CASE1
    if c == sorted((b1, b2)):
        return CaseLabel.CASE2
    # b1, b2 are interchangeable labels here, so both readings are tried.
    for bi, bj in ((b1, b2), (b2, b1)):
        if 2 * bj != a1 and c == sorted((a1 - bi, bj)):
            return CaseLabel.CASE3
    return None


def raw_case3_match(p: Pairing) -> bool:
    """True if the c-pair has the Case-3 shape ignoring the b_j != a1/2 side
    condition. Used to count Case-3 shapes that collapse into Case 1."""
    a1, (b1, b2), c = p.a1, p.b_pair, sorted(p.c_pair)
    return any(c == sorted((a1 - bi, bj)) for bi, bj in ((b1, b2), (b2, b1)))


def sign_pattern_valid(data: FixedPointData) -> bool:
    signs = set(data.signs)
    return signs == {1, -1}
