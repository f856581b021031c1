"""Admissibility pipeline, HP^2 classifier and the bounded exhaustive search."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Union

from .constraints import (
    CaseLabel,
    Pairing,
    classify_case,
    enumerate_pairings,
    multiplicity_consistent,
    raw_case3_match,
    sign_pattern_valid,
)
from .core import (
    FixedPoint,
    FixedPointData,
    WeightMultiset,
    canonical_form,
    format_rational,
    global_gcd,
    pointwise_gcd,
)
from .hp2 import (
    Family,
    Hp2ActionParams,
    NotClassifiableError,
    iter_params,
    recover_params,
    weights_from_params,
)
from .kernels import scan
from .localization import (
    E1,
    UNIT,
    DimensionMismatchError,
    PontryaginReport,
    localization_sum,
    pontryagin_report,
)

HP2_P1_SQUARED = 4
HP2_P2 = 7


class TheoremViolation(RuntimeError):
    """Admissible data that is not the weight data of any HP^2 action.

    Either a bug or a counterexample to the classification; never expected.
    """


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class AdmissibilityReport:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> Optional[Check]:
        return next((c for c in self.checks if not c.passed), None)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def admissible(data: FixedPointData) -> AdmissibilityReport:
    """Run every necessary condition on 8-dimensional data, recording each.

    Inadmissible data is a result, not an error: only data that is not
    8-dimensional raises.
    """
    if data.half_dimension != 4:
        raise DimensionMismatchError(
            f"admissibility is defined for 8-dimensional data, got dimension {data.dimension}"
        )
    m = len(data.points)
    checks = [Check("weight positivity", True, "all weights >= 1")]
    checks.append(Check("point count", m >= 2, f"{m} fixed point(s)"))

    pg = pointwise_gcd(data)
    checks.append(Check("pointwise gcd", all(g == 1 for g in pg), f"per-point gcd {pg}"))
    g = global_gcd(data)
    checks.append(Check("global gcd", g == 1, f"gcd {g}"))

    sg = "".join("+" if s > 0 else "-" for s in data.signs)
    checks.append(Check("sign pattern", sign_pattern_valid(data), f"signs ({sg})"))

    pairings: list[Pairing] = []
    if m == 3:
        pairings = enumerate_pairings(data)
        checks.append(Check("pairing", bool(pairings), f"{len(pairings)} pairing(s)"))
    else:
        checks.append(Check("pairing", False, "weight pairing needs exactly three fixed points"))

    unit = localization_sum(data, UNIT)
    checks.append(Check("unit-class vanishing", unit == 0, f"sum {format_rational(unit)}"))
    p1 = localization_sum(data, E1)
    checks.append(Check("p1 vanishing", p1 == 0, f"sum {format_rational(p1)}"))

    ok, bad = multiplicity_consistent(data)
    checks.append(
        Check(
            "multiplicity consistency",
            ok,
            "all divisors consistent" if ok else f"divisor {bad} violates",
        )
    )

    labels = sorted({str(lab) for lab in map(classify_case, pairings) if lab is not None})
    checks.append(
        Check(
            "case classification",
            bool(labels),
            ", ".join(labels) if labels else "no pairing matches a case",
        )
    )
    return AdmissibilityReport(tuple(checks))


@dataclass(frozen=True)
class MatchResult:
    params: Hp2ActionParams
    role_permutation: tuple[int, int, int]
    case_label: Optional[CaseLabel]
    point_names: tuple[str, ...]

    @property
    def family(self) -> Family:
        return self.params.family


@dataclass(frozen=True)
class Inadmissible:
    report: AdmissibilityReport

    @property
    def failed_check(self) -> str:
        return self.report.first_failure.name


def classify(data: FixedPointData) -> Union[MatchResult, Inadmissible]:
    report = admissible(data)
    if not report.passed:
        return Inadmissible(report)
    try:
        rec = recover_params(data)
    except NotClassifiableError as exc:
        raise TheoremViolation(f"admissible data {data!r} has no HP^2 parameters: {exc}")
    if weights_from_params(rec.params) != canonical_form(data):
        raise TheoremViolation(
            f"admissible data {data!r} does not regenerate from {rec.params}"
        )
    return MatchResult(
        params=rec.params,
        role_permutation=rec.role_permutation,
        case_label=classify_case(rec.pairing),
        point_names=rec.point_names,
    )


@dataclass(frozen=True)
class AdmissibleConfig:
    data: FixedPointData
    match: MatchResult
    pontryagin: PontryaginReport


@dataclass
class SearchSummary:
    bound: int
    admissible_configs: list[AdmissibleConfig]
    case_counts: dict[str, int]
    case3_reclassified: int
    case3_b2_check: bool
    generated_set_equal: bool
    pontryagin_ok: bool
    candidates: int
    missing: list[FixedPointData] = field(default_factory=list)
    extra: list[FixedPointData] = field(default_factory=list)

    @property
    def family_counts(self) -> dict[str, int]:
        c = Counter(str(cfg.match.family) for cfg in self.admissible_configs)
        return {str(f): c.get(str(f), 0) for f in Family}

    @property
    def all_matched(self) -> bool:
        return all(cfg.match is not None for cfg in self.admissible_configs)

    @property
    def verified(self) -> bool:
        return (
            self.generated_set_equal
            and self.case_counts.get("Case2", 0) == 0
            and self.case3_b2_check
            and self.all_matched
            and self.pontryagin_ok
        )


def _partition(a1: int, backend: Optional[str] = None) -> list[FixedPointData]:
    """Canonical candidates whose largest weight is ``a1``."""
    out = set()
    for a2, b1, b2, c1, c2, k in scan(a1, backend).tolist():
        signs = [1, 1, 1]
        signs[k] = -1
        weights = ((a1, a2, b1, b2), (a1, a2, c1, c2), (b1, b2, c1, c2))
        data = FixedPointData(
            4, tuple(FixedPoint(WeightMultiset(w), s) for w, s in zip(weights, signs))
        )
        out.add(canonical_form(data))
    return sorted(out, key=lambda d: d.points)


def generated_set(bound: int) -> set[FixedPointData]:
    """Canonical HP^2 data with every weight <= bound."""
    return {
        weights_from_params(p)
        for p in iter_params(2 * bound)
        if p.max_weight <= bound
    }


def search(bound: int, *, backend: Optional[str] = None, workers: int = 1) -> SearchSummary:
    """Exhaustively verify the classification for all weights <= ``bound``.

    Pairings are enumerated directly, so the weight-pairing condition holds by
    construction. Candidates whose unit-class or p1 sum does not vanish are
    discarded inside the kernel; the rest are canonicalized, deduplicated and
    run through the full pipeline.
    """
    if bound < 2:
        raise ValueError(f"bound must be at least 2, got {bound}")
    a1_values = range(2, bound + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_partition, a1_values, [backend] * len(a1_values)))
    else:
        parts = [_partition(a1, backend) for a1 in a1_values]
    candidates = sorted({d for part in parts for d in part}, key=lambda d: d.points)

    configs: list[AdmissibleConfig] = []
    case_counts = Counter({str(lab): 0 for lab in CaseLabel})
    reclassified = 0
    for data in candidates:
        result = classify(data)
        if isinstance(result, Inadmissible):
            continue
        for p in enumerate_pairings(data):
            label = classify_case(p)
            case_counts[str(label) if label else "NotApplicable"] += 1
            if label is CaseLabel.CASE1 and raw_case3_match(p):
                reclassified += 1
        configs.append(AdmissibleConfig(data, result, pontryagin_report(data)))

    found = {cfg.data for cfg in configs}
    expected = generated_set(bound)
    pontryagin_ok = all(
        cfg.pontryagin.p1_squared == HP2_P1_SQUARED and cfg.pontryagin.p2 == HP2_P2
        for cfg in configs
    )
    return SearchSummary(
        bound=bound,
        admissible_configs=configs,
        case_counts=dict(case_counts),
        case3_reclassified=reclassified,
        case3_b2_check=case_counts["Case3"] == 0,
        generated_set_equal=found == expected,
        pontryagin_ok=pontryagin_ok,
        candidates=len(candidates),
        missing=sorted(expected - found, key=lambda d: d.points),
        extra=sorted(found - expected, key=lambda d: d.points),
    )
