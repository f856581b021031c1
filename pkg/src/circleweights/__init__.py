"""Circle actions with isolated fixed points, localization, and HP^2."""

from .constraints import (
    CaseLabel,
    MultiplicityProfile,
    Pairing,
    classify_case,
    enumerate_pairings,
    multiplicity_consistent,
    multiplicity_profile,
    residues_mod_a,
    sign_pattern_valid,
)
from .core import (
    ExactRational,
    FixedPoint,
    FixedPointData,
    InvalidDataError,
    WeightMultiset,
    canonical_form,
    format_rational,
    normalize_faithful,
    pointwise_gcd,
)
from .hp2 import (
    Family,
    Hp2ActionParams,
    recover_params,
    sign_solve,
    weights_from_params,
)
from .localization import (
    E1,
    E1_SQUARED,
    E2,
    UNIT,
    PontryaginReport,
    SymmetricPolynomialSpec,
    eval_sigma,
    localization_sum,
    pontryagin_report,
)
from .verifier import (
    AdmissibilityReport,
    Inadmissible,
    MatchResult,
    SearchSummary,
    TheoremViolation,
    admissible,
    classify,
    search,
)

__version__ = "0.1.0"
