"""Obstruction calculus for monotone Lagrangians in symplectic cuts.

The package is organised by mechanism: `coring` builds graded cohomology
rings, `fold` reduces them mod N and checks distribution identities,
`charnum` does the exact characteristic-number arithmetic of the cut,
`floer` encodes the profile and collapse rules, `obstruct` combines them
into verdicts, and `cli` exposes everything on the command line.
"""

from .charnum import (
    CircleBundle,
    CutContext,
    MonotonicityCase,
    NotMonotoneLevelError,
    SemifreeReport,
    TorsionConstraint,
    UndeterminableError,
    WeightData,
    ZeroSectionReport,
    build_cut,
    gradient_sphere_check,
    maslov_exact,
    maslov_simply_connected,
    maslov_torsion_constraint,
    maslov_zero_section,
    pi1_total,
    semifree_monotonicity_cases,
)
from .coring import (
    CohomologyRing,
    InvalidRingError,
    make_complex_projective,
    make_custom,
    make_product_spheres,
    make_sphere,
    make_torus,
    tensor,
)
from .floer import (
    COHOMOLOGY_MINUS_ENDS,
    EQUALS_COHOMOLOGY,
    TRIVIAL,
    CollapseCertificate,
    FeasibilityReport,
    HFProfile,
    PageCheck,
    SeidelCandidate,
    hf_feasible,
    oh_profiles,
    seidel_applicable,
    sphere_local_rule,
    ss_collapse_certificate,
)
from .fold import (
    FoldedProfile,
    InvalidModulusError,
    TorusIdentityReport,
    binomial_fold_sum,
    cp_profile_match,
    fold_dims,
    fold_mod,
    is_two_periodic,
    roots_of_unity_residual,
    torus_identity_check,
)
from .obstruct import (
    CONSTRAINED,
    INCONCLUSIVE,
    OBSTRUCTED,
    HypothesisViolation,
    IndexConstraints,
    ScanRow,
    TraceStep,
    Verdict,
    check_exact_in_cotangent,
    check_lens,
    check_product_spheres,
    check_simply_connected_in_cut,
    check_sphere,
    check_torus,
    exact_verdict,
    scan,
)

__version__ = "0.1.0"

__all__ = [
    "CircleBundle",
    "CohomologyRing",
    "CollapseCertificate",
    "COHOMOLOGY_MINUS_ENDS",
    "CONSTRAINED",
    "CutContext",
    "EQUALS_COHOMOLOGY",
    "FeasibilityReport",
    "FoldedProfile",
    "HFProfile",
    "HypothesisViolation",
    "INCONCLUSIVE",
    "IndexConstraints",
    "InvalidModulusError",
    "InvalidRingError",
    "MonotonicityCase",
    "NotMonotoneLevelError",
    "OBSTRUCTED",
    "PageCheck",
    "ScanRow",
    "SeidelCandidate",
    "SemifreeReport",
    "TorsionConstraint",
    "TorusIdentityReport",
    "TraceStep",
    "TRIVIAL",
    "UndeterminableError",
    "Verdict",
    "WeightData",
    "ZeroSectionReport",
    "binomial_fold_sum",
    "build_cut",
    "check_exact_in_cotangent",
    "check_lens",
    "check_product_spheres",
    "check_simply_connected_in_cut",
    "check_sphere",
    "check_torus",
    "cp_profile_match",
    "exact_verdict",
    "fold_dims",
    "fold_mod",
    "gradient_sphere_check",
    "hf_feasible",
    "is_two_periodic",
    "make_complex_projective",
    "make_custom",
    "make_product_spheres",
    "make_sphere",
    "make_torus",
    "maslov_exact",
    "maslov_simply_connected",
    "maslov_torsion_constraint",
    "maslov_zero_section",
    "oh_profiles",
    "pi1_total",
    "roots_of_unity_residual",
    "scan",
    "seidel_applicable",
    "semifree_monotonicity_cases",
    "sphere_local_rule",
    "ss_collapse_certificate",
    "tensor",
    "torus_identity_check",
]
