"""rieszlab: numerical diagnostics for finite vector systems.

The package analyzes truncated vector sequences in complex n-space for
two-sided bound constants, completeness, biorthogonal duals and dual
structure, provides generators for the classical example families and for
Gaussian Gabor systems on time-frequency point sets, and runs
truncation-scaling studies that expose how those quantities behave as the
truncation grows.
"""

from .diagnostics import (
    BoundsReport,
    GramSpectrum,
    RieszBounds,
    Verdict,
    VerdictKind,
    bessel_bound,
    biorthogonality_residual,
    classify,
    completeness_defect,
    equivalent_inner_product,
    gram_spectrum,
    riesz_bounds,
    span_distance,
)
from .duals import (
    CoCompleteness,
    co_completeness_check,
    duality_identity_residual,
    injectivity_witness,
    minimal_dual,
)
from .errors import (
    CriteriaDisagreementError,
    DimensionError,
    FitDomainError,
    IllConditionedError,
    MatrixParseError,
    NoBiorthogonalSequenceError,
    NotARieszBasisError,
    NotBiorthogonalError,
    RieszLabError,
    SingularOperatorError,
    TruncationError,
)
from .generators import (
    GaborDiscretization,
    GeneratedPair,
    PointSet2D,
    als_point_set,
    alternating_weighted_pair,
    gaussian_gabor,
    lattice_points,
    orthonormal,
    punctured_lattice,
    random_riesz,
    riesz_from_operator,
    weighted_pair,
    young_example,
    young_general,
)
from .scaling import (
    FamilySpec,
    GrowthFit,
    ScalingReport,
    SizeMetrics,
    TrendVerdict,
    fit_growth,
    gabor_refinement_study,
    run_family,
)
from .seqcore import (
    AmbientSpace,
    CoefficientVector,
    GramMatrix,
    VectorSequence,
    analysis,
    frame_apply,
    gram,
    inner,
    numerical_rank,
    rank_tolerance,
    synthesis,
)

__version__ = "0.1.0"

__all__ = [
    "AmbientSpace",
    "BoundsReport",
    "CoCompleteness",
    "CoefficientVector",
    "CriteriaDisagreementError",
    "DimensionError",
    "FamilySpec",
    "FitDomainError",
    "GaborDiscretization",
    "GeneratedPair",
    "GramMatrix",
    "GramSpectrum",
    "GrowthFit",
    "IllConditionedError",
    "MatrixParseError",
    "NoBiorthogonalSequenceError",
    "NotARieszBasisError",
    "NotBiorthogonalError",
    "PointSet2D",
    "RieszBounds",
    "RieszLabError",
    "ScalingReport",
    "SingularOperatorError",
    "SizeMetrics",
    "TrendVerdict",
    "TruncationError",
    "Verdict",
    "VerdictKind",
    "VectorSequence",
    "als_point_set",
    "alternating_weighted_pair",
    "analysis",
    "bessel_bound",
    "biorthogonality_residual",
    "classify",
    "co_completeness_check",
    "completeness_defect",
    "duality_identity_residual",
    "equivalent_inner_product",
    "fit_growth",
    "frame_apply",
    "gabor_refinement_study",
    "gaussian_gabor",
    "gram",
    "gram_spectrum",
    "injectivity_witness",
    "inner",
    "lattice_points",
    "minimal_dual",
    "numerical_rank",
    "orthonormal",
    "punctured_lattice",
    "random_riesz",
    "rank_tolerance",
    "riesz_bounds",
    "riesz_from_operator",
    "run_family",
    "span_distance",
    "synthesis",
    "weighted_pair",
    "young_example",
    "young_general",
]
