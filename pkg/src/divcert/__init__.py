"""divcert: exact dominance tests and diversification certificates.

Finite distributions with rational data, compared and certified without
any floating point: stochastic dominance of first and second order,
Expected Shortfall, the Kantorovich transport metric, and constructive
witnesses (permutation-weight certificates, martingale couplings, slack
lifts and truncation decompositions) that verify by exact arithmetic.
"""

from .certify import (
    CertificationError,
    DecompositionResult,
    DoublyStochasticMatrix,
    LiftResult,
    MajorizationError,
    MartingaleCoupling,
    MeansDifferError,
    PermutationCertificate,
    SsdViolatedError,
    TTransform,
    birkhoff_decompose,
    build_doubly_stochastic,
    certify_div1,
    decompose_ssd,
    lift_delta_gamma,
    mps_coupling,
    t_transform_chain,
)
from .dist import (
    DEFAULT_GRID_CAP,
    GridCapError,
    JointDist,
    Rational,
    SimpleDist,
    UniformGrid,
    as_rational,
    common_refinement,
    convex_combination,
    dirac,
    expand_to_uniform_grid,
    from_samples,
    mixture,
    quantize_values,
    regrid,
    simplex_weights,
)
from .dominance import (
    MajorizationCheck,
    check_fsd,
    check_majorization,
    check_ssd,
    fsd_violation,
    verify_div1_certificate,
    verify_div2_instance,
)
from .risk import (
    ESCurve,
    es_curve,
    expected_shortfall,
    merged_breakpoints,
    ssd_gap,
    ssd_violation,
    tail_integral,
)
from .transport import kantorovich, kantorovich_cdf

__version__ = "0.1.0"

__all__ = [
    "CertificationError",
    "DecompositionResult",
    "DoublyStochasticMatrix",
    "DEFAULT_GRID_CAP",
    "ESCurve",
    "GridCapError",
    "JointDist",
    "LiftResult",
    "MajorizationCheck",
    "MajorizationError",
    "MartingaleCoupling",
    "MeansDifferError",
    "PermutationCertificate",
    "Rational",
    "SimpleDist",
    "SsdViolatedError",
    "TTransform",
    "UniformGrid",
    "as_rational",
    "birkhoff_decompose",
    "build_doubly_stochastic",
    "certify_div1",
    "check_fsd",
    "check_majorization",
    "check_ssd",
    "common_refinement",
    "convex_combination",
    "decompose_ssd",
    "dirac",
    "es_curve",
    "expand_to_uniform_grid",
    "expected_shortfall",
    "from_samples",
    "fsd_violation",
    "kantorovich",
    "kantorovich_cdf",
    "lift_delta_gamma",
    "merged_breakpoints",
    "mixture",
    "mps_coupling",
    "quantize_values",
    "regrid",
    "simplex_weights",
    "ssd_gap",
    "ssd_violation",
    "t_transform_chain",
    "tail_integral",
    "verify_div1_certificate",
    "verify_div2_instance",
]
