"""Moments and ratios of characteristic polynomials on the unit circle.

The package computes closed determinantal formulas for moments and ratios
of characteristic polynomials over two ensembles: the finite ensemble that
places n points on the 2n-th roots of unity with squared-Vandermonde
weight, and the Haar-distributed unitary group.  Every closed formula is
cross-checked against exact enumeration over the finite ensemble's
C(2n, n)-point support; scaled large-n limits and their contour average
are provided alongside.

Layers
------
numeric     arbitrary-precision complex arithmetic, determinants, reports
ensembles   exact enumeration of the finite ensemble, Monte Carlo sampler
symfunc     Schur / elementary / complete homogeneous evaluation
formulas    the closed moment, ratio, and swap formulas for both ensembles
zetalimits  scaled limits of the ratio determinants and the contour average
verify      seeded invariant suites tying every formula to its oracle
cli         command-line front end (``acue-lab``)
"""

from .ensembles import (
    PointConfiguration,
    acue_expect,
    char_poly,
    enumerate_acue,
    roots_of_unity,
    sample_cue,
)
from .errors import (
    AcueLabError,
    CapacityError,
    ConditioningError,
    ContourError,
    DimensionError,
    DomainError,
    PoleError,
)
from .formulas import (
    MomentSpec,
    acue_moment,
    acue_ratio,
    bos_compose,
    cue_moment,
    cue_ratio,
    f_kernel,
    h_func,
    moment_from_ratio_limit,
    one_ratio_acue,
    p_poly,
    phi_column,
    psi_column,
    swap2_acue,
    swap2_cue,
)
from .numeric import (
    ComplexMatrix,
    ComplexValue,
    DEFAULT_PRECISION_BITS,
    EvalReport,
    as_value,
    as_values,
    det,
    vandermonde,
)
from .symfunc import (
    Partition,
    elementary,
    homogeneous,
    hook_expectation,
    pieri_check,
    schur_eval,
)
from .verify import VerifyParams, available_suites, run_suite, run_suites
from .zetalimits import (
    ScaledShifts,
    ae_limit_kernel,
    averaged_acue_limit,
    e_limit_kernel,
    ratio_limit_det,
)

__version__ = "0.1.0"

__all__ = [
    "AcueLabError",
    "CapacityError",
    "ComplexMatrix",
    "ComplexValue",
    "ConditioningError",
    "ContourError",
    "DEFAULT_PRECISION_BITS",
    "DimensionError",
    "DomainError",
    "EvalReport",
    "MomentSpec",
    "Partition",
    "PointConfiguration",
    "PoleError",
    "ScaledShifts",
    "VerifyParams",
    "acue_expect",
    "acue_moment",
    "acue_ratio",
    "ae_limit_kernel",
    "as_value",
    "as_values",
    "available_suites",
    "averaged_acue_limit",
    "bos_compose",
    "char_poly",
    "cue_moment",
    "cue_ratio",
    "det",
    "e_limit_kernel",
    "elementary",
    "enumerate_acue",
    "f_kernel",
    "h_func",
    "homogeneous",
    "hook_expectation",
    "moment_from_ratio_limit",
    "one_ratio_acue",
    "p_poly",
    "phi_column",
    "pieri_check",
    "psi_column",
    "ratio_limit_det",
    "roots_of_unity",
    "run_suite",
    "run_suites",
    "sample_cue",
    "schur_eval",
    "swap2_acue",
    "swap2_cue",
    "vandermonde",
    "__version__",
]
