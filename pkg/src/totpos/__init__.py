"""Total-positivity toolkit.

Computes TN/TP orders of matrices and sampled kernels, applies multivariate
entrywise transforms and decides their admissibility, completes TN 2x2
matrices symmetrically, generates random test matrices, and verifies the
classification identities through exact determinants, property suites, and
counterexample search.
"""

from .linalg import (
    DEFAULT_TOLERANCE,
    Matrix,
    MinorSelector,
    MixedArithmeticError,
    OrderReport,
    Tolerance,
    det_exact,
    det_float,
    enumerate_minors,
    minor_value,
    tn_order,
    tp_order,
)
from .transforms import (
    UNBOUNDED,
    ClassificationVerdict,
    Heaviside,
    MixedPowerTransform,
    OrderSpec,
    Power,
    apply,
    check_jointly_monotone,
    check_mult_mid_convex,
    classify,
)
from .completion import CompletionResult, stn_complete
from .generators import GenSpec, GeneratorError, random_kernel_tuple, random_matrix

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOLERANCE",
    "Matrix",
    "MinorSelector",
    "MixedArithmeticError",
    "OrderReport",
    "Tolerance",
    "det_exact",
    "det_float",
    "enumerate_minors",
    "minor_value",
    "tn_order",
    "tp_order",
    "UNBOUNDED",
    "ClassificationVerdict",
    "Heaviside",
    "MixedPowerTransform",
    "OrderSpec",
    "Power",
    "apply",
    "check_jointly_monotone",
    "check_mult_mid_convex",
    "classify",
    "CompletionResult",
    "stn_complete",
    "GenSpec",
    "GeneratorError",
    "random_kernel_tuple",
    "random_matrix",
    "__version__",
]
