"""Free interpolation in fractional Cauchy-Stieltjes families and their multipliers."""

__version__ = "0.1.0"

from .disk_core import (
    BoundaryPoint,
    DiskPoint,
    DomainError,
    NodeSequence,
    blaschke_factor,
    blaschke_product_excluding,
    principal_power,
    pseudo_hyperbolic,
)
from .conditions import (
    ConditionReport,
    SigmaResult,
    carleson_delta,
    check_conditions,
    sigma_alpha,
    sigma_profile,
)
from .quadrature import QuadratureSpec, QuadResult
from .transforms import (
    DiscreteMeasure,
    FractionalTransform,
    RationalFamily,
    default_kernel_samples,
    differentiate,
    estimate_kernel_constant,
    estimate_lemma13_constant,
    evaluate,
    f_alpha_bound_via_derivative,
    forward_trace,
    kernel_integral_ratio,
    lemma13_ratio,
    trace_bound,
    norm_upper_bound,
    omega,
)
from .interpolation import (
    FAlphaInterpolant,
    MultiplierInterpolant,
    build_f_alpha_interpolant,
    build_multiplier_interpolant,
    check_y_bound,
    expansion_coefficients,
    verify_interpolation,
)
from .multiplier import (
    BoundReport,
    g_prime_decomposition,
    multiplier_norm_bound,
    sampled_sup_norm,
    test_function,
    m1_norm_bound,
    vinogradov_m1_bound,
)
