"""Discrete least-squares approximation on equidistant grids via Hahn expansions."""

from .bounds import (
    BoundReport,
    alpha0_constant,
    alpha0_exact_constant,
    alpha0_sandwich_logs,
    bound_report,
    degree_threshold,
    hypothesis_holds,
    min_nodes,
    ratio_discrete_continuous,
    simplified_constant,
    worst_case_constant,
)
from .errors import (
    DegreeError,
    DomainError,
    HahnLsqError,
    InstabilityError,
    LengthMismatchError,
    MissingDerivativeBoundError,
    NumericalRangeWarning,
    ParameterError,
    ThresholdError,
)
from .hahn import (
    DiscreteWeight,
    HahnParams,
    endpoint_max_check,
    hahn_eval,
    hahn_eval_exact,
    hahn_eval_recurrence,
    hahn_norm_sq,
    hahn_norm_sq_exact,
    hahn_table,
    inner_product,
    normalized_hahn_eval,
    weight,
    weight_exact,
)
from .jacobi import (
    JacobiParams,
    continuous_constant,
    jacobi_eval,
    jacobi_norm_sq,
    jacobi_sup,
)
from .lsq import (
    Approximant,
    ErrorReport,
    FunctionSpec,
    class_K_defect,
    evaluate,
    extremal_function,
    fit_hahn,
    fit_normal_equations,
    grid_points,
    sup_error,
)
from .registry import polynomial_function, resolve, sine_function
from .specfun import (
    gamma_ratio_residual,
    gen_binomial,
    log_gamma,
    log_pochhammer,
    pochhammer,
    stirling_sandwich,
    stirling_sandwich_logs,
)

__version__ = "0.1.0"

__all__ = [
    "Approximant",
    "BoundReport",
    "DegreeError",
    "DiscreteWeight",
    "DomainError",
    "ErrorReport",
    "FunctionSpec",
    "HahnLsqError",
    "HahnParams",
    "InstabilityError",
    "JacobiParams",
    "LengthMismatchError",
    "MissingDerivativeBoundError",
    "NumericalRangeWarning",
    "ParameterError",
    "ThresholdError",
    "alpha0_constant",
    "alpha0_exact_constant",
    "alpha0_sandwich_logs",
    "bound_report",
    "class_K_defect",
    "continuous_constant",
    "degree_threshold",
    "endpoint_max_check",
    "evaluate",
    "extremal_function",
    "fit_hahn",
    "fit_normal_equations",
    "gamma_ratio_residual",
    "gen_binomial",
    "grid_points",
    "hahn_eval",
    "hahn_eval_exact",
    "hahn_eval_recurrence",
    "hahn_norm_sq",
    "hahn_norm_sq_exact",
    "hahn_table",
    "hypothesis_holds",
    "inner_product",
    "jacobi_eval",
    "jacobi_norm_sq",
    "jacobi_sup",
    "log_gamma",
    "log_pochhammer",
    "min_nodes",
    "normalized_hahn_eval",
    "pochhammer",
    "polynomial_function",
    "ratio_discrete_continuous",
    "resolve",
    "simplified_constant",
    "sine_function",
    "stirling_sandwich",
    "stirling_sandwich_logs",
    "sup_error",
    "weight",
    "weight_exact",
    "worst_case_constant",
]
