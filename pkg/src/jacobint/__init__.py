"""Closed forms and verification oracles for singular integrals of Jacobi-weighted integrands.

The library evaluates the closed-form values of integrals of the form

    (1-t)^alpha (1+t)^beta P_n^(alpha,beta)(t) / (algebraic singular factor)

over the full orthogonality interval and its tails, together with every
special-function identity those evaluations rest on, and validates each
closed form against two independent oracles: singularity-absorbing
quadrature and a moment-expansion series.
"""

__version__ = "0.1.0"

from .common import ConvergenceError, GammaPoleError, ParameterError
from .gammacore import (
    PoleAwareValue,
    SignedLog,
    beta,
    binomial_real,
    gamma,
    gamma_limit_ratio,
    gamma_ratio_shifted,
    log_gamma_signed,
    pochhammer,
    signed_log_gamma_quotient,
)
from .orthopoly import (
    JacobiParams,
    gegenbauer_c,
    jacobi_p,
    jacobi_p_series,
    legendre_p_zero,
)
from .hypergeom import (
    SeriesEval,
    appell_f1,
    appell_f1_at_x1,
    appell_f1_at_y1,
    appell_f3_zero_balanced,
    gauss_half,
    h2_at_minus1,
    horn_h2,
    hyp2f1,
    hyp2f1_continued,
    hyp3f2,
    pfq,
    regularized_pfq_limit,
)
from .types import EvalResult, IntegralKind, IntegralSpec
from .closedforms import (
    LOWER_TAIL_PHASE_SIGN,
    evaluate_spec,
    gegenbauer_zero,
    legendre_route,
    lower_tail_phase,
    remark_identity,
    theorem1_full_range,
    theorem2_upper,
    theorem3_zero,
    theorem4_lower,
)
from .oracle import (
    QuadRequest,
    moment_integral,
    moment_quadrature,
    quad_weighted,
    series_oracle_theorem1,
)

__all__ = [
    "__version__",
    "ConvergenceError",
    "GammaPoleError",
    "ParameterError",
    "PoleAwareValue",
    "SignedLog",
    "beta",
    "binomial_real",
    "gamma",
    "gamma_limit_ratio",
    "gamma_ratio_shifted",
    "log_gamma_signed",
    "pochhammer",
    "signed_log_gamma_quotient",
    "JacobiParams",
    "gegenbauer_c",
    "jacobi_p",
    "jacobi_p_series",
    "legendre_p_zero",
    "SeriesEval",
    "appell_f1",
    "appell_f1_at_x1",
    "appell_f1_at_y1",
    "appell_f3_zero_balanced",
    "gauss_half",
    "h2_at_minus1",
    "horn_h2",
    "hyp2f1",
    "hyp2f1_continued",
    "hyp3f2",
    "pfq",
    "regularized_pfq_limit",
    "EvalResult",
    "IntegralKind",
    "IntegralSpec",
    "LOWER_TAIL_PHASE_SIGN",
    "evaluate_spec",
    "gegenbauer_zero",
    "legendre_route",
    "lower_tail_phase",
    "remark_identity",
    "theorem1_full_range",
    "theorem2_upper",
    "theorem3_zero",
    "theorem4_lower",
    "QuadRequest",
    "moment_integral",
    "moment_quadrature",
    "quad_weighted",
    "series_oracle_theorem1",
]
