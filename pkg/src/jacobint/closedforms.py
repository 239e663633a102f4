"""Closed-form values of the weighted singular integrals.

Each operation evaluates one member of the family

    integral of (1-t)^alpha (1+t)^beta P_n^(alpha,beta)(t) / (singular factor) dt

over its domain, assembling every ratio of Gamma values in signed-log space
and delegating the hypergeometric factor to :mod:`jacobint.hypergeom`.

The lower-tail integral is inherently branch-sensitive: the closed form is
complex and equals exp(i pi lambda) times the real-convention integral taken
against |x - t|^(-lambda).  The sign of that phase is fixed once by the
elementary degree-zero case and recorded as LOWER_TAIL_PHASE_SIGN; the test
suite re-derives it on every run.
"""
from __future__ import annotations

import cmath
import math

from .common import ParameterError, is_near_integer
from .gammacore import binomial_real, signed_log_gamma_quotient
from .hypergeom import hyp2f1, hyp2f1_continued
from .orthopoly import JacobiParams, legendre_p_zero
from .types import EvalResult, IntegralKind, IntegralSpec

__all__ = [
    "IntegralKind",
    "IntegralSpec",
    "EvalResult",
    "LOWER_TAIL_PHASE_SIGN",
    "lower_tail_phase",
    "theorem1_full_range",
    "theorem2_upper",
    "theorem3_zero",
    "theorem4_lower",
    "gegenbauer_zero",
    "legendre_route",
    "remark_identity",
    "evaluate_spec",
]

# closed form = exp(LOWER_TAIL_PHASE_SIGN * i * pi * lambda) * real integral,
# under the upper-half-plane branch used by hyp2f1_continued.
LOWER_TAIL_PHASE_SIGN = 1


def lower_tail_phase(lam: float) -> complex:
    """Phase mapping the real-convention lower-tail integral onto the closed form."""
    return cmath.exp(complex(0.0, LOWER_TAIL_PHASE_SIGN * math.pi * lam))


def _result(prefactor_log: float, sign: float, series) -> EvalResult:
    scale = sign * math.exp(prefactor_log)
    value = scale * series.value
    err = abs(scale) * (series.tail_estimate + 4e-16 * abs(series.value))
    return EvalResult(value, err, series.terms_used, series.converged)


def theorem1_full_range(
    p: JacobiParams, lam: float, z: float, rel_tol: float = 1e-12
) -> EvalResult:
    """Integral over (-1, 1) of the Jacobi weight times P_n against (z-t)^(-lambda).

    Requires z > 1 and 0 < lambda <= 1.
    """
    if not z > 1.0:
        raise ParameterError(f"z must exceed 1, got {z}")
    if not 0.0 < lam <= 1.0:
        raise ParameterError(f"lambda must lie in (0, 1], got {lam}")
    n, alpha, bet = p.n, p.alpha, p.beta
    series = hyp2f1(
        alpha + n + 1.0, n + lam, alpha + bet + 2.0 * n + 2.0, 2.0 / (1.0 - z), rel_tol
    )
    logpref = (
        (alpha + bet + n + 1.0) * math.log(2.0)
        + math.lgamma(lam + n) - math.lgamma(lam)
        - (n + lam) * math.log(z - 1.0)
        - math.lgamma(n + 1.0)
        + math.lgamma(alpha + n + 1.0)
        + math.lgamma(bet + n + 1.0)
        - math.lgamma(alpha + bet + 2.0 * n + 2.0)
    )
    return _result(logpref, 1.0, series)


def theorem2_upper(
    p: JacobiParams, lam: float, x: float, rel_tol: float = 1e-12
) -> EvalResult:
    """Integral over (x, 1) of the Jacobi weight times P_n against (t-x)^(-lambda).

    Requires -1 < x < 1 and 0 < lambda < 1.
    """
    if not -1.0 < x < 1.0:
        raise ParameterError(f"x must lie in (-1, 1), got {x}")
    if not 0.0 < lam < 1.0:
        raise ParameterError(f"lambda must lie in (0, 1), got {lam}")
    n, alpha, bet = p.n, p.alpha, p.beta
    series = hyp2f1(
        alpha + n + 1.0, -bet - n, alpha - lam + 2.0, 0.5 * (1.0 - x), rel_tol
    )
    logpref = (
        bet * math.log(2.0)
        + math.lgamma(n + alpha + 1.0)
        + math.lgamma(1.0 - lam)
        - math.lgamma(n + 1.0)
        - math.lgamma(alpha - lam + 2.0)
        + (alpha + 1.0 - lam) * math.log(1.0 - x)
    )
    return _result(logpref, 1.0, series)


def theorem3_zero(p: JacobiParams, lam: float, rel_tol: float = 1e-12) -> EvalResult:
    """Integral over (0, 1) of the Jacobi weight times P_n against t^(-lambda).

    The x = 0 member of theorem2_upper, evaluated through the same code path.
    """
    return theorem2_upper(p, lam, 0.0, rel_tol)


def theorem4_lower(
    p: JacobiParams, lam: float, x: float, rel_tol: float = 1e-12
) -> EvalResult:
    """Complex closed form for the integral over (-1, x) against (t-x)^(-lambda).

    The first term continues the full-range kernel past its convergence ray
    and is evaluated on the upper-half-plane branch; the result relates to
    the real-convention integral through lower_tail_phase.
    """
    if not -1.0 < x < 1.0:
        raise ParameterError(f"x must lie in (-1, 1), got {x}")
    if not 0.0 < lam < 1.0:
        raise ParameterError(f"lambda must lie in (0, 1), got {lam}")
    n, alpha, bet = p.n, p.alpha, p.beta
    if is_near_integer(alpha + 1.0 - lam):
        raise ParameterError(
            "alpha + 1 - lambda integer makes the analytic continuation degenerate"
        )
    w = 2.0 / (1.0 - x)
    first = hyp2f1_continued(
        alpha + n + 1.0, n + lam, alpha + bet + 2.0 * n + 2.0, w, rel_tol
    )
    logpref1 = (
        (alpha + bet + n + 1.0) * math.log(2.0)
        - (n + lam) * math.log(1.0 - x)
        + math.lgamma(alpha + n + 1.0)
        + math.lgamma(bet + n + 1.0)
        - math.lgamma(alpha + bet + 2.0 * n + 2.0)
    )
    binom = binomial_real(-lam, n)
    term1 = binom * math.exp(logpref1) * first
    second = theorem2_upper(p, lam, x, rel_tol)
    value = term1 - second.value
    err = abs(binom) * math.exp(logpref1) * 1e-13 * (1.0 + abs(first)) + second.abs_err_estimate
    return EvalResult(value, err, second.terms_or_panels, second.converged)


def gegenbauer_zero(a: float, n: int, lam: float) -> EvalResult:
    """Integral over (0, 1) of (1-t^2)^(a-1/2) t^(-lambda) C_n^(a)(t).

    Requires a > -1/2, a != 0, 0 < lambda < 1.  A pole of a denominator
    Gamma yields an exact zero.
    """
    _check_gegenbauer_args(a, n, lam)
    quotient = signed_log_gamma_quotient(
        (n + 2.0 * a, 1.0 - lam),
        (n + 1.0, a, 0.5 * (n + 2.0 * a - lam + 2.0), 0.5 * (2.0 - lam - n)),
    )
    if quotient.sign == 0:
        return EvalResult(0.0, 0.0, 0, True)
    log_abs = math.log(math.pi) + (lam - 2.0 * a) * math.log(2.0) + quotient.log_abs
    value = quotient.sign * math.exp(log_abs)
    return EvalResult(value, 4e-15 * abs(value), 0, True)


def legendre_route(a: float, n: int, lam: float) -> EvalResult:
    """Same integral as gegenbauer_zero, routed through the Legendre value at the origin."""
    _check_gegenbauer_args(a, n, lam)
    pl0 = legendre_p_zero(n + a - 0.5, lam - a - 0.5)
    if pl0 == 0.0:
        return EvalResult(0.0, 0.0, 0, True)
    quotient = signed_log_gamma_quotient((n + 2.0 * a, 1.0 - lam), (n + 1.0, a))
    log_abs = (
        0.5 * math.log(math.pi)
        - (a - 0.5) * math.log(2.0)
        + quotient.log_abs
        + math.log(abs(pl0))
    )
    sign = quotient.sign * (1.0 if pl0 > 0 else -1.0)
    value = sign * math.exp(log_abs)
    return EvalResult(value, 4e-15 * abs(value), 0, True)


def _check_gegenbauer_args(a: float, n: int, lam: float) -> None:
    if not a > -0.5:
        raise ParameterError(f"Gegenbauer index must exceed -1/2, got {a}")
    if abs(a) < 1e-9:
        raise ParameterError("Gegenbauer index a = 0 is excluded")
    if n < 0 or n != int(n):
        raise ParameterError(f"degree n must be a nonnegative integer, got {n}")
    if not 0.0 < lam < 1.0:
        raise ParameterError(f"lambda must lie in (0, 1), got {lam}")


def remark_identity(p: JacobiParams, lam: float) -> EvalResult:
    """Integral over (-1, 1) of (1-t)^alpha (1+t)^(beta-lambda) P_n^(alpha,beta)(t).

    Requires beta - lambda > -1 and 0 < lambda < 1.
    """
    if not p.beta - lam > -1.0:
        raise ParameterError(f"beta - lambda must exceed -1, got {p.beta - lam}")
    if not 0.0 < lam < 1.0:
        raise ParameterError(f"lambda must lie in (0, 1), got {lam}")
    n, alpha, bet = p.n, p.alpha, p.beta
    binom = binomial_real(-lam, n)
    if binom == 0.0:
        return EvalResult(0.0, 0.0, 0, True)
    quotient = signed_log_gamma_quotient(
        (alpha + n + 1.0, bet - lam + 1.0), (alpha + bet + n - lam + 2.0,)
    )
    log_abs = (alpha + bet - lam + 1.0) * math.log(2.0) + quotient.log_abs + math.log(abs(binom))
    sign = quotient.sign * (1.0 if binom > 0 else -1.0)
    value = sign * math.exp(log_abs)
    return EvalResult(value, 4e-15 * abs(value), 0, True)


def evaluate_spec(spec: IntegralSpec, rel_tol: float = 1e-12) -> EvalResult:
    """Evaluate the closed form matching an IntegralSpec."""
    spec.validate()
    k = spec.kind
    if k is IntegralKind.FULL_RANGE:
        return theorem1_full_range(spec.params, spec.lam, spec.point, rel_tol)
    if k is IntegralKind.UPPER_TAIL:
        return theorem2_upper(spec.params, spec.lam, spec.point, rel_tol)
    if k is IntegralKind.ZERO_SINGULAR:
        return theorem3_zero(spec.params, spec.lam, rel_tol)
    if k is IntegralKind.LOWER_TAIL:
        return theorem4_lower(spec.params, spec.lam, spec.point, rel_tol)
    if k is IntegralKind.GEGENBAUER_ZERO:
        return gegenbauer_zero(spec.gegenbauer_index, spec.params.n, spec.lam)
    if k is IntegralKind.REMARK_WEIGHT:
        return remark_identity(spec.params, spec.lam)
    raise ParameterError(f"unsupported integral kind {k}")
