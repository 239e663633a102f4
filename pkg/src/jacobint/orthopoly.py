"""Jacobi and Gegenbauer polynomial evaluation.

The three-term recurrence is the production path; the terminating
hypergeometric sum exists as an independent representation for testing.
Both accept scalars or numpy arrays for the abscissa.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .common import INTEGER_TOL, GammaPoleError, ParameterError
from .gammacore import log_gamma_signed, pochhammer

__all__ = [
    "JacobiParams",
    "jacobi_p",
    "jacobi_p_series",
    "gegenbauer_c",
    "legendre_p_zero",
]


@dataclass(frozen=True)
class JacobiParams:
    """Weight exponents (alpha, beta) and degree n of P_n^(alpha,beta)."""

    alpha: float
    beta: float
    n: int

    def __post_init__(self) -> None:
        if not self.alpha > -1.0:
            raise ParameterError(f"alpha must exceed -1, got {self.alpha}")
        if not self.beta > -1.0:
            raise ParameterError(f"beta must exceed -1, got {self.beta}")
        if self.n < 0 or self.n != int(self.n):
            raise ParameterError(f"degree n must be a nonnegative integer, got {self.n}")


def jacobi_p(p: JacobiParams, t):
    """P_n^(alpha,beta)(t) by the three-term recurrence."""
    a, b, n = p.alpha, p.beta, p.n
    one = t * 0.0 + 1.0
    if n == 0:
        return one
    prev = one
    cur = 0.5 * (a + b + 2.0) * t + 0.5 * (a - b)
    ab = a + b
    for k in range(2, n + 1):
        c1 = 2.0 * k * (k + ab) * (2.0 * k + ab - 2.0)
        c2 = (2.0 * k + ab - 1.0) * (a * a - b * b)
        c3 = (2.0 * k + ab - 2.0) * (2.0 * k + ab - 1.0) * (2.0 * k + ab)
        c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + ab)
        prev, cur = cur, ((c2 + c3 * t) * cur - c4 * prev) / c1
    return cur


def jacobi_p_series(p: JacobiParams, t):
    """P_n^(alpha,beta)(t) as the terminating hypergeometric sum (test route).

    Computed in exact rational arithmetic: the alternating sum cancels
    catastrophically in floating point for moderate degrees when alpha is
    close to -1, and this route exists purely as an independent reference.
    """
    if isinstance(t, (list, tuple)) or hasattr(t, "__len__"):
        return np.array([jacobi_p_series(p, float(ti)) for ti in t])
    a = Fraction(p.alpha)
    b = Fraction(p.beta)
    n = p.n
    x = (1 - Fraction(t)) / 2
    term = Fraction(1)
    acc = Fraction(1)
    for i in range(n):
        term = term * (-n + i) * (n + a + b + 1 + i) / ((a + 1 + i) * (i + 1)) * x
        acc += term
    binom = Fraction(1)
    for i in range(n):
        binom *= (a + n - i) / (i + 1)
    return float(binom * acc)


def gegenbauer_c(a: float, n: int, t):
    """Gegenbauer C_n^(a)(t) through the symmetric-Jacobi conversion.

    The conversion factor degenerates at a = 0, and the weight requires
    a > -1/2; both are rejected.
    """
    if not a > -0.5:
        raise ParameterError(f"Gegenbauer index must exceed -1/2, got {a}")
    if abs(a) < INTEGER_TOL:
        raise ParameterError("Gegenbauer index a = 0 is excluded")
    factor = pochhammer(2.0 * a, n) / pochhammer(a + 0.5, n)
    return factor * jacobi_p(JacobiParams(a - 0.5, a - 0.5, n), t)


def legendre_p_zero(nu: float, mu: float) -> float:
    """Value at the origin of the degree-nu, order-mu Legendre function on the cut.

    Computed as 2^mu sqrt(pi) / (Gamma((nu-mu)/2 + 1) Gamma((1-nu-mu)/2)); a
    pole of either denominator Gamma gives an exact zero.
    """
    d1 = 0.5 * (nu - mu) + 1.0
    d2 = 0.5 * (1.0 - nu - mu)
    try:
        s1 = log_gamma_signed(d1)
        s2 = log_gamma_signed(d2)
    except GammaPoleError:
        return 0.0
    log_abs = mu * math.log(2.0) + 0.5 * math.log(math.pi) - s1.log_abs - s2.log_abs
    return s1.sign * s2.sign * math.exp(log_abs)
