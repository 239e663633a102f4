"""Integral descriptions and evaluation results shared by closed forms and oracles."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .common import INTEGER_TOL, ParameterError
from .orthopoly import JacobiParams

__all__ = ["IntegralKind", "IntegralSpec", "EvalResult"]


class IntegralKind(str, Enum):
    """Which weighted singular integral is meant.

    FULL_RANGE      integral over (-1, 1) against (z - t)^(-lambda), z > 1
    UPPER_TAIL      integral over (x, 1) against (t - x)^(-lambda)
    ZERO_SINGULAR   integral over (0, 1) against t^(-lambda)
    LOWER_TAIL      integral over (-1, x) against |x - t|^(-lambda)
    GEGENBAUER_ZERO integral over (0, 1) of (1-t^2)^(a-1/2) t^(-lambda) C_n^(a)(t)
    REMARK_WEIGHT   integral over (-1, 1) of (1-t)^alpha (1+t)^(beta-lambda) P_n
    """

    FULL_RANGE = "full_range"
    UPPER_TAIL = "upper_tail"
    ZERO_SINGULAR = "zero_singular"
    LOWER_TAIL = "lower_tail"
    GEGENBAUER_ZERO = "gegenbauer_zero"
    REMARK_WEIGHT = "remark_weight"


@dataclass(frozen=True)
class IntegralSpec:
    """One concrete integral: kind, weight parameters, singularity exponent, free point.

    For GEGENBAUER_ZERO the params carry alpha = beta = a - 1/2, matching the
    weight (1 - t^2)^(a - 1/2); the Gegenbauer index is recovered as alpha + 1/2.
    """

    kind: IntegralKind
    params: JacobiParams
    lam: float
    point: float = math.nan

    @classmethod
    def gegenbauer(cls, a: float, n: int, lam: float) -> "IntegralSpec":
        return cls(IntegralKind.GEGENBAUER_ZERO, JacobiParams(a - 0.5, a - 0.5, n), lam)

    @property
    def gegenbauer_index(self) -> float:
        return self.params.alpha + 0.5

    def validate(self) -> None:
        k = self.kind
        lam = self.lam
        if k is IntegralKind.FULL_RANGE:
            if not 0.0 < lam <= 1.0:
                raise ParameterError(f"lambda must lie in (0, 1] for {k.value}, got {lam}")
            if not self.point > 1.0:
                raise ParameterError(f"z must exceed 1 for {k.value}, got {self.point}")
            return
        if not 0.0 < lam < 1.0:
            raise ParameterError(f"lambda must lie in (0, 1) for {k.value}, got {lam}")
        if k in (IntegralKind.UPPER_TAIL, IntegralKind.LOWER_TAIL):
            if not -1.0 < self.point < 1.0:
                raise ParameterError(f"x must lie in (-1, 1) for {k.value}, got {self.point}")
        elif k is IntegralKind.GEGENBAUER_ZERO:
            if self.params.alpha != self.params.beta:
                raise ParameterError("Gegenbauer weight requires alpha == beta")
            if abs(self.gegenbauer_index) < INTEGER_TOL:
                raise ParameterError("Gegenbauer index a = 0 is excluded")
        elif k is IntegralKind.REMARK_WEIGHT:
            if not self.params.beta - lam > -1.0:
                raise ParameterError(
                    f"beta - lambda must exceed -1, got {self.params.beta - lam}"
                )


@dataclass
class EvalResult:
    """A numeric value, its absolute error estimate and convergence bookkeeping."""

    value: complex | float
    abs_err_estimate: float
    terms_or_panels: int
    converged: bool
