"""Pole-aware Gamma machinery.

Gamma, signed log-Gamma, Beta, Pochhammer symbols and real-argument binomials.
Every ratio of Gamma values exposed here is assembled in signed-log space so
that moderate arguments never overflow an intermediate product.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .common import (
    GammaPoleError,
    is_nonpositive_integer,
    nearest_int,
)

__all__ = [
    "PoleAwareValue",
    "SignedLog",
    "gamma",
    "log_gamma_signed",
    "signed_log_gamma_quotient",
    "pochhammer",
    "beta",
    "binomial_real",
    "gamma_ratio_shifted",
    "gamma_limit_ratio",
]


@dataclass(frozen=True)
class PoleAwareValue:
    """A real value plus a flag marking arguments that sit on a Gamma pole."""

    value: float
    is_pole: bool = False


@dataclass(frozen=True)
class SignedLog:
    """Represents sign * exp(log_abs); sign == 0 encodes an exact zero."""

    log_abs: float
    sign: int

    def value(self) -> float:
        if self.sign == 0:
            return 0.0
        return self.sign * math.exp(self.log_abs)


def gamma(x: float) -> PoleAwareValue:
    """Gamma(x); poles are reported as flagged values, never as exceptions."""
    if is_nonpositive_integer(x):
        return PoleAwareValue(math.nan, True)
    try:
        return PoleAwareValue(math.gamma(x), False)
    except OverflowError:
        return PoleAwareValue(math.inf, False)


def _gamma_sign(x: float) -> int:
    # Gamma alternates sign between consecutive nonpositive integers.
    if x > 0.0:
        return 1
    return 1 if math.floor(x) % 2 == 0 else -1


def log_gamma_signed(x: float) -> SignedLog:
    """log|Gamma(x)| together with the sign of Gamma(x).

    Raises GammaPoleError when x is a nonpositive integer.
    """
    if is_nonpositive_integer(x):
        raise GammaPoleError(f"Gamma pole at x = {x!r}")
    return SignedLog(math.lgamma(x), _gamma_sign(x))


def signed_log_gamma_quotient(
    numerators: Iterable[float] = (), denominators: Iterable[float] = ()
) -> SignedLog:
    """Signed log of prod Gamma(numerators) / prod Gamma(denominators).

    A pole in a denominator makes the quotient an exact zero (sign 0); a pole
    in a numerator raises GammaPoleError.
    """
    log_abs = 0.0
    sign = 1
    for x in numerators:
        s = log_gamma_signed(x)
        log_abs += s.log_abs
        sign *= s.sign
    zero = False
    for x in denominators:
        if is_nonpositive_integer(x):
            zero = True
            continue
        s = log_gamma_signed(x)
        log_abs -= s.log_abs
        sign *= s.sign
    if zero:
        return SignedLog(-math.inf, 0)
    return SignedLog(log_abs, sign)


def pochhammer(a: float, k: int) -> float:
    """Rising factorial a (a+1) ... (a+k-1), with the empty product equal to 1."""
    if k < 0 or k != int(k):
        raise ValueError("pochhammer order must be a nonnegative integer")
    out = 1.0
    for i in range(int(k)):
        out *= a + i
    return out


def beta(a: float, b: float) -> PoleAwareValue:
    """Beta(a, b) = Gamma(a) Gamma(b) / Gamma(a+b) via signed-log arithmetic.

    A pole of the numerator not cancelled by the denominator is flagged; a
    denominator pole alone yields an exact zero.
    """
    pa = is_nonpositive_integer(a)
    pb = is_nonpositive_integer(b)
    pab = is_nonpositive_integer(a + b)
    if pa and pb:
        return PoleAwareValue(math.nan, True)
    if pa or pb:
        if not pab:
            return PoleAwareValue(math.nan, True)
        # One numerator pole cancelled against the denominator pole: with
        # a = -m and a+b = -j the limit is (-1)^(m-j) j!/m! Gamma(b).
        m = -nearest_int(a if pa else b)
        j = -nearest_int(a + b)
        other = b if pa else a
        g = log_gamma_signed(other)
        log_abs = math.lgamma(j + 1.0) - math.lgamma(m + 1.0) + g.log_abs
        sign = g.sign * (1 if (m - j) % 2 == 0 else -1)
        return PoleAwareValue(sign * math.exp(log_abs), False)
    if pab:
        return PoleAwareValue(0.0, False)
    q = signed_log_gamma_quotient((a, b), (a + b,))
    return PoleAwareValue(q.value(), False)


def binomial_real(a: float, n: int) -> float:
    """Generalized binomial coefficient a (a-1) ... (a-n+1) / n!.

    Exact (via integer arithmetic) when a is a nonnegative integer.
    """
    if n < 0 or n != int(n):
        raise ValueError("binomial order must be a nonnegative integer")
    n = int(n)
    if a >= -0.5 and abs(a - round(a)) < 1e-9:
        return float(math.comb(nearest_int(a), n))
    num = 1.0
    for i in range(n):
        num *= a - i
    return num / math.factorial(n)


def gamma_ratio_shifted(k: int, m: float) -> float:
    """Regularized value of Gamma(k - m) / Gamma(-m).

    Equals (-1)^k Gamma(1+m) / Gamma(1+m-k) wherever that quotient is finite
    and extends it continuously through the zeros (integer m < k).  The
    functional equation gives exactly (-m)_k, which is what is computed.
    """
    if k < 0 or k != int(k):
        raise ValueError("shift k must be a nonnegative integer")
    return pochhammer(-m, int(k))


def gamma_limit_ratio(n: int) -> float:
    """Limit of Gamma(n+e) Gamma(1-e-n) / Gamma(e) as e -> 0, i.e. (-1)^n."""
    if n < 0 or n != int(n):
        raise ValueError("n must be a nonnegative integer")
    return -1.0 if int(n) % 2 else 1.0
