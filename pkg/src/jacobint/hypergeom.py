"""Gauss and generalized hypergeometric series, Appell F1/F3 and Horn H2.

Evaluation strategy for the Gauss function on the real line:

* direct series for |x| <= 0.5,
* the x -> x/(x-1) transformation for x < -0.5,
* the two-term connection formula in powers of (1-x) for x in (0.5, 1) when
  c-a-b is not an integer, falling back to direct summation with the full
  term budget in the integer case (accuracy then degrades to about 1e-8),
* terminating series whenever a top parameter is a nonpositive integer.

Arguments above 1 go through :func:`hyp2f1_continued`, which takes the limit
from the upper half-plane, with (-w)^s = exp(s (ln w - i pi)) for w > 0.

Series summation detects catastrophic cancellation (peak partial sum much
larger than the result) and re-runs the same finite sum in extended or exact
rational arithmetic.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .common import (
    ConvergenceError,
    ParameterError,
    is_near_integer,
    is_nonpositive_integer,
    nearest_int,
)
from .gammacore import pochhammer, signed_log_gamma_quotient

__all__ = [
    "SeriesEval",
    "pfq",
    "hyp2f1",
    "hyp2f1_continued",
    "hyp3f2",
    "regularized_pfq_limit",
    "appell_f1",
    "appell_f1_at_y1",
    "appell_f1_at_x1",
    "appell_f3_zero_balanced",
    "horn_h2",
    "h2_at_minus1",
    "gauss_half",
]

DEFAULT_TOL = 1e-11
MAX_TERMS = 100_000

# Peak-to-sum ratios beyond which a finite sum is repeated in extended
# precision and, beyond the second threshold, in exact rationals.
_RESCUE_LONGDOUBLE = 1e3
_RESCUE_EXACT = 1e9


@dataclass(frozen=True)
class SeriesEval:
    """A summed series value with tail bookkeeping."""

    value: float
    terms_used: int
    tail_estimate: float
    converged: bool


def _fixed_sum(top, bottom, x, steps: int, conv) -> float:
    """Re-sum the first `steps` update steps of a pFq series in another arithmetic."""
    topc = [conv(v) for v in top]
    botc = [conv(v) for v in bottom]
    xc = conv(x)
    term = conv(1)
    acc = conv(1)
    for k in range(steps):
        fac = xc / conv(k + 1)
        for a in topc:
            fac = fac * (a + conv(k))
        for b in botc:
            fac = fac / (b + conv(k))
        term = term * fac
        acc = acc + term
    return float(acc)


def _rescue(value: float, peak: float, top, bottom, x, steps: int) -> float:
    cancel = peak / max(abs(value), 1e-300)
    if cancel > _RESCUE_EXACT:
        return _fixed_sum(top, bottom, x, steps, Fraction)
    if cancel > _RESCUE_LONGDOUBLE:
        return _fixed_sum(top, bottom, x, steps, np.longdouble)
    return value


def pfq(
    top: Sequence[float],
    bottom: Sequence[float],
    x: float,
    rel_tol: float = 1e-10,
    max_terms: int = MAX_TERMS,
) -> SeriesEval:
    """Generalized hypergeometric series sum_k prod(top)_k / prod(bottom)_k x^k / k!.

    Terminating series (a nonpositive-integer top parameter) are summed
    exactly for any x; otherwise the argument must lie inside the convergence
    domain of the series.
    """
    top = [float(v) for v in top]
    bottom = [float(v) for v in bottom]

    stops = [-nearest_int(a) for a in top if is_nonpositive_integer(a)]
    n_stop = min(stops) if stops else None
    for b in bottom:
        if is_nonpositive_integer(b):
            j = -nearest_int(b)
            if n_stop is None or n_stop > j:
                raise ParameterError(
                    f"bottom parameter {b} is a nonpositive integer and the series does not terminate first"
                )
    if x == 0.0:
        return SeriesEval(1.0, 1, 0.0, True)

    if n_stop is not None:
        acc = 1.0
        term = 1.0
        peak = 1.0
        for k in range(n_stop):
            fac = x / (k + 1.0)
            for a in top:
                fac *= a + k
            for b in bottom:
                fac /= b + k
            term *= fac
            acc += term
            peak = max(peak, abs(term), abs(acc))
        value = _rescue(acc, peak, top, bottom, x, n_stop)
        return SeriesEval(value, n_stop + 1, 0.0, True)

    if len(top) == len(bottom) + 1 and abs(x) > 1.0 + 1e-14:
        raise ParameterError(f"series argument {x} lies outside the convergence disc")

    # Asymptotic term ratio: |x| for the balanced p = q+1 case, 0 otherwise.
    rho = min(0.99, max(abs(x), 0.1)) if len(top) == len(bottom) + 1 else 0.5

    acc = 1.0
    term = 1.0
    peak = 1.0
    streak = 0
    for k in range(max_terms):
        fac = x / (k + 1.0)
        for a in top:
            fac *= a + k
        for b in bottom:
            fac /= b + k
        nxt = term * fac
        thresh = rel_tol * (1.0 - rho) * (1.0 + abs(acc)) / 3.0
        if abs(term) <= thresh and abs(nxt) <= thresh:
            streak += 1
            if streak >= 3:
                tail = abs(nxt) / (1.0 - rho)
                value = _rescue(acc, peak, top, bottom, x, k)
                return SeriesEval(value, k + 1, tail, tail <= rel_tol * (1.0 + abs(value)))
        else:
            streak = 0
        term = nxt
        acc += term
        peak = max(peak, abs(term), abs(acc))
    raise ConvergenceError(
        f"hypergeometric series did not converge within {max_terms} terms (x = {x})"
    )


def hyp2f1(
    a: float,
    b: float,
    c: float,
    x: float,
    rel_tol: float = DEFAULT_TOL,
    max_terms: int = MAX_TERMS,
) -> SeriesEval:
    """Gauss 2F1(a, b; c; x) for real x < 1, or any x when the series terminates."""
    if is_nonpositive_integer(a) or is_nonpositive_integer(b):
        return pfq([a, b], [c], x, rel_tol, max_terms)
    if not x < 1.0:
        raise ParameterError("hyp2f1 requires x < 1; use hyp2f1_continued beyond")
    if is_nonpositive_integer(c):
        raise ParameterError(f"bottom parameter c = {c} is a nonpositive integer")
    if abs(x) <= 0.5:
        return pfq([a, b], [c], x, rel_tol, max_terms)
    if x < -0.5:
        inner = hyp2f1(a, c - b, c, x / (x - 1.0), rel_tol, max_terms)
        scale = (1.0 - x) ** (-a)
        return SeriesEval(
            scale * inner.value,
            inner.terms_used,
            abs(scale) * inner.tail_estimate,
            inner.converged,
        )
    s = c - a - b
    if abs(s - round(s)) < 0.05:
        # At integer s the connection formula degenerates, and already near an
        # integer its two terms cancel through near-pole coefficients; direct
        # summation on the full budget is accurate there for x away from 1.
        return pfq([a, b], [c], x, rel_tol, max_terms)
    k1 = signed_log_gamma_quotient((c, s), (c - a, c - b))
    k2 = signed_log_gamma_quotient((c, -s), (a, b))
    f1 = hyp2f1(a, b, a + b - c + 1.0, 1.0 - x, rel_tol, max_terms)
    f2 = hyp2f1(c - a, c - b, s + 1.0, 1.0 - x, rel_tol, max_terms)
    t1 = k1.value() * f1.value
    t2 = k2.value() * (1.0 - x) ** s * f2.value
    value = t1 + t2
    if abs(t1) + abs(t2) > 1e4 * max(abs(value), 1e-300):
        # Cancellation between the connection terms: the direct series with
        # its own cancellation rescue is better conditioned.
        return pfq([a, b], [c], x, rel_tol, max_terms)
    tail = abs(t1) * (f1.tail_estimate / max(abs(f1.value), 1e-300)) + abs(t2) * (
        f2.tail_estimate / max(abs(f2.value), 1e-300)
    )
    return SeriesEval(
        value, f1.terms_used + f2.terms_used, tail, f1.converged and f2.converged
    )


def _continued_generic(a, b, c, w, rel_tol, max_terms) -> complex:
    k1 = signed_log_gamma_quotient((c, b - a), (b, c - a))
    k2 = signed_log_gamma_quotient((c, a - b), (a, c - b))
    inv = 1.0 / w
    f1 = hyp2f1(a, a - c + 1.0, a - b + 1.0, inv, rel_tol, max_terms)
    f2 = hyp2f1(b, b - c + 1.0, b - a + 1.0, inv, rel_tol, max_terms)
    lw = math.log(w)
    p1 = cmath.exp(complex(-a * lw, a * math.pi))
    p2 = cmath.exp(complex(-b * lw, b * math.pi))
    return k1.value() * p1 * f1.value + k2.value() * p2 * f2.value


def hyp2f1_continued(
    a: float,
    b: float,
    c: float,
    w: float,
    rel_tol: float = DEFAULT_TOL,
    max_terms: int = MAX_TERMS,
) -> complex:
    """Principal-branch 2F1(a, b; c; w) for w > 1, limit from the upper half-plane.

    When a - b is an integer the two connection terms degenerate jointly; the
    value is then taken as the symmetric average of b +/- eps evaluations,
    which cancels the linear term and is accurate to roughly 1e-8.
    """
    if not w > 1.0:
        raise ParameterError("hyp2f1_continued requires w > 1")
    if is_nonpositive_integer(a) or is_nonpositive_integer(b):
        return complex(pfq([a, b], [c], w, rel_tol, max_terms).value, 0.0)
    if is_nonpositive_integer(c):
        raise ParameterError(f"bottom parameter c = {c} is a nonpositive integer")
    if is_near_integer(a - b):
        eps = 1e-5
        hi = _continued_generic(a, b + eps, c, w, rel_tol, max_terms)
        lo = _continued_generic(a, b - eps, c, w, rel_tol, max_terms)
        return 0.5 * (hi + lo)
    return _continued_generic(a, b, c, w, rel_tol, max_terms)


def hyp3f2(
    a1: float,
    a2: float,
    a3: float,
    b1: float,
    b2: float,
    x: float,
    rel_tol: float = 1e-10,
    max_terms: int = MAX_TERMS,
) -> SeriesEval:
    """3F2(a1, a2, a3; b1, b2; x) by direct summation."""
    return pfq([a1, a2, a3], [b1, b2], x, rel_tol, max_terms)


def regularized_pfq_limit(
    top: Sequence[float],
    bottom_rest: Sequence[float],
    M: int,
    z: float,
    rel_tol: float = 1e-10,
) -> float:
    """Finite limit of (1/Gamma(-M)) pFq with bottom parameter -M, M a nonnegative integer.

    The pole of the bottom parameter cancels the 1/Gamma(-M) zero and leaves

        z^(M+1) prod (a_i)_{M+1} / (Gamma(M+2) prod (b_j)_{M+1})
            * pFq(a_i + M+1; M+2, b_j + M+1; z).
    """
    if M < 0 or M != int(M):
        raise ParameterError("M must be a nonnegative integer")
    M = int(M)
    top = [float(v) for v in top]
    rest = [float(v) for v in bottom_rest]
    if len(top) != len(rest) + 2:
        raise ParameterError(
            "expected p+1 top parameters and p-1 bottom parameters besides -M"
        )
    coef = z ** (M + 1) / math.factorial(M + 1)
    for a in top:
        coef *= pochhammer(a, M + 1)
    for b in rest:
        pb = pochhammer(b, M + 1)
        if pb == 0.0:
            raise ParameterError(f"bottom parameter {b} collides with the shift")
        coef /= pb
    shifted = pfq(
        [a + M + 1.0 for a in top],
        [M + 2.0] + [b + M + 1.0 for b in rest],
        z,
        rel_tol,
    )
    return coef * shifted.value


def _f1_rectangle(a, b1, b2, c, x, y, half: int) -> float:
    s = np.arange(2 * half, dtype=float)
    grid_a = np.concatenate(([1.0], np.cumprod((a + s) / (c + s))))
    m = np.arange(half, dtype=float)
    row = np.concatenate(([1.0], np.cumprod((b1 + m) * x / (m + 1.0))))
    col = np.concatenate(([1.0], np.cumprod((b2 + m) * y / (m + 1.0))))
    return float(grid_a @ np.convolve(row, col))


def appell_f1(
    a: float,
    b1: float,
    b2: float,
    c: float,
    x: float,
    y: float,
    rel_tol: float = 1e-9,
    max_half: int = 1 << 15,
) -> SeriesEval:
    """Appell F1 double series, summed over growing square truncations.

    The square side doubles until two successive values agree to the
    tolerance; each square is evaluated by regrouping the double sum along
    anti-diagonals (a discrete convolution).
    """
    if not (abs(x) < 1.0 and abs(y) < 1.0):
        raise ParameterError("appell_f1 requires |x| < 1 and |y| < 1")
    if is_nonpositive_integer(c):
        raise ParameterError(f"bottom parameter c = {c} is a nonpositive integer")
    prev = None
    half = 16
    while half <= max_half:
        val = _f1_rectangle(a, b1, b2, c, x, y, half)
        if prev is not None and abs(val - prev) <= rel_tol * (1.0 + abs(val)) / 3.0:
            tail = abs(val - prev)
            return SeriesEval(val, (half + 1) ** 2, tail, True)
        prev = val
        half *= 2
    raise ConvergenceError("Appell F1 double series did not converge")


def appell_f1_at_y1(
    a: float, b1: float, b2: float, c: float, x: float, rel_tol: float = 1e-10
) -> float:
    """Appell F1(a, b1, b2; c; x, 1), requiring c - a - b2 > 0 and |x| < 1.

    Summing the y index first turns every row into a unit-argument Gauss sum,
    which collapses the double series to

        Gamma(c) Gamma(c-a-b2) / (Gamma(c-a) Gamma(c-b2)) * 2F1(a, b1; c-b2; x).
    """
    if not c - a - b2 > 0.0:
        raise ParameterError("appell_f1_at_y1 requires c - a - b2 > 0")
    if not abs(x) < 1.0:
        raise ParameterError("appell_f1_at_y1 requires |x| < 1")
    if is_nonpositive_integer(c):
        raise ParameterError(f"bottom parameter c = {c} is a nonpositive integer")
    coef = signed_log_gamma_quotient((c, c - a - b2), (c - a, c - b2))
    if coef.sign == 0:
        return 0.0
    series = hyp2f1(a, b1, c - b2, x, rel_tol)
    return coef.value() * series.value


def appell_f1_at_x1(
    a: float, b1: float, b2: float, c: float, y: float, rel_tol: float = 1e-10
) -> float:
    """Appell F1(a, b1, b2; c; 1, y), the mirror case with b1 and b2 exchanged."""
    if not c - a - b1 > 0.0:
        raise ParameterError("appell_f1_at_x1 requires c - a - b1 > 0")
    if not abs(y) < 1.0:
        raise ParameterError("appell_f1_at_x1 requires |y| < 1")
    if is_nonpositive_integer(c):
        raise ParameterError(f"bottom parameter c = {c} is a nonpositive integer")
    coef = signed_log_gamma_quotient((c, c - a - b1), (c - a, c - b1))
    if coef.sign == 0:
        return 0.0
    series = hyp2f1(a, b2, c - b1, y, rel_tol)
    return coef.value() * series.value


def appell_f3_zero_balanced(
    a: float, b: float, c: float, d: float, x: float, rel_tol: float = DEFAULT_TOL
) -> float:
    """Zero-balanced Appell F3 at the paired arguments ((1-x)/2, (x-1)/(x+1)).

    With the bottom parameter equal to a+b+c+d the double series collapses to
    ((1+x)/2)^b 2F1(a+b, b+c; a+b+c+d; (1-x)/2).
    """
    if not -1.0 < x < 1.0:
        raise ParameterError("appell_f3_zero_balanced requires -1 < x < 1")
    series = hyp2f1(a + b, b + c, a + b + c + d, 0.5 * (1.0 - x), rel_tol)
    return (0.5 * (1.0 + x)) ** b * series.value


def _h2_rectangle(a0, b1, b2, c1, c2, x, y, half: int, k_stop) -> float:
    kmax = k_stop if k_stop is not None else half
    m = np.arange(half, dtype=float)
    total = 0.0
    g = 1.0  # (b2)_k (c1)_k y^k / k!
    for k in range(kmax + 1):
        if k > 0:
            g *= (b2 + k - 1.0) * (c1 + k - 1.0) * y / k
            if g == 0.0:
                break
        lead = 1.0 / pochhammer(a0 - k, k)  # (a0)_{-k}
        ratios = (a0 + m - k) * (b1 + m) * x / ((c2 + m) * (m + 1.0))
        row = lead * np.concatenate(([1.0], np.cumprod(ratios)))
        total += g * float(row.sum())
    return total


def horn_h2(
    a0: float,
    b1: float,
    b2: float,
    c1: float,
    c2: float,
    x: float,
    y: float,
    rel_tol: float = 1e-9,
    max_half: int = 4096,
) -> SeriesEval:
    """Horn H2 double series sum_{m,k} (a0)_{m-k} (b1)_m (b2)_k (c1)_k / (c2)_m x^m y^k / (m! k!).

    Requires |x| < 1, and either |y| < 1 or a terminating k index (b2 or c1 a
    nonpositive integer).
    """
    if not abs(x) < 1.0:
        raise ParameterError("horn_h2 requires |x| < 1")
    stops = [
        -nearest_int(v) for v in (b2, c1) if is_nonpositive_integer(v)
    ]
    k_stop = min(stops) if stops else None
    if k_stop is None and not abs(y) < 1.0:
        raise ParameterError("horn_h2 requires |y| < 1 unless the y index terminates")
    if is_nonpositive_integer(c2):
        raise ParameterError(f"bottom parameter c2 = {c2} is a nonpositive integer")
    k_reach = k_stop if k_stop is not None else max_half
    if is_near_integer(a0) and 1 <= round(a0) <= k_reach:
        raise ParameterError("(a0)_{m-k} degenerates for positive integer a0 within reach")
    prev = None
    half = 16
    while half <= max_half:
        val = _h2_rectangle(a0, b1, b2, c1, c2, x, y, half, k_stop)
        if prev is not None and abs(val - prev) <= rel_tol * (1.0 + abs(val)) / 3.0:
            return SeriesEval(val, (half + 1) ** 2, abs(val - prev), True)
        prev = val
        half *= 2
    raise ConvergenceError("Horn H2 double series did not converge")


def h2_at_minus1(
    a0: float,
    b1: float,
    b2: float,
    c1: float,
    c2: float,
    x: float,
    rel_tol: float = 1e-10,
) -> float:
    """Horn H2 at y = -1 as the two-term 3F2 combination.

    Valid for b1 - a0 - b2 - c1 + 1 > 0 and 0 <= x < 1.
    """
    cond = b1 - a0 - b2 - c1 + 1.0
    if not cond > 0.0:
        raise ParameterError("h2_at_minus1 requires b1 - a0 - b2 - c1 + 1 > 0")
    if not 0.0 <= x < 1.0:
        raise ParameterError("h2_at_minus1 requires 0 <= x < 1")
    s = 1.0 - a0 - b2 - c1  # exponent of the x power in the second term
    c_first = signed_log_gamma_quotient((1.0 - a0, s), (1.0 - a0 - b2, 1.0 - a0 - c1))
    value = 0.0
    if c_first.sign != 0:
        f_first = hyp3f2(a0 + b2, a0 + c1, b1, a0 + b2 + c1, c2, x, rel_tol)
        value += c_first.value() * f_first.value
    c_second = signed_log_gamma_quotient(
        (1.0 - a0, -s, c2, b1 + s), (b2, c1, b1, c2 + s)
    )
    if c_second.sign != 0:
        if x == 0.0:
            if s > 0.0:
                return value
            raise ParameterError("h2_at_minus1 diverges at x = 0 for this parameter set")
        f_second = hyp3f2(1.0 - b2, 1.0 - c1, b1 + s, 1.0 + s, c2 + s, x, rel_tol)
        value += c_second.value() * x**s * f_second.value
    return value


def gauss_half(a: float, b: float) -> float:
    """Closed value of 2F1(a, 1-a; b; 1/2)."""
    if is_nonpositive_integer(b):
        raise ParameterError(f"bottom parameter b = {b} is a nonpositive integer")
    coef = signed_log_gamma_quotient((b,), (0.5 * (a + b), 0.5 * (1.0 + b - a)))
    if coef.sign == 0:
        return 0.0
    return 2.0 ** (1.0 - b) * math.sqrt(math.pi) * coef.value()
