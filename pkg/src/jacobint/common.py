"""Shared tolerances and exception types."""
from __future__ import annotations

# Parameters arrive from user input and randomized sweeps; anything this close
# to an integer is treated as one so that pole handling cannot be skipped by
# rounding noise.
INTEGER_TOL = 1e-9


class ParameterError(ValueError):
    """A precondition on the mathematical parameters is violated."""


class GammaPoleError(ParameterError):
    """A Gamma argument sits on a nonpositive integer where a finite value is required."""


class ConvergenceError(RuntimeError):
    """An iterative evaluation exhausted its budget before reaching the tolerance."""


def nearest_int(x: float) -> int:
    return int(round(x))


def is_near_integer(x: float, tol: float = INTEGER_TOL) -> bool:
    return abs(x - round(x)) < tol


def is_nonpositive_integer(x: float, tol: float = INTEGER_TOL) -> bool:
    return x < 0.5 and is_near_integer(x, tol)
