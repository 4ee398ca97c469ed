"""Asymptotic rate-bound functions for binary codes, as plain evaluators.

Five kinds: the two linear-programming bounds, Elias-Bassalygo, the Hamming
(sphere-packing) bound, and the Gilbert-Varshamov curve used as a heuristic.
Every evaluator maps [0,1] -> [0,1], sends 0 to 1, and is hard-cased to 0 for
delta >= 1/2 (the case-split form, never trusted to the raw formula there).
Absolute accuracy target on the open interval: EVAL_TOLERANCE.
"""

from __future__ import annotations

import enum
import math

from .errors import ParameterError

EVAL_TOLERANCE = 1e-10

MRRW1_GRID_POINTS = 4096
MRRW1_REFINE_WIDTH = 1e-12

_LN2 = math.log(2.0)


class RateBoundKind(str, enum.Enum):
    MRRW1 = "mrrw1"
    MRRW2 = "mrrw2"
    ELIAS_BASSALYGO = "elias-bassalygo"
    HAMMING = "hamming"
    GV_HEURISTIC = "gv-heuristic"

    @property
    def eval_tolerance(self) -> float:
        return EVAL_TOLERANCE

    @classmethod
    def parse(cls, name: str) -> "RateBoundKind":
        low = name.strip().lower()
        aliases = {"eb": cls.ELIAS_BASSALYGO, "gv": cls.GV_HEURISTIC}
        if low in aliases:
            return aliases[low]
        for kind in cls:
            if kind.value == low:
                return kind
        raise ParameterError(
            f"unknown rate-bound kind {name!r}; expected one of "
            f"{', '.join(k.value for k in cls)} (aliases: eb, gv)"
        )


def entropy(u: float) -> float:
    """Binary entropy with the h(0) = h(1) = 0 limit convention."""
    if not 0.0 <= u <= 1.0:
        raise ParameterError(f"entropy argument {u} outside [0, 1]")
    if u == 0.0 or u == 1.0:
        return 0.0
    return (-u * math.log(u) - (1.0 - u) * math.log(1.0 - u)) / _LN2


def root_entropy(u: float) -> float:
    """Entropy at the smaller root of x(1-x) = u/4, i.e. h((1 - sqrt(1-u))/2).

    Arguments a few ulps outside [0,1] are clamped: the inner minimization
    feeds u^2 + 2*delta*u + 2*delta, which equals 1 exactly at the endpoint
    u = 1 - 2*delta but can land at 1 + 2e-16 in floats.
    """
    if not -1e-9 <= u <= 1.0 + 1e-9:
        raise ParameterError(f"root_entropy argument {u} outside [0, 1]")
    u = min(max(u, 0.0), 1.0)
    return entropy((1.0 - math.sqrt(1.0 - u)) / 2.0)


def mrrw1_objective(u: float, delta: float) -> float:
    """The inner function 1 + root_entropy(u^2) - root_entropy(u^2 + 2du + 2d)."""
    return 1.0 + root_entropy(u * u) - root_entropy(u * u + 2.0 * delta * u + 2.0 * delta)


def _golden_min(fn, a: float, b: float, tol: float) -> float:
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc = fn(c)
    fd = fn(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = fn(d)
    return min(fc, fd)


def _evaluate_mrrw1(delta: float) -> float:
    width = 1.0 - 2.0 * delta
    n = MRRW1_GRID_POINTS
    best_i = 0
    best_v = math.inf
    for i in range(n):
        u = width * i / (n - 1)
        v = mrrw1_objective(u, delta)
        if v < best_v:
            best_v = v
            best_i = i
    lo = width * max(best_i - 1, 0) / (n - 1)
    hi = width * min(best_i + 1, n - 1) / (n - 1)
    refined = _golden_min(lambda u: mrrw1_objective(u, delta), lo, hi, MRRW1_REFINE_WIDTH)
    return min(best_v, refined)


def evaluate(kind: RateBoundKind, delta: float) -> float:
    """Rate bound of the given kind at relative distance delta.

    0 -> 1 and anything at or beyond 1/2 -> 0 are exact case splits; in
    between, closed forms, except MRRW1 whose inner minimization over
    u in [0, 1 - 2*delta] runs a 4096-point grid (both endpoints included)
    plus golden-section refinement to width 1e-12.
    """
    if not isinstance(kind, RateBoundKind):
        raise ParameterError(f"kind must be a RateBoundKind, got {kind!r}")
    if not 0.0 <= delta <= 1.0:
        raise ParameterError(f"delta {delta} outside [0, 1]")
    if delta == 0.0:
        return 1.0
    if delta >= 0.5:
        return 0.0
    if kind is RateBoundKind.MRRW1:
        return _evaluate_mrrw1(delta)
    if kind is RateBoundKind.MRRW2:
        return entropy(0.5 - math.sqrt(delta * (1.0 - delta)))
    if kind is RateBoundKind.ELIAS_BASSALYGO:
        return 1.0 - entropy((1.0 - math.sqrt(1.0 - 2.0 * delta)) / 2.0)
    if kind is RateBoundKind.HAMMING:
        return 1.0 - entropy(delta / 2.0)
    return 1.0 - entropy(delta)
