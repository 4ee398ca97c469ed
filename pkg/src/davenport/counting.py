"""Exact counting machinery for the lower bounds.

A random [n, n-r] binary code fails to give a length-n sequence without j
disjoint zero-sum parts only if it is j-inadmissible; the fraction of those
among all such codes is bounded by an explicit product. While that bound
stays below 1, a suitable code exists and the j-wise constant is at least
n + 1. Everything that must be exact is exact (big ints, Fractions); the
log mode exists for ranges where the exact operands outgrow any point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ComputationError, ParameterError

EXACT_MODE_BIT_LIMIT = 4096

_LN2 = math.log(2.0)


def gaussian_binomial(n: int, k: int) -> int:
    """Number of k-dimensional subspaces of an n-dimensional space over GF(2)."""
    if n < 0 or k < 0 or k > n:
        raise ParameterError(f"need 0 <= k <= n, got n={n}, k={k}")
    numerator = 1
    denominator = 1
    for i in range(k):
        numerator *= (1 << (n - i)) - 1
        denominator *= (1 << (k - i)) - 1
    return numerator // denominator


def subspaces_containing(n: int, k: int, j: int) -> int:
    """Number of k-dimensional subspaces containing a fixed j-dimensional one."""
    if j < 0 or j > k or k > n:
        raise ParameterError(f"need 0 <= j <= k <= n, got n={n}, k={k}, j={j}")
    return gaussian_binomial(n - j, k - j)


@dataclass(frozen=True)
class RatioReport:
    """Bound on the fraction of j-inadmissible [n, n-r] codes.

    exact_ratio is populated only in exact mode; log2_value is the base-2 log
    of the same product in either mode; crude_log2 is the term-wise weaker
    bound n*log2(j+1) - r*j. admissible_guaranteed means the ratio is
    provably below 1, so a j-admissible code of these parameters exists.
    """

    n: int
    r: int
    j: int
    mode: str  # exact | log
    exact_ratio: Fraction | None
    log2_value: float
    crude_log2: float
    admissible_guaranteed: bool

    def as_dict(self) -> dict:
        ratio = None
        if self.exact_ratio is not None:
            ratio = {
                "numerator": str(self.exact_ratio.numerator),
                "denominator": str(self.exact_ratio.denominator),
            }
        return {
            "n": self.n,
            "r": self.r,
            "j": self.j,
            "mode": self.mode,
            "exact_ratio": ratio,
            "log2_value": self.log2_value,
            "crude_log2": self.crude_log2,
            "admissible_guaranteed": self.admissible_guaranteed,
        }


def _validate_ratio_args(n: int, r: int, j: int) -> None:
    if r < 1 or j < 1:
        raise ParameterError(f"need r >= 1 and j >= 1, got r={r}, j={j}")
    if n < r + j:
        raise ParameterError(f"need n >= r + j, got n={n}, r={r}, j={j}")


def _exact_bits_estimate(n: int, r: int, j: int) -> int:
    numerator_bits = int(n * math.log2(j + 1)) + 1
    denominator_bits = 0
    for k in range(n - j + 1, n + 1):
        numerator_bits += k - r
        denominator_bits += k
    return max(numerator_bits, denominator_bits)


def inadmissible_ratio(n: int, r: int, j: int, mode: str = "auto") -> RatioReport:
    """The bound (j+1)^n * prod over the top j dimensions of (2^(k-r)-1)/(2^k-1).

    mode "exact" uses Fractions, "log" sums base-2 logs (absolute error below
    1e-9 times the j+1 terms), "auto" picks exact while the operands stay
    under EXACT_MODE_BIT_LIMIT bits.
    """
    _validate_ratio_args(n, r, j)
    if mode not in ("exact", "log", "auto"):
        raise ParameterError(f"mode must be exact, log or auto, got {mode!r}")
    picked = mode
    if mode == "auto":
        picked = "exact" if _exact_bits_estimate(n, r, j) <= EXACT_MODE_BIT_LIMIT else "log"

    log2_value = n * math.log2(j + 1)
    for k in range(n - j + 1, n + 1):
        log2_value += math.log2((1 << (k - r)) - 1) - math.log2((1 << k) - 1)
    crude_log2 = n * math.log2(j + 1) - r * j

    if picked == "exact":
        numerator = (j + 1) ** n
        denominator = 1
        for k in range(n - j + 1, n + 1):
            numerator *= (1 << (k - r)) - 1
            denominator *= (1 << k) - 1
        exact = Fraction(numerator, denominator)
        return RatioReport(
            n=n,
            r=r,
            j=j,
            mode="exact",
            exact_ratio=exact,
            log2_value=log2_value,
            crude_log2=crude_log2,
            admissible_guaranteed=exact < 1,
        )
    return RatioReport(
        n=n,
        r=r,
        j=j,
        mode="log",
        exact_ratio=None,
        log2_value=log2_value,
        crude_log2=crude_log2,
        admissible_guaranteed=log2_value < 0.0,
    )


def lower_bound_coefficient(j: int) -> float:
    """Asymptotic lower-bound coefficient j * ln 2 / ln(j+1) for the j-wise constant."""
    if j < 1:
        raise ParameterError(f"need j >= 1, got {j}")
    return j * _LN2 / math.log(j + 1)


def lower_bound_exact(r: int, j: int, *, mode: str = "auto") -> int:
    """Largest lower bound the counting argument certifies for D_j(C_2^r).

    Returns max(r + j, 1 + n*) with n* the largest n whose inadmissible ratio
    stays below 1; the ratio grows by roughly a factor j+1 per unit n, so an
    upward scan from n = r + j finds the flip and the step before it is n*.
    The r + j floor always holds (a basis plus j - 1 zeros).
    """
    if r < 1 or j < 1:
        raise ParameterError(f"need r >= 1 and j >= 1, got r={r}, j={j}")
    if j == 1:
        return r + 1
    n = r + j
    if not inadmissible_ratio(n, r, j, mode).admissible_guaranteed:
        return r + j
    scan_cap = 4 * j * r + 16
    while True:
        n += 1
        if n > scan_cap:
            raise ComputationError(
                f"guarantee flag never flipped by n={n}; ratio growth assumption violated"
            )
        if not inadmissible_ratio(n, r, j, mode).admissible_guaranteed:
            return 1 + (n - 1)
