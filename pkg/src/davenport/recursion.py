"""Iterating the increment equation into coefficient tables.

Each step solves for the c > 0 with (p+c-1)/(p+c) > f(c/(p+c)) at the
crossing point, where p is the running cumulative coefficient and f a rate
bound; the cumulative sums are asymptotic upper-bound coefficients for the
j-wise Davenport constants divided by the group rank. Which rate bound
drives which step is a Schedule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import BracketError, ComputationError, ParameterError
from .ratebounds import RateBoundKind, evaluate

RESIDUAL_TOLERANCE = 1e-9
BISECTION_WIDTH = 1e-12
MAX_BRACKET_DOUBLINGS = 60

DEFAULT_MIXED_SWITCH = 5

SCHEDULE_NAMES = ("mrrw1", "mixed-f2f3", "hamming", "gv-heuristic")

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class Schedule:
    """Rate-bound kinds per recursion step, as (first_j, last_j, kind) segments.

    Segments are contiguous from j = 2; the last one is open-ended
    (last_j None). Row 1 is always the fixed base row and needs no kind.
    """

    name: str
    segments: tuple[tuple[int, int | None, RateBoundKind], ...]

    def __post_init__(self) -> None:
        if not self.segments:
            raise ParameterError("schedule needs at least one segment")
        expected = 2
        for idx, (start, end, kind) in enumerate(self.segments):
            if not isinstance(kind, RateBoundKind):
                raise ParameterError(f"segment kind {kind!r} is not a RateBoundKind")
            if start != expected:
                raise ParameterError(
                    f"segments must be contiguous from j=2; expected start {expected}, got {start}"
                )
            last = idx == len(self.segments) - 1
            if end is None:
                if not last:
                    raise ParameterError("only the last segment may be open-ended")
            else:
                if end < start:
                    raise ParameterError(f"segment [{start}, {end}] is empty")
                expected = end + 1
        if self.segments[-1][1] is not None:
            raise ParameterError("the last segment must be open-ended")

    @property
    def direction(self) -> str:
        return "heuristic" if self.name == "gv-heuristic" else "upper"

    def kind_for(self, j: int) -> RateBoundKind:
        if j < 2:
            raise ParameterError(f"schedule kinds start at j=2, got {j}")
        for start, end, kind in self.segments:
            if j >= start and (end is None or j <= end):
                return kind
        raise AssertionError("open-ended final segment guarantees coverage")


def schedule_preset(name: str, *, mixed_switch: int = DEFAULT_MIXED_SWITCH) -> Schedule:
    """Named schedules; mixed_switch moves the mixed preset's switch point."""
    low = name.strip().lower()
    if low == "mrrw1":
        return Schedule("mrrw1", ((2, None, RateBoundKind.MRRW1),))
    if low == "mixed-f2f3":
        if mixed_switch < 3:
            raise ParameterError(f"mixed switch must be >= 3, got {mixed_switch}")
        return Schedule(
            "mixed-f2f3",
            (
                (2, mixed_switch - 1, RateBoundKind.MRRW2),
                (mixed_switch, None, RateBoundKind.ELIAS_BASSALYGO),
            ),
        )
    if low == "hamming":
        return Schedule("hamming", ((2, None, RateBoundKind.HAMMING),))
    if low == "gv-heuristic":
        return Schedule("gv-heuristic", ((2, None, RateBoundKind.GV_HEURISTIC),))
    raise ParameterError(
        f"unknown schedule {name!r}; expected one of {', '.join(SCHEDULE_NAMES)}"
    )


def _gap(p: float, t: float, kind: RateBoundKind) -> float:
    return (1.0 - 1.0 / t) - evaluate(kind, (t - p) / t)


def solve_increment(
    p: float,
    kind: RateBoundKind,
    *,
    residual_tolerance: float = RESIDUAL_TOLERANCE,
) -> float:
    """The increment c: smallest value with (p+c-1)/(p+c) > f(c/(p+c)).

    Bisection on t = p + c. The left side is strictly increasing in t, the
    right side non-increasing, and the gap is negative at t = p (f(0) = 1),
    so the crossing is unique; the initial bracket [p, p+2] is doubled if the
    evaluator does not vanish soon enough. Returns the verified-positive
    bracket endpoint, so the strict inequality holds at c as returned (and
    still at c + 1e-9 by monotonicity).
    """
    if p < 1.0:
        raise ParameterError(f"need p >= 1, got {p}")
    lo = p
    hi = p + 2.0
    doublings = 0
    while _gap(p, hi, kind) <= 0.0:
        hi = p + 2.0 * (hi - p)
        doublings += 1
        if doublings > MAX_BRACKET_DOUBLINGS:
            raise BracketError(
                f"no sign change for kind {kind.value} from p={p}; evaluator does not vanish"
            )
    while hi - lo > BISECTION_WIDTH:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # float spacing plateau at large p
        if _gap(p, mid, kind) > 0.0:
            hi = mid
        else:
            lo = mid
    c = hi - p
    residual = abs(_gap(p, p + c, kind))
    if residual > residual_tolerance:
        raise ComputationError(
            f"increment residual {residual:.3e} over tolerance {residual_tolerance:.1e} "
            f"for kind {kind.value} at p={p}"
        )
    return c


def increment_residual(p: float, c: float, kind: RateBoundKind) -> float:
    """How far (p, c) is from satisfying the defining equation exactly."""
    return abs(_gap(p, p + c, kind))


@dataclass(frozen=True)
class CoefficientRow:
    j: int
    increment: float
    cumulative: float
    residual: float
    rate_kind: str  # RateBoundKind value; "base" for the fixed first row

    def as_dict(self) -> dict:
        return {
            "j": self.j,
            "increment": self.increment,
            "cumulative": self.cumulative,
            "residual": self.residual,
            "rate_kind": self.rate_kind,
        }


@dataclass(frozen=True)
class CoefficientTable:
    schedule: str
    direction: str  # upper | heuristic
    rows: tuple[CoefficientRow, ...] = field(default=())

    def cumulative(self, j: int) -> float:
        for row in self.rows:
            if row.j == j:
                return row.cumulative
        raise ParameterError(f"no row for j={j} in table up to {len(self.rows)}")


def coefficient_sequence(schedule: Schedule | str, j_max: int) -> CoefficientTable:
    """Rows 1..j_max: row 1 is (1, 1); row j adds solve_increment at the running sum."""
    if isinstance(schedule, str):
        schedule = schedule_preset(schedule)
    if j_max < 1:
        raise ParameterError(f"need j_max >= 1, got {j_max}")
    rows = [CoefficientRow(j=1, increment=1.0, cumulative=1.0, residual=0.0, rate_kind="base")]
    cumulative = 1.0
    for j in range(2, j_max + 1):
        kind = schedule.kind_for(j)
        c = solve_increment(cumulative, kind)
        rows.append(
            CoefficientRow(
                j=j,
                increment=c,
                cumulative=cumulative + c,
                residual=increment_residual(cumulative, c, kind),
                rate_kind=kind.value,
            )
        )
        cumulative += c
    return CoefficientTable(schedule.name, schedule.direction, tuple(rows))


@dataclass(frozen=True)
class ProfileDecade:
    """Diagnostics at j = 10^k for the Hamming-driven sequence."""

    j: int
    increment: float
    cumulative: float
    growth_ratio: float  # cumulative * ln(j) / j
    increment_ratio: float  # next increment * ln(cumulative) / (2 ln 2)

    def as_dict(self) -> dict:
        return {
            "j": self.j,
            "increment": self.increment,
            "cumulative": self.cumulative,
            "growth_ratio": self.growth_ratio,
            "increment_ratio": self.increment_ratio,
        }


@dataclass(frozen=True)
class ProfileReport:
    j_max: int
    decades: tuple[ProfileDecade, ...]
    max_increment: float

    def as_dict(self) -> dict:
        return {
            "j_max": self.j_max,
            "decades": [d.as_dict() for d in self.decades],
            "max_increment": self.max_increment,
        }


def asymptotic_profile(j_max: int) -> ProfileReport:
    """Hamming-schedule run keeping only running sums, with per-decade diagnostics.

    growth_ratio tracks how the cumulative sum compares against j / ln(j);
    increment_ratio compares the next increment against 2 ln 2 / ln(cumulative).
    """
    if j_max < 10:
        raise ParameterError(f"need j_max >= 10 for at least one decade, got {j_max}")
    kind = RateBoundKind.HAMMING
    cumulative = 1.0
    max_increment = 1.0  # fixed first row
    decades: list[ProfileDecade] = []
    pending: tuple[int, float, float] | None = None
    next_decade = 10
    for j in range(2, j_max + 1):
        c = solve_increment(cumulative, kind)
        if pending is not None:
            pj, pv, pc = pending
            decades.append(
                ProfileDecade(
                    j=pj,
                    increment=pv,
                    cumulative=pc,
                    growth_ratio=pc * math.log(pj) / pj,
                    increment_ratio=c * math.log(pc) / (2.0 * _LN2),
                )
            )
            pending = None
        cumulative += c
        if c > max_increment:
            max_increment = c
        if j == next_decade:
            pending = (j, c, cumulative)
            next_decade *= 10
    if pending is not None:
        c_next = solve_increment(cumulative, kind)
        pj, pv, pc = pending
        decades.append(
            ProfileDecade(
                j=pj,
                increment=pv,
                cumulative=pc,
                growth_ratio=pc * math.log(pj) / pj,
                increment_ratio=c_next * math.log(pc) / (2.0 * _LN2),
            )
        )
    return ProfileReport(j_max=j_max, decades=tuple(decades), max_increment=max_increment)


@dataclass(frozen=True)
class GroupBoundReport:
    """Upper bound coefficient(n) * r for the Davenport constant of a group
    C_2^(r-1) + C_2n, valid asymptotically in r; the flag is part of the value."""

    r: int
    n: int
    schedule: str
    coefficient: float
    value: float
    asymptotic_in_r: bool

    def as_dict(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "schedule": self.schedule,
            "coefficient": self.coefficient,
            "value": self.value,
            "asymptotic_in_r": self.asymptotic_in_r,
        }


def mixed_group_bound(r: int, n: int, schedule: Schedule | str) -> GroupBoundReport:
    """Cumulative coefficient at j = n under the schedule, scaled by the rank r."""
    if r < 1:
        raise ParameterError(f"need r >= 1, got {r}")
    if n < 1:
        raise ParameterError(f"need n >= 1, got {n}")
    table = coefficient_sequence(schedule, n)
    coefficient = table.rows[-1].cumulative
    return GroupBoundReport(
        r=r,
        n=n,
        schedule=table.schedule,
        coefficient=coefficient,
        value=coefficient * r,
        asymptotic_in_r=True,
    )
