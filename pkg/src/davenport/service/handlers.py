"""One handler per endpoint; the CLI calls these in-process, the app over HTTP.

Handlers take a request model, run the library, and build the response model.
Floats in responses are normalized to 9 significant digits; 3-decimal display
strings round up for upper/heuristic values and down for lower values, so the
displayed figure is always on the safe side of the raw one.
"""

from __future__ import annotations

import math
import os
import random
from concurrent.futures import ThreadPoolExecutor

from .. import counting, gf2, oracle, recursion
from ..errors import ParameterError
from ..ratebounds import RateBoundKind, evaluate
from . import schemas

THREADS_ENV_VAR = "DAVENPORT_THREADS"


def sig9(x: float) -> float:
    """Normalize to 9 significant digits; payload floats all pass through here."""
    return float(f"{x:.9g}")


def ceil3(x: float) -> str:
    return f"{math.ceil(x * 1000.0 - 1e-9) / 1000.0:.3f}"


def floor3(x: float) -> str:
    return f"{math.floor(x * 1000.0 + 1e-9) / 1000.0:.3f}"


def _schedule(name: str, mixed_switch: int) -> recursion.Schedule:
    return recursion.schedule_preset(name, mixed_switch=mixed_switch)


def theorem_table(req: schemas.TheoremTableRequest) -> schemas.TheoremTableResponse:
    table = recursion.coefficient_sequence(_schedule(req.schedule, req.mixed_switch), req.jmax)
    rows = []
    for row in table.rows:
        lower = counting.lower_bound_coefficient(row.j)
        rows.append(
            schemas.TableRow(
                j=row.j,
                lower=sig9(lower),
                lower_display=floor3(lower),
                upper=sig9(row.cumulative),
                upper_display=ceil3(row.cumulative),
            )
        )
    return schemas.TheoremTableResponse(schedule=table.schedule, direction=table.direction, rows=rows)


def bounds_eval(req: schemas.BoundsEvalRequest) -> schemas.BoundsEvalResponse:
    kind = RateBoundKind.parse(req.kind)
    value = evaluate(kind, req.delta)
    return schemas.BoundsEvalResponse(kind=kind.value, delta=req.delta, value=sig9(value))


def solve(req: schemas.SolveRequest) -> schemas.SolveResponse:
    kind = RateBoundKind.parse(req.kind)
    c = recursion.solve_increment(req.p, kind)
    total = req.p + c
    return schemas.SolveResponse(
        kind=kind.value,
        p=req.p,
        increment=sig9(c),
        total=sig9(total),
        total_display=ceil3(total),
        residual=sig9(recursion.increment_residual(req.p, c, kind)),
    )


def heuristic_table(req: schemas.HeuristicRequest) -> schemas.HeuristicResponse:
    table = recursion.coefficient_sequence("gv-heuristic", req.jmax)
    rows = [
        schemas.HeuristicRow(
            j=row.j,
            increment=sig9(row.increment),
            cumulative=sig9(row.cumulative),
            display=ceil3(row.cumulative),
        )
        for row in table.rows
    ]
    return schemas.HeuristicResponse(schedule=table.schedule, rows=rows)


def asymptotic(req: schemas.AsymptoticRequest) -> schemas.AsymptoticResponse:
    report = recursion.asymptotic_profile(req.jmax)
    decades = [
        schemas.AsymptoticDecade(
            j=d.j,
            increment=sig9(d.increment),
            cumulative=sig9(d.cumulative),
            growth_ratio=sig9(d.growth_ratio),
            increment_ratio=sig9(d.increment_ratio),
        )
        for d in report.decades
    ]
    return schemas.AsymptoticResponse(
        j_max=report.j_max,
        max_increment=sig9(report.max_increment),
        decades=decades,
    )


def exact_davenport(req: schemas.ExactDavenportRequest) -> schemas.ExactDavenportResponse:
    result = oracle.davenport_exact(req.rank, req.j)
    return schemas.ExactDavenportResponse(
        r=req.rank, j=req.j, value=result.value, witness=list(result.witness)
    )


def exact_sconst(req: schemas.ExactSconstRequest) -> schemas.ExactSconstResponse:
    result = oracle.bounded_constant_exact(req.rank, req.d)
    return schemas.ExactSconstResponse(
        r=req.rank, d=req.d, value=result.value, witness=list(result.witness)
    )


def exact_decompose(req: schemas.ExactDecomposeRequest) -> schemas.ExactDecomposeResponse:
    seq = oracle.Sequence.of(req.elements, req.rank)
    report = oracle.max_disjoint_zero_sums(seq)
    return schemas.ExactDecomposeResponse(
        r=req.rank,
        elements=list(seq.values),
        max_disjoint=report.max_disjoint,
        witness=[list(part) for part in report.witness],
    )


def counting_ratio(req: schemas.CountingRatioRequest) -> schemas.CountingRatioResponse:
    report = counting.inadmissible_ratio(req.n, req.rank, req.j, req.mode)
    parts = None
    if report.exact_ratio is not None:
        parts = schemas.RatioParts(
            numerator=str(report.exact_ratio.numerator),
            denominator=str(report.exact_ratio.denominator),
        )
    return schemas.CountingRatioResponse(
        n=report.n,
        r=report.r,
        j=report.j,
        mode=report.mode,
        exact_ratio=parts,
        log2_value=sig9(report.log2_value),
        crude_log2=sig9(report.crude_log2),
        admissible_guaranteed=report.admissible_guaranteed,
    )


def counting_lower(req: schemas.CountingLowerRequest) -> schemas.CountingLowerResponse:
    value = counting.lower_bound_exact(req.rank, req.j, mode=req.mode)
    return schemas.CountingLowerResponse(
        r=req.rank,
        j=req.j,
        value=value,
        coefficient=sig9(counting.lower_bound_coefficient(req.j)),
    )


def corollary(req: schemas.CorollaryRequest) -> schemas.CorollaryResponse:
    report = recursion.mixed_group_bound(req.rank, req.n, _schedule(req.schedule, req.mixed_switch))
    return schemas.CorollaryResponse(
        r=report.r,
        n=report.n,
        schedule=report.schedule,
        coefficient=sig9(report.coefficient),
        value=sig9(report.value),
        asymptotic_in_r=report.asymptotic_in_r,
    )


def resolve_threads(explicit: int | None) -> int:
    """Explicit request value wins, then the environment variable, then cpu count."""
    if explicit is not None:
        return max(explicit, 1)
    env = os.environ.get(THREADS_ENV_VAR)
    if env is not None:
        try:
            return max(int(env), 1)
        except ValueError:
            raise ParameterError(f"{THREADS_ENV_VAR} must be an integer, got {env!r}")
    return os.cpu_count() or 1


def _pcm_trial(task: tuple[int, int, int, int]) -> tuple[int, gf2.GF2Matrix, int | float, int | float]:
    trial, r, n, matrix_seed = task
    m = gf2.random_parity_matrix(r, n, matrix_seed)
    return trial, m, gf2.min_distance(m), gf2.min_zero_sum_length(m.columns)


def verify_pcm(req: schemas.VerifyPcmRequest) -> schemas.VerifyPcmResponse:
    """Duality property run: code distance vs zero-sum length on random matrices.

    The task list is drawn up front from the seed, then mapped (optionally on
    a thread pool) and merged in submission order, so the report is identical
    for every thread count.
    """
    rank_cap = min(req.max_rank, req.max_len)
    rng = random.Random(req.seed)
    tasks = []
    for trial in range(req.trials):
        r = rng.randint(1, rank_cap)
        n = rng.randint(r, req.max_len)
        tasks.append((trial, r, n, rng.getrandbits(32)))
    threads = resolve_threads(req.threads)
    if threads == 1:
        results = [_pcm_trial(t) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_pcm_trial, tasks))
    failures = []
    for trial, m, d_code, d_cols in results:
        if d_code != d_cols:
            failures.append(
                schemas.VerifyFailure(
                    trial=trial,
                    r=m.nrows,
                    n=m.ncols,
                    min_distance=None if d_code == gf2.INFINITE_DISTANCE else int(d_code),
                    min_zero_sum=None if d_cols == gf2.INFINITE_DISTANCE else int(d_cols),
                    rows=m.dump_rows(),
                )
            )
    return schemas.VerifyPcmResponse(
        trials=req.trials,
        seed=req.seed,
        max_rank=req.max_rank,
        max_len=req.max_len,
        threads=threads,
        mismatches=len(failures),
        failures=failures,
    )
