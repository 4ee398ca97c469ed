"""Command-line front end.

Thin client over the service handlers, run in-process: no network is involved
even though the same handlers also back the HTTP app. Output is one JSON
record per invocation (or TSV with a header row for the table commands);
errors go to stderr with exit code 2 for bad arguments and 3 for computations
that could not finish.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence as ArgSeq

import pydantic

from . import __version__
from .errors import ComputationError, ParameterError
from .service import handlers, schemas


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="davenport",
        description="Bounds and exact values for j-wise Davenport constants of C_2^r.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="coefficient tables")
    table_sub = table.add_subparsers(dest="subcommand", required=True)
    theorem1 = table_sub.add_parser(
        "theorem1", help="lower and upper bound coefficient columns per j"
    )
    theorem1.add_argument("--jmax", type=int, required=True)
    theorem1.add_argument("--schedule", default="mrrw1")
    theorem1.add_argument("--mixed-switch", dest="mixed_switch", type=int, default=5)
    theorem1.add_argument("--format", choices=("json", "tsv"), default="json")

    bounds = sub.add_parser("bounds", help="rate-bound evaluators")
    bounds_sub = bounds.add_subparsers(dest="subcommand", required=True)
    bounds_eval = bounds_sub.add_parser("eval", help="evaluate one kind at one delta")
    bounds_eval.add_argument("--kind", required=True)
    bounds_eval.add_argument("--delta", type=float, required=True)

    solve = sub.add_parser("solve", help="one increment-equation solve")
    solve.add_argument("--p", type=float, required=True)
    solve.add_argument("--kind", required=True)

    heuristic = sub.add_parser("heuristic", help="GV-heuristic coefficient table")
    heuristic.add_argument("--jmax", type=int, required=True)
    heuristic.add_argument("--format", choices=("json", "tsv"), default="json")

    asymptotic = sub.add_parser("asymptotic", help="Hamming-sequence decade diagnostics")
    asymptotic.add_argument("--jmax", type=int, required=True)
    asymptotic.add_argument("--format", choices=("json", "tsv"), default="json")

    exact = sub.add_parser("exact", help="brute-force oracles")
    exact_sub = exact.add_subparsers(dest="subcommand", required=True)
    exact_davenport = exact_sub.add_parser("davenport", help="exact j-wise constant")
    exact_davenport.add_argument("--rank", type=int, required=True)
    exact_davenport.add_argument("--j", type=int, required=True)
    exact_sconst = exact_sub.add_parser("sconst", help="exact bounded-size constant")
    exact_sconst.add_argument("--rank", type=int, required=True)
    exact_sconst.add_argument("--d", type=int, required=True)
    exact_decompose = exact_sub.add_parser("decompose", help="max disjoint zero-sum parts")
    exact_decompose.add_argument("--rank", type=int, required=True)
    exact_decompose.add_argument("--elements", required=True, help="comma-separated bit patterns")

    counting = sub.add_parser("counting", help="counting lower bounds")
    counting_sub = counting.add_subparsers(dest="subcommand", required=True)
    counting_ratio = counting_sub.add_parser("ratio", help="inadmissible-code ratio report")
    counting_ratio.add_argument("--n", type=int, required=True)
    counting_ratio.add_argument("--rank", type=int, required=True)
    counting_ratio.add_argument("--j", type=int, required=True)
    counting_ratio.add_argument("--mode", choices=("exact", "log", "auto"), default="auto")
    counting_lower = counting_sub.add_parser("lower", help="exact finite-rank lower bound")
    counting_lower.add_argument("--rank", type=int, required=True)
    counting_lower.add_argument("--j", type=int, required=True)
    counting_lower.add_argument("--mode", choices=("exact", "log", "auto"), default="auto")

    corollary = sub.add_parser("corollary", help="bound for one larger cyclic factor")
    corollary.add_argument("--rank", type=int, required=True)
    corollary.add_argument("--n", type=int, required=True)
    corollary.add_argument("--schedule", default="mrrw1")
    corollary.add_argument("--mixed-switch", dest="mixed_switch", type=int, default=5)

    verify = sub.add_parser("verify", help="property-suite runs")
    verify_pcm = verify.add_subparsers(dest="subcommand", required=True).add_parser(
        "pcm", help="code distance vs zero-sum duality on random matrices"
    )
    verify_pcm.add_argument("--trials", type=int, required=True)
    verify_pcm.add_argument("--seed", type=int, default=0)
    verify_pcm.add_argument("--max-rank", dest="max_rank", type=int, default=6)
    verify_pcm.add_argument("--max-len", dest="max_len", type=int, default=12)
    verify_pcm.add_argument("--threads", type=int, default=None)

    return parser


def _record(command: str, parameters: dict, result: dict, provenance: str) -> dict:
    return {
        "command": command,
        "parameters": parameters,
        "result": result,
        "provenance": provenance,
        "version": __version__,
    }


def _emit_json(record: dict) -> None:
    sys.stdout.write(json.dumps(record, indent=2) + "\n")


def _emit_tsv(header: list[str], rows: list[list[str]]) -> None:
    lines = ["\t".join(header)]
    lines.extend("\t".join(row) for row in rows)
    sys.stdout.write("\n".join(lines) + "\n")


def _fmt(value: object) -> str:
    if isinstance(value, float):
        return f"{value:.9g}"
    return str(value)


def _parse_elements(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ParameterError(f"elements must be a comma-separated integer list, got {text!r}")


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "table":
        req = schemas.TheoremTableRequest(
            jmax=args.jmax, schedule=args.schedule, mixed_switch=args.mixed_switch
        )
        resp = handlers.theorem_table(req)
        if args.format == "tsv":
            _emit_tsv(
                ["j", "lower", "lower_display", "upper", "upper_display"],
                [
                    [_fmt(r.j), _fmt(r.lower), r.lower_display, _fmt(r.upper), r.upper_display]
                    for r in resp.rows
                ],
            )
        else:
            _emit_json(
                _record(
                    "table theorem1",
                    req.model_dump(),
                    resp.model_dump(),
                    f"schedule={resp.schedule}",
                )
            )
        return 0

    if args.command == "bounds":
        req = schemas.BoundsEvalRequest(kind=args.kind, delta=args.delta)
        resp = handlers.bounds_eval(req)
        _emit_json(_record("bounds eval", req.model_dump(), resp.model_dump(), f"kind={resp.kind}"))
        return 0

    if args.command == "solve":
        req = schemas.SolveRequest(p=args.p, kind=args.kind)
        resp = handlers.solve(req)
        _emit_json(_record("solve", req.model_dump(), resp.model_dump(), f"kind={resp.kind}"))
        return 0

    if args.command == "heuristic":
        req = schemas.HeuristicRequest(jmax=args.jmax)
        resp = handlers.heuristic_table(req)
        if args.format == "tsv":
            _emit_tsv(
                ["j", "increment", "cumulative", "display"],
                [
                    [_fmt(r.j), _fmt(r.increment), _fmt(r.cumulative), r.display]
                    for r in resp.rows
                ],
            )
        else:
            _emit_json(
                _record("heuristic", req.model_dump(), resp.model_dump(), "schedule=gv-heuristic")
            )
        return 0

    if args.command == "asymptotic":
        req = schemas.AsymptoticRequest(jmax=args.jmax)
        resp = handlers.asymptotic(req)
        if args.format == "tsv":
            _emit_tsv(
                ["j", "increment", "cumulative", "growth_ratio", "increment_ratio"],
                [
                    [
                        _fmt(d.j),
                        _fmt(d.increment),
                        _fmt(d.cumulative),
                        _fmt(d.growth_ratio),
                        _fmt(d.increment_ratio),
                    ]
                    for d in resp.decades
                ],
            )
        else:
            _emit_json(
                _record("asymptotic", req.model_dump(), resp.model_dump(), "schedule=hamming")
            )
        return 0

    if args.command == "exact":
        if args.subcommand == "davenport":
            dav_req = schemas.ExactDavenportRequest(rank=args.rank, j=args.j)
            dav_resp = handlers.exact_davenport(dav_req)
            _emit_json(
                _record(
                    "exact davenport", dav_req.model_dump(), dav_resp.model_dump(),
                    "search=exhaustive",
                )
            )
            return 0
        if args.subcommand == "sconst":
            s_req = schemas.ExactSconstRequest(rank=args.rank, d=args.d)
            s_resp = handlers.exact_sconst(s_req)
            _emit_json(
                _record("exact sconst", s_req.model_dump(), s_resp.model_dump(), "search=exhaustive")
            )
            return 0
        dec_req = schemas.ExactDecomposeRequest(
            rank=args.rank, elements=_parse_elements(args.elements)
        )
        dec_resp = handlers.exact_decompose(dec_req)
        _emit_json(
            _record(
                "exact decompose", dec_req.model_dump(), dec_resp.model_dump(), "search=exhaustive"
            )
        )
        return 0

    if args.command == "counting":
        if args.subcommand == "ratio":
            ratio_req = schemas.CountingRatioRequest(
                n=args.n, rank=args.rank, j=args.j, mode=args.mode
            )
            ratio_resp = handlers.counting_ratio(ratio_req)
            _emit_json(
                _record(
                    "counting ratio", ratio_req.model_dump(), ratio_resp.model_dump(),
                    f"mode={ratio_resp.mode}",
                )
            )
            return 0
        lower_req = schemas.CountingLowerRequest(rank=args.rank, j=args.j, mode=args.mode)
        lower_resp = handlers.counting_lower(lower_req)
        _emit_json(
            _record(
                "counting lower", lower_req.model_dump(), lower_resp.model_dump(),
                f"mode={lower_req.mode}",
            )
        )
        return 0

    if args.command == "corollary":
        req = schemas.CorollaryRequest(
            rank=args.rank, n=args.n, schedule=args.schedule, mixed_switch=args.mixed_switch
        )
        resp = handlers.corollary(req)
        print(
            "note: the coefficient is asymptotic in the rank; small-rank values are not certified",
            file=sys.stderr,
        )
        _emit_json(
            _record("corollary", req.model_dump(), resp.model_dump(), f"schedule={resp.schedule}")
        )
        return 0

    # verify pcm
    req = schemas.VerifyPcmRequest(
        trials=args.trials,
        seed=args.seed,
        max_rank=args.max_rank,
        max_len=args.max_len,
        threads=args.threads,
    )
    resp = handlers.verify_pcm(req)
    for failure in resp.failures:
        print(
            f"mismatch on trial {failure.trial}: distance {failure.min_distance} "
            f"vs zero-sum {failure.min_zero_sum} for matrix:",
            file=sys.stderr,
        )
        for row in failure.rows:
            print(f"  {row}", file=sys.stderr)
    _emit_json(
        _record(
            "verify pcm", req.model_dump(), resp.model_dump(),
            f"seed={resp.seed};threads={resp.threads}",
        )
    )
    return 0


def main(argv: ArgSeq[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except pydantic.ValidationError as exc:
        print(f"argument error: {exc}", file=sys.stderr)
        return 2
    except ParameterError as exc:
        print(f"argument error: {exc}", file=sys.stderr)
        return 2
    except ComputationError as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
