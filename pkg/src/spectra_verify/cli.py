"""Command-line interface: verification campaigns, single-graph checks,
counterexample search, and the regular-graph cross-check.

Exit codes are contractual: 0 completed with no violation, 1 usage or I/O
error, 2 a violation candidate survived the tightened re-check, 3 a solver
failure occurred on some graph.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import replace
from typing import Optional

from .errors import SpectraVerifyError
from .graph6 import HEADER, parse_graph6
from .records import RecordWriter, fmt_float, record_json_obj
from .search import SearchConfig, anneal, polish_result
from .spectral import Spectrum
from .verify import (
    CampaignReport,
    Tolerances,
    Verdict,
    check_graph,
    check_regular_reformulation,
    run_campaign,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_SOLVER_FAILURE = 3

WORKERS_ENV = "SPECTRA_VERIFY_WORKERS"


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad flags; the contract here says 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="spectra-verify")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="enumerate a vertex range and check every class")
    p_verify.add_argument("--n-min", type=int, default=1)
    p_verify.add_argument("--n-max", type=int, default=8)
    p_verify.add_argument("--filter", choices=["all", "connected", "bipartite", "regular"], default="all")
    p_verify.add_argument("--workers", type=int, default=None, help=f"worker processes (default ${WORKERS_ENV} or 1)")
    p_verify.add_argument("--out", help="per-graph record file (omit to skip records)")
    p_verify.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    p_verify.add_argument("--report", help="campaign report JSON path (default: stdout)")
    p_verify.add_argument("--graph6-in", help="verify this graph6 stream instead of enumerating")
    _add_tolerance_flags(p_verify)

    p_check = sub.add_parser("check", help="check one graph6 string (or a stream on stdin)")
    p_check.add_argument("graph6", nargs="?", help="graph6 string")
    p_check.add_argument("--stdin", action="store_true", help="read one graph6 per line from stdin")
    p_check.add_argument("--spectra", action="store_true", help="include both spectra in the output")
    _add_tolerance_flags(p_check)

    p_search = sub.add_parser("search", help="anneal toward low-gap graphs, then polish")
    p_search.add_argument("--n", type=int, required=True)
    p_search.add_argument("--iters", type=int, default=2000)
    p_search.add_argument("--restarts", type=int, default=1)
    p_search.add_argument("--seed", type=int, default=0)
    p_search.add_argument("--top-k", type=int, default=10)
    p_search.add_argument("--out", help="result JSON path (default: stdout)")
    _add_tolerance_flags(p_search)

    p_regular = sub.add_parser("regular", help="cross-check the regular-graph restatement")
    p_regular.add_argument("--n-min", type=int, default=1)
    p_regular.add_argument("--n-max", type=int, default=8)
    p_regular.add_argument("--workers", type=int, default=None)
    _add_tolerance_flags(p_regular)
    return parser


def _add_tolerance_flags(parser) -> None:
    parser.add_argument("--tol-jacobi", type=float, default=None, help="eigensolver sweep tolerance")
    parser.add_argument("--tol-violation", type=float, default=None, help="gap below -tol flags a violation")
    parser.add_argument("--tol-equality", type=float, default=None, help="|gap| <= tol counts as equality")
    parser.add_argument("--tol-clamp", type=float, default=None, help="relative clamp for tiny negative eigenvalues")
    parser.add_argument("--tol-recheck", type=float, default=None, help="tightened tolerance for re-checks")
    parser.add_argument("--tol-cross", type=float, default=None, help="cross-check tolerance for regular graphs")


def _tolerances(args) -> Tolerances:
    tols = Tolerances()
    overrides = {
        "jacobi_tol": args.tol_jacobi,
        "violation_tol": args.tol_violation,
        "equality_tol": args.tol_equality,
        "clamp_rel": args.tol_clamp,
        "recheck_tol": args.tol_recheck,
        "cross_check_tol": args.tol_cross,
    }
    return replace(tols, **{k: v for k, v in overrides.items() if v is not None})


def _resolve_workers(flag: Optional[int]) -> int:
    if flag is not None:
        return max(1, flag)
    env = os.environ.get(WORKERS_ENV, "")
    if env.strip():
        try:
            return max(1, int(env))
        except ValueError:
            raise SpectraVerifyError(f"bad {WORKERS_ENV} value {env!r}")
    return 1


class _Progress:
    """Single-writer progress line on stderr; active only on a terminal."""

    def __init__(self, stream):
        self.stream = stream
        self.active = hasattr(stream, "isatty") and stream.isatty()
        self.started = time.perf_counter()
        self.last = 0.0
        self.wrote = False

    def __call__(self, done: int, current_n: int) -> None:
        if not self.active:
            return
        now = time.perf_counter()
        if now - self.last < 0.25:
            return
        self.last = now
        rate = done / max(now - self.started, 1e-9)
        self.stream.write(f"\r{done} graphs (n={current_n}, {rate:.0f}/s)")
        self.stream.flush()
        self.wrote = True

    def finish(self) -> None:
        if self.wrote:
            self.stream.write("\n")
            self.stream.flush()


def _report_exit(report: CampaignReport) -> int:
    return {
        "ok": EXIT_OK,
        "violation": EXIT_VIOLATION,
        "solver_failure": EXIT_SOLVER_FAILURE,
    }[report.status]


def _cmd_verify(args) -> int:
    tols = _tolerances(args)
    workers = _resolve_workers(args.workers)
    writer = RecordWriter(args.out, args.format) if args.out else None
    progress = _Progress(sys.stderr)
    stream = None
    handle = None
    if args.graph6_in:
        handle = open(args.graph6_in, "r", encoding="ascii")
        stream = (
            line.strip() for line in handle if line.strip() and line.strip() != HEADER
        )
    try:
        report = run_campaign(
            args.n_min,
            args.n_max,
            filter_name=args.filter,
            tols=tols,
            workers=workers,
            sink=writer.write if writer else None,
            graph6_stream=stream,
            progress=progress,
        )
    finally:
        progress.finish()
        if writer:
            writer.close()
        if handle:
            handle.close()
    payload = json.dumps(report.to_json_obj(), indent=2) + "\n"
    if args.report:
        with open(args.report, "w", encoding="ascii") as f:
            f.write(payload)
    else:
        sys.stdout.write(payload)
    min_gap = (
        "n/a" if report.min_gap_nonbipartite is None else fmt_float(report.min_gap_nonbipartite)
    )
    rng = f"n={report.n_min}..{report.n_max}" if report.n_min is not None else "stream"
    sys.stderr.write(
        f"{rng} filter={report.filter_name}: {report.graphs_checked} graphs, "
        f"{len(report.violations)} violations, {len(report.solver_failures)} solver failures, "
        f"min non-bipartite gap {min_gap} "
        f"({report.min_gap_witness or 'n/a'}) -> {report.status} "
        f"[{report.wall_time_s:.1f}s]\n"
    )
    return _report_exit(report)


def _spectrum_obj(s: Spectrum) -> dict:
    from .records import json_number

    return {
        "values": [json_number(v) for v in s.values],
        "residual": json_number(s.residual),
        "orthogonality_defect": json_number(s.orthogonality_defect),
    }


def _record_obj(rec, with_spectra: bool) -> dict:
    obj = record_json_obj(rec)
    if rec.note:
        obj["note"] = rec.note
    if with_spectra and rec.spectra is not None:
        obj["laplacian_spectrum"] = _spectrum_obj(rec.spectra[0])
        obj["signless_spectrum"] = _spectrum_obj(rec.spectra[1])
    return obj


def _cmd_check(args) -> int:
    tols = _tolerances(args)
    if args.stdin == (args.graph6 is not None):
        raise SpectraVerifyError("pass exactly one of a graph6 string or --stdin")
    worst = EXIT_OK
    if args.stdin:
        for line in sys.stdin:
            line = line.strip()
            if not line or line == HEADER:
                continue
            rec = check_graph(parse_graph6(line), tols, graph6_str=line, with_spectra=args.spectra)
            sys.stdout.write(json.dumps(_record_obj(rec, args.spectra)) + "\n")
            worst = _worst(worst, rec.verdict)
        return worst
    rec = check_graph(parse_graph6(args.graph6), tols, with_spectra=args.spectra)
    sys.stdout.write(json.dumps(_record_obj(rec, args.spectra), indent=2) + "\n")
    return _worst(EXIT_OK, rec.verdict)


def _worst(current: int, verdict: Verdict) -> int:
    if verdict is Verdict.VIOLATION:
        return EXIT_VIOLATION
    if verdict is Verdict.SOLVER_FAILURE and current != EXIT_VIOLATION:
        return EXIT_SOLVER_FAILURE
    return current


def _cmd_search(args) -> int:
    tols = _tolerances(args)
    config = SearchConfig(
        n=args.n,
        iterations=args.iters,
        restarts=args.restarts,
        seed=args.seed,
        top_k=args.top_k,
    )
    started = time.perf_counter()
    result = polish_result(anneal(config, tols), config, tols)
    elapsed = time.perf_counter() - started
    status = EXIT_OK
    for entry in result.best:
        if entry.gap < -tols.violation_tol:
            rec = check_graph(parse_graph6(entry.graph6), tols)
            if rec.verdict is Verdict.VIOLATION:
                status = EXIT_VIOLATION
            elif rec.verdict is Verdict.SOLVER_FAILURE and status == EXIT_OK:
                status = EXIT_SOLVER_FAILURE
    if result.failed_restarts and status == EXIT_OK:
        status = EXIT_SOLVER_FAILURE
    # Wall time goes to stderr, not the payload: output files must be
    # byte-identical across reruns of the same config.
    payload = json.dumps(result.to_json_obj(config), indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="ascii") as f:
            f.write(payload)
    else:
        sys.stdout.write(payload)
    sys.stderr.write(
        f"search n={config.n} seed={config.seed}: min gap "
        f"{fmt_float(result.min_gap)}, {result.moves_evaluated} evaluations "
        f"[{elapsed:.1f}s]\n"
    )
    return status


def _cmd_regular(args) -> int:
    tols = _tolerances(args)
    workers = _resolve_workers(args.workers)
    if not 1 <= args.n_min <= args.n_max:
        raise SpectraVerifyError(f"need 1 <= n-min <= n-max, got {args.n_min}..{args.n_max}")
    from .enumeration import enumerate_graphs
    from .graph6 import to_graph6
    from .graphs import is_regular

    sys.stdout.write("n,graph6,k,lhs,rhs,delta_lhs,delta_rhs\n")
    status = EXIT_OK
    for n in range(args.n_min, args.n_max + 1):
        for g in enumerate_graphs(n, filter=lambda h: is_regular(h) is not None, workers=workers):
            ref = check_regular_reformulation(g, tols)
            sys.stdout.write(
                f"{n},{to_graph6(g)},{ref.k},{fmt_float(ref.lhs)},{fmt_float(ref.rhs)},"
                f"{fmt_float(ref.delta_lhs)},{fmt_float(ref.delta_rhs)}\n"
            )
            if not ref.consistent(tols.cross_check_tol):
                status = EXIT_SOLVER_FAILURE
    return status


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = {
        "verify": _cmd_verify,
        "check": _cmd_check,
        "search": _cmd_search,
        "regular": _cmd_regular,
    }[args.command]
    try:
        return handler(args)
    except SpectraVerifyError as err:
        sys.stderr.write(f"spectra-verify: error: {err}\n")
        return EXIT_USAGE
    except OSError as err:
        sys.stderr.write(f"spectra-verify: i/o error: {err}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
