"""Per-graph conjecture verdicts, special-case validators, and campaigns.

The claim under test: for every simple graph the directed incidence energy
never exceeds the undirected one, i.e. gap = e_x - e_d >= 0, with equality
on bipartite graphs.  A campaign streams every isomorphism class in a
vertex range through the checker and aggregates the evidence.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import partial
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator, Optional

from .enumeration import canonical_levels
from .errors import ContractViolation, ConvergenceError, NegativeEigenvalueError
from .graph6 import parse_graph6, to_graph6
from .graphs import (
    Graph,
    adjacency_matrix,
    connected_components,
    is_bipartite,
    is_regular,
)
from .records import json_number
from .spectral import Spectrum, energy_pair, sym_eigenvalues

_SPECTRAL_ERRORS = (ConvergenceError, NegativeEigenvalueError)


@dataclass(frozen=True)
class Tolerances:
    """Every numerical threshold in one place; defaults match the shipped regime.

    A gap below -violation_tol flags a counterexample candidate, which is
    then re-verified with the tightened Jacobi tolerance before being
    reported, so solver noise cannot raise a false alarm.
    """

    jacobi_tol: float = 1e-12
    max_sweeps: int = 50
    clamp_rel: float = 1e-9
    violation_tol: float = 1e-9
    equality_tol: float = 1e-8
    recheck_tol: float = 1e-15
    cross_check_tol: float = 1e-8


class Verdict(str, Enum):
    HOLDS = "HOLDS"
    EQUALITY = "EQUALITY"
    VIOLATION = "VIOLATION"
    SOLVER_FAILURE = "SOLVER_FAILURE"


@dataclass(frozen=True)
class ConjectureRecord:
    """One graph's verdict with the flags needed to slice campaign output."""

    graph6: str
    n: int
    m: int
    bipartite: bool
    connected: bool
    regular_k: Optional[int]
    e_d: float
    e_x: float
    gap: float
    verdict: Verdict
    note: str = ""
    spectra: Optional[tuple[Spectrum, Spectrum]] = field(default=None, compare=False)


@dataclass(frozen=True)
class RegularReformulation:
    """Both sides of the regular-graph restatement plus cross-check deltas.

    For a k-regular graph the two energies can be recomputed from the
    adjacency eigenvalues alone: sum of sqrt(k - lam) must equal e_d and
    sum of sqrt(k + lam) must equal e_x.
    """

    k: int
    adjacency_values: tuple[float, ...]
    lhs: float
    rhs: float
    e_d: float
    e_x: float
    delta_lhs: float
    delta_rhs: float

    def consistent(self, tol: float = 1e-8) -> bool:
        return self.delta_lhs <= tol and self.delta_rhs <= tol


def check_graph(
    g: Graph,
    tols: Optional[Tolerances] = None,
    *,
    graph6_str: Optional[str] = None,
    with_spectra: bool = False,
) -> ConjectureRecord:
    """Classify one graph: HOLDS, EQUALITY, VIOLATION, or SOLVER_FAILURE.

    Deterministic for a fixed graph and tolerance set.  Any candidate
    violation, and any bipartite graph that failed to land on equality, is
    recomputed at the tightened tolerance before the verdict is final; a
    bipartite graph still off equality after that is reported as a solver
    failure because equality is a theorem, not a conjecture.
    """
    tols = tols or Tolerances()
    g6 = graph6_str if graph6_str is not None else (to_graph6(g) if g.n <= 62 else "")
    bipartite = is_bipartite(g)[0]
    connected = connected_components(g)[0] <= 1
    regular_k = is_regular(g)
    try:
        try:
            pair = energy_pair(
                g, tols.jacobi_tol, clamp_rel=tols.clamp_rel, max_sweeps=tols.max_sweeps
            )
        except _SPECTRAL_ERRORS:
            # one retry at the tightened tolerance before giving up
            pair = energy_pair(
                g, tols.recheck_tol, clamp_rel=tols.clamp_rel, max_sweeps=tols.max_sweeps
            )
        suspicious = pair.gap < -tols.violation_tol or (
            bipartite and abs(pair.gap) > tols.equality_tol
        )
        if suspicious:
            pair = energy_pair(
                g, tols.recheck_tol, clamp_rel=tols.clamp_rel, max_sweeps=tols.max_sweeps
            )
    except _SPECTRAL_ERRORS as err:
        nan = float("nan")
        return ConjectureRecord(
            g6, g.n, g.m, bipartite, connected, regular_k,
            nan, nan, nan, Verdict.SOLVER_FAILURE, note=str(err),
        )
    note = ""
    if pair.gap < -tols.violation_tol:
        verdict = Verdict.VIOLATION
    elif abs(pair.gap) <= tols.equality_tol:
        verdict = Verdict.EQUALITY
    else:
        verdict = Verdict.HOLDS
    if bipartite and verdict is not Verdict.EQUALITY:
        verdict = Verdict.SOLVER_FAILURE
        note = f"bipartite graph off equality (gap {pair.gap:.3e}) after tightened re-check"
    return ConjectureRecord(
        g6, g.n, g.m, bipartite, connected, regular_k,
        pair.e_d, pair.e_x, pair.gap, verdict, note=note,
        spectra=(pair.laplacian_spectrum, pair.signless_spectrum) if with_spectra else None,
    )


def check_regular_reformulation(g: Graph, tols: Optional[Tolerances] = None) -> RegularReformulation:
    """Evaluate the regular-graph restatement and compare it to the energies."""
    tols = tols or Tolerances()
    k = is_regular(g)
    if k is None:
        raise ContractViolation("graph is not regular")
    adj_spec = sym_eigenvalues(adjacency_matrix(g), tols.jacobi_tol, tols.max_sweeps)
    # k -/+ lam are the Laplacian and signless-Laplacian eigenvalues, so they
    # get the same zero-snap as the energy path; both Laplacians share one
    # Frobenius norm, sqrt(sum deg^2 + 2m), exact in integers.
    frob = math.sqrt(sum(g.degree(v) ** 2 for v in range(g.n)) + 2 * g.m)
    clamp = tols.clamp_rel * frob
    lhs = sum(math.sqrt(k - lam) for lam in adj_spec.values if k - lam > clamp)
    rhs = sum(math.sqrt(k + lam) for lam in adj_spec.values if k + lam > clamp)
    pair = energy_pair(g, tols.jacobi_tol, clamp_rel=tols.clamp_rel, max_sweeps=tols.max_sweeps)
    return RegularReformulation(
        k, adj_spec.values, lhs, rhs, pair.e_d, pair.e_x,
        abs(lhs - pair.e_d), abs(rhs - pair.e_x),
    )


# -- campaigns -----------------------------------------------------------------

FILTERS: dict[str, Optional[Callable[[Graph], bool]]] = {
    "all": None,
    "connected": lambda g: connected_components(g)[0] <= 1,
    "bipartite": lambda g: is_bipartite(g)[0],
    "regular": lambda g: is_regular(g) is not None,
}


@dataclass
class CampaignReport:
    """Aggregate of one verification run over a vertex range or a stream."""

    n_min: Optional[int]
    n_max: Optional[int]
    filter_name: str
    graphs_checked: int
    equality_count: int
    violations: list[ConjectureRecord]
    solver_failures: list[tuple[str, str]]
    min_gap_nonbipartite: Optional[float]
    min_gap_witness: Optional[str]
    regular_checked: int
    max_regular_delta: Optional[float]
    wall_time_s: float

    @property
    def status(self) -> str:
        # A surviving violation outranks solver failures for reporting.
        if self.violations:
            return "violation"
        if self.solver_failures:
            return "solver_failure"
        return "ok"

    def to_json_obj(self) -> dict:
        from .records import record_json_obj

        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "filter": self.filter_name,
            "graphs_checked": self.graphs_checked,
            "equality_count": self.equality_count,
            "violations": [record_json_obj(r) for r in self.violations],
            "solver_failures": [
                {"graph6": g6, "note": note} for g6, note in self.solver_failures
            ],
            "min_gap_nonbipartite": (
                None if self.min_gap_nonbipartite is None else json_number(self.min_gap_nonbipartite)
            ),
            "min_gap_witness": self.min_gap_witness,
            "regular_checked": self.regular_checked,
            "max_regular_delta": (
                None if self.max_regular_delta is None else json_number(self.max_regular_delta)
            ),
            "status": self.status,
            "wall_time_s": round(self.wall_time_s, 3),
        }


def _campaign_check(g6: str, tols: Tolerances) -> tuple[ConjectureRecord, Optional[float]]:
    """Worker body: full verdict plus the regular cross-check delta if applicable."""
    g = parse_graph6(g6)
    rec = check_graph(g, tols, graph6_str=g6)
    reg_delta: Optional[float] = None
    if rec.regular_k is not None and rec.verdict is not Verdict.SOLVER_FAILURE:
        try:
            ref = check_regular_reformulation(g, tols)
        except _SPECTRAL_ERRORS as err:
            rec = replace(rec, verdict=Verdict.SOLVER_FAILURE, note=str(err))
        else:
            reg_delta = max(ref.delta_lhs, ref.delta_rhs)
            if reg_delta > tols.cross_check_tol:
                rec = replace(
                    rec,
                    verdict=Verdict.SOLVER_FAILURE,
                    note=f"regular reformulation delta {reg_delta:.3e} exceeds tolerance",
                )
    return rec, reg_delta


def run_campaign(
    n_min: int,
    n_max: int,
    *,
    filter_name: str = "all",
    tols: Optional[Tolerances] = None,
    workers: int = 1,
    sink: Optional[Callable[[ConjectureRecord], None]] = None,
    graph6_stream: Optional[Iterable[str]] = None,
    progress: Optional[Callable[[int, int], None]] = None,
) -> CampaignReport:
    """Check every isomorphism class with n_min <= n <= n_max (or an external
    graph6 stream) and aggregate the evidence.

    Records flow to ``sink`` in a deterministic order (by n, then canonical
    bits) regardless of ``workers``, so output files are byte-stable.
    ``progress`` is called as progress(done, current_n).
    """
    tols = tols or Tolerances()
    if filter_name not in FILTERS:
        raise ContractViolation(f"unknown filter {filter_name!r}")
    flt = FILTERS[filter_name]
    if graph6_stream is None and not (1 <= n_min <= n_max):
        raise ContractViolation(f"need 1 <= n_min <= n_max, got {n_min}..{n_max}")

    started = time.perf_counter()
    graphs_checked = 0
    equality_count = 0
    violations: list[ConjectureRecord] = []
    solver_failures: list[tuple[str, str]] = []
    min_gap: Optional[float] = None
    min_gap_witness: Optional[str] = None
    regular_checked = 0
    max_regular_delta: Optional[float] = None
    seen_lo: Optional[int] = None
    seen_hi: Optional[int] = None

    check = partial(_campaign_check, tols=tols)
    pool = Pool(workers) if workers > 1 else None

    def consume(results: Iterator) -> None:
        nonlocal graphs_checked, equality_count, min_gap, min_gap_witness
        nonlocal regular_checked, max_regular_delta, seen_lo, seen_hi
        for rec, reg_delta in results:
            graphs_checked += 1
            if seen_lo is None or rec.n < seen_lo:
                seen_lo = rec.n
            if seen_hi is None or rec.n > seen_hi:
                seen_hi = rec.n
            if rec.verdict is Verdict.EQUALITY:
                equality_count += 1
            elif rec.verdict is Verdict.VIOLATION:
                violations.append(rec)
            elif rec.verdict is Verdict.SOLVER_FAILURE:
                solver_failures.append((rec.graph6, rec.note))
            if not rec.bipartite and not math.isnan(rec.gap):
                if min_gap is None or rec.gap < min_gap:
                    min_gap = rec.gap
                    min_gap_witness = rec.graph6
            if reg_delta is not None:
                regular_checked += 1
                if max_regular_delta is None or reg_delta > max_regular_delta:
                    max_regular_delta = reg_delta
            if sink is not None:
                sink(rec)
            if progress is not None:
                progress(graphs_checked, rec.n)

    def dispatch(tasks: Iterable[str]) -> Iterator:
        if pool is not None:
            return pool.imap(check, tasks, chunksize=256)
        return map(check, tasks)

    try:
        if graph6_stream is not None:
            consume(dispatch(_filtered_stream(graph6_stream, flt)))
        else:
            # Levels are built in the main thread (enumeration may fork its
            # own workers per level); only the flat per-level task stream is
            # handed to the checking pool.
            for k, level_bits in canonical_levels(n_max, workers):
                if k < n_min:
                    continue
                consume(dispatch(_level_tasks(k, level_bits, flt)))
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    if graph6_stream is not None:
        rng_min, rng_max = seen_lo, seen_hi
    else:
        rng_min, rng_max = n_min, n_max
    return CampaignReport(
        rng_min, rng_max, filter_name, graphs_checked, equality_count,
        violations, solver_failures, min_gap, min_gap_witness,
        regular_checked, max_regular_delta, time.perf_counter() - started,
    )


def _filtered_stream(graph6_stream: Iterable[str], flt) -> Iterator[str]:
    for g6 in graph6_stream:
        if flt is None or flt(parse_graph6(g6)):
            yield g6


def _level_tasks(k: int, level_bits: list[bytes], flt) -> Iterator[str]:
    from .graphs import graph_from_upper_bits, unpack_bits

    nbits = k * (k - 1) // 2
    for bits in level_bits:
        g = graph_from_upper_bits(k, unpack_bits(bits, nbits))
        if flt is None or flt(g):
            yield to_graph6(g)
