"""Heuristic counterexample hunting beyond the exhaustive range.

Simulated annealing over single-edge toggles minimizes the gap e_x - e_d
at a fixed vertex count, followed by a deterministic full-neighborhood
descent polish.  Everything is reproducible from the seed: restarts use
sub-seeds derived by hashing (seed, restart index), and the generator is
the Mersenne Twister from the standard library, which is stable across
platforms and Python versions.
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .enumeration import canonical_form
from .errors import (
    CanonicalBudgetError,
    ContractViolation,
    ConvergenceError,
    NegativeEigenvalueError,
)
from .graph6 import parse_graph6, to_graph6
from .graphs import Graph, graph_from_upper_bits, is_bipartite
from .spectral import energy_pair
from .verify import Tolerances

MAX_SEARCH_N = 30
DESCENT_TIE_TOL = 1e-12
# Node budget for canonical dedup of result lists; graphs too symmetric to
# canonicalize within it fall back to their literal graph6 key.
DEDUP_NODE_BUDGET = 2_000_000

_SPECTRAL_ERRORS = (ConvergenceError, NegativeEigenvalueError)


@dataclass(frozen=True)
class SearchConfig:
    """Annealing run parameters; iterations is the per-restart evaluation
    budget, counting the initial state as the first evaluation."""

    n: int
    iterations: int = 2000
    restarts: int = 1
    initial_temperature: float = 0.3
    decay: float = 0.999
    seed: int = 0
    top_k: int = 10

    def __post_init__(self):
        if not 1 <= self.n <= MAX_SEARCH_N:
            raise ContractViolation(f"search supports 1 <= n <= {MAX_SEARCH_N}, got {self.n}")
        if self.iterations < 1:
            raise ContractViolation("iterations must be at least 1")
        if self.restarts < 1:
            raise ContractViolation("restarts must be at least 1")
        if not 0.0 < self.decay < 1.0:
            raise ContractViolation("temperature decay must lie in (0, 1)")
        if self.initial_temperature < 0.0:
            raise ContractViolation("temperature must be non-negative")
        if self.top_k < 1:
            raise ContractViolation("top_k must be at least 1")


@dataclass(frozen=True)
class BestEntry:
    graph6: str
    gap: float
    bipartite: bool


@dataclass
class SearchResult:
    """Deduplicated lowest-gap graphs plus bookkeeping; best is sorted
    ascending by (gap, graph6) and never holds two isomorphic graphs."""

    best: list[BestEntry]
    min_gap: float
    moves_evaluated: int
    failed_restarts: list[tuple[int, str]]

    def to_json_obj(self, config: Optional[SearchConfig] = None) -> dict:
        from .records import json_number

        obj: dict = {}
        if config is not None:
            obj["config"] = {
                "n": config.n,
                "iterations": config.iterations,
                "restarts": config.restarts,
                "initial_temperature": json_number(config.initial_temperature),
                "decay": json_number(config.decay),
                "seed": config.seed,
                "top_k": config.top_k,
            }
        obj["min_gap"] = json_number(self.min_gap)
        obj["best"] = [
            {"graph6": e.graph6, "gap": json_number(e.gap), "bipartite": e.bipartite}
            for e in self.best
        ]
        obj["moves_evaluated"] = self.moves_evaluated
        obj["failed_restarts"] = [
            {"restart": r, "error": msg} for r, msg in self.failed_restarts
        ]
        return obj


def gap_objective(g: Graph, tols: Optional[Tolerances] = None) -> float:
    """The conjecture's objective: e_x - e_d, claimed non-negative everywhere."""
    tols = tols or Tolerances()
    return energy_pair(
        g, tols.jacobi_tol, clamp_rel=tols.clamp_rel, max_sweeps=tols.max_sweeps
    ).gap


def _sub_seed(seed: int, restart: int) -> int:
    digest = hashlib.sha256(f"{seed}:{restart}".encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big")


def anneal(config: SearchConfig, tols: Optional[Tolerances] = None) -> SearchResult:
    """Seeded annealing over edge toggles; byte-reproducible from the config.

    Each restart starts from a uniformly random graph (edge probability
    one half), toggles a uniformly random vertex pair per step, accepts
    improvements always and regressions with probability exp(-delta/T)
    under a geometrically decaying temperature.  A solver error aborts only
    the restart that hit it.
    """
    tols = tols or Tolerances()
    n = config.n
    pairs = list(combinations(range(n), 2))
    npairs = len(pairs)
    pool: dict[str, float] = {}
    moves = 0
    failed: list[tuple[int, str]] = []
    for restart in range(config.restarts):
        rng = random.Random(_sub_seed(config.seed, restart))
        try:
            mask = rng.getrandbits(npairs) if npairs else 0
            g = graph_from_upper_bits(n, [(mask >> t) & 1 for t in range(npairs)])
            gap = gap_objective(g, tols)
            moves += 1
            _offer(pool, to_graph6(g), gap)
            temperature = config.initial_temperature
            for _ in range(config.iterations - 1):
                if npairs == 0:
                    break
                i, j = pairs[rng.randrange(npairs)]
                candidate = g.toggle_edge(i, j)
                cand_gap = gap_objective(candidate, tols)
                moves += 1
                delta = cand_gap - gap
                if delta <= 0.0 or (
                    temperature > 0.0 and rng.random() < math.exp(-delta / temperature)
                ):
                    g, gap = candidate, cand_gap
                    _offer(pool, to_graph6(g), gap)
                temperature *= config.decay
        except _SPECTRAL_ERRORS as err:
            failed.append((restart, str(err)))
    best = _assemble_best(pool, config.top_k)
    min_gap = best[0].gap if best else float("nan")
    return SearchResult(best, min_gap, moves, failed)


def _offer(pool: dict[str, float], g6: str, gap: float) -> None:
    previous = pool.get(g6)
    if previous is None or gap < previous:
        pool[g6] = gap


def _dedup_key(g: Graph):
    try:
        cf = canonical_form(g, max_n=MAX_SEARCH_N, max_nodes=DEDUP_NODE_BUDGET)
        return ("canon", cf.n, cf.bits)
    except CanonicalBudgetError:
        return ("graph6", to_graph6(g))


def _assemble_best(pool: dict[str, float], top_k: int) -> list[BestEntry]:
    best: list[BestEntry] = []
    seen = set()
    for g6, gap in sorted(pool.items(), key=lambda item: (item[1], item[0])):
        g = parse_graph6(g6)
        key = _dedup_key(g)
        if key in seen:
            continue
        seen.add(key)
        best.append(BestEntry(g6, gap, is_bipartite(g)[0]))
        if len(best) == top_k:
            break
    return best


@dataclass(frozen=True)
class DescentResult:
    graph: Graph
    gap: float
    steps: int
    moves_evaluated: int


def exhaustive_neighborhood_descent(
    g0: Graph,
    tols: Optional[Tolerances] = None,
    *,
    tie_tol: float = DESCENT_TIE_TOL,
) -> DescentResult:
    """Greedy descent over all single-toggle neighbors until a local minimum.

    Each step evaluates every vertex pair, moves to the strictly best
    neighbor (ties resolved toward the lexicographically smallest toggled
    pair), and treats improvements within ``tie_tol`` as non-improving so
    termination is guaranteed.
    """
    if g0.n > MAX_SEARCH_N:
        raise ContractViolation(f"descent supports n <= {MAX_SEARCH_N}, got {g0.n}")
    tols = tols or Tolerances()
    pairs = list(combinations(range(g0.n), 2))
    current = g0
    gap = gap_objective(current, tols)
    moves = 1
    steps = 0
    while pairs:
        best_gap: Optional[float] = None
        best_pair: Optional[tuple[int, int]] = None
        for i, j in pairs:
            cand_gap = gap_objective(current.toggle_edge(i, j), tols)
            moves += 1
            if best_gap is None or cand_gap < best_gap:
                best_gap, best_pair = cand_gap, (i, j)
        if best_gap is None or best_gap >= gap - tie_tol:
            break
        current = current.toggle_edge(*best_pair)
        gap = best_gap
        steps += 1
    return DescentResult(current, gap, steps, moves)


def polish_result(result: SearchResult, config: SearchConfig, tols: Optional[Tolerances] = None) -> SearchResult:
    """Descent-polish every retained graph and re-deduplicate the list."""
    tols = tols or Tolerances()
    pool: dict[str, float] = {}
    moves = result.moves_evaluated
    for entry in result.best:
        outcome = exhaustive_neighborhood_descent(parse_graph6(entry.graph6), tols)
        moves += outcome.moves_evaluated
        _offer(pool, to_graph6(outcome.graph), outcome.gap)
    best = _assemble_best(pool, config.top_k)
    min_gap = best[0].gap if best else float("nan")
    return SearchResult(best, min_gap, moves, list(result.failed_restarts))
