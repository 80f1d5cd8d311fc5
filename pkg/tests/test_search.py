"""Annealing search and descent polish: reproducibility and soundness."""

import math
import random

import pytest

from conftest import make_random_graph
from spectra_verify import (
    ContractViolation,
    Graph,
    SearchConfig,
    anneal,
    canonical_form,
    check_graph,
    complete_graph,
    cycle_graph,
    exhaustive_neighborhood_descent,
    gap_objective,
    is_bipartite,
    parse_graph6,
    path_graph,
    polish_result,
)

SQRT3 = math.sqrt(3.0)


def test_gap_objective_examples():
    assert abs(gap_objective(complete_graph(3)) - (4.0 - 2 * SQRT3)) < 1e-10
    assert abs(gap_objective(path_graph(3))) <= 1e-8
    assert gap_objective(Graph.empty(4)) == 0.0


def test_config_validation():
    with pytest.raises(ContractViolation):
        SearchConfig(n=31)
    with pytest.raises(ContractViolation):
        SearchConfig(n=0)
    with pytest.raises(ContractViolation):
        SearchConfig(n=8, iterations=0)
    with pytest.raises(ContractViolation):
        SearchConfig(n=8, decay=1.0)
    with pytest.raises(ContractViolation):
        SearchConfig(n=8, initial_temperature=-0.1)
    with pytest.raises(ContractViolation):
        SearchConfig(n=8, top_k=0)


def test_degenerate_budget_returns_initial_graph():
    config = SearchConfig(n=4, iterations=1, restarts=1, seed=1)
    result = anneal(config)
    assert result.moves_evaluated == 1
    assert len(result.best) == 1
    rec = check_graph(parse_graph6(result.best[0].graph6))
    assert abs(rec.gap - result.best[0].gap) < 1e-12


def test_reproducible_from_seed():
    config = SearchConfig(n=8, iterations=300, restarts=2, seed=42, top_k=5)
    first = anneal(config)
    second = anneal(config)
    assert first == second


def test_different_seeds_explore_differently():
    a = anneal(SearchConfig(n=8, iterations=200, restarts=1, seed=1))
    b = anneal(SearchConfig(n=8, iterations=200, restarts=1, seed=2))
    assert a != b


def test_moves_budget_is_exact():
    config = SearchConfig(n=7, iterations=123, restarts=3, seed=9)
    assert anneal(config).moves_evaluated == 3 * 123


def test_best_list_sound_and_deduplicated():
    config = SearchConfig(n=7, iterations=400, restarts=2, seed=5, top_k=8)
    result = anneal(config)
    assert result.min_gap == result.best[0].gap
    gaps = [e.gap for e in result.best]
    assert gaps == sorted(gaps)
    forms = set()
    for entry in result.best:
        g = parse_graph6(entry.graph6)
        cf = canonical_form(g, max_n=30)
        assert cf not in forms
        forms.add(cf)
        rec = check_graph(g)
        assert abs(rec.gap - entry.gap) <= 1e-9
        assert entry.bipartite == is_bipartite(g)[0]


def test_no_violations_found_at_small_n():
    result = anneal(SearchConfig(n=8, iterations=500, restarts=2, seed=12))
    assert result.min_gap >= -1e-9


def test_descent_from_empty_graph_stops_immediately():
    outcome = exhaustive_neighborhood_descent(Graph.empty(5))
    assert outcome.steps == 0
    assert outcome.gap == 0.0
    assert outcome.graph == Graph.empty(5)


def test_descent_from_k3_reaches_equality_floor():
    outcome = exhaustive_neighborhood_descent(complete_graph(3))
    assert outcome.gap <= 1e-8
    assert outcome.steps >= 1
    assert is_bipartite(outcome.graph)[0]


def test_descent_never_increases_gap():
    rng = random.Random(77)
    for _ in range(5):
        g0 = make_random_graph(rng, 7)
        start = gap_objective(g0)
        outcome = exhaustive_neighborhood_descent(g0)
        assert outcome.gap <= start + 1e-12


def test_descent_size_bound():
    with pytest.raises(ContractViolation):
        exhaustive_neighborhood_descent(Graph.empty(31))


def test_polish_improves_or_keeps_min_gap():
    config = SearchConfig(n=7, iterations=200, restarts=2, seed=3, top_k=4)
    raw = anneal(config)
    polished = polish_result(raw, config)
    assert polished.min_gap <= raw.min_gap + 1e-12
    assert polished.moves_evaluated > raw.moves_evaluated
    gaps = [e.gap for e in polished.best]
    assert gaps == sorted(gaps)


def test_bipartite_start_stays_at_floor():
    outcome = exhaustive_neighborhood_descent(cycle_graph(6))
    assert outcome.gap >= -1e-9
    assert outcome.gap <= 1e-8


def test_solver_error_aborts_restart_but_not_run():
    from spectra_verify import Tolerances

    config = SearchConfig(n=5, iterations=10, restarts=3, seed=4)
    result = anneal(config, Tolerances(max_sweeps=0, recheck_tol=1e-15))
    assert [r for r, _ in result.failed_restarts] == [0, 1, 2]
    assert result.best == []
    assert math.isnan(result.min_gap)
