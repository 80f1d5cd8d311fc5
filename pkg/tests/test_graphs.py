"""Graph structure, predicates, and matrix constructors."""

import random

import numpy as np
import pytest

from conftest import make_random_graph
from spectra_verify import (
    ContractViolation,
    Graph,
    Orientation,
    adjacency_matrix,
    complete_graph,
    connected_components,
    cycle_graph,
    directed_incidence_matrix,
    incidence_matrix,
    is_bipartite,
    is_regular,
    laplacian,
    path_graph,
    signless_laplacian,
)


def test_degree_examples():
    assert complete_graph(3).degree(0) == 2
    assert Graph.empty(4).degree(2) == 0
    assert path_graph(3).degree(1) == 2


def test_degree_out_of_range():
    with pytest.raises(ContractViolation):
        complete_graph(3).degree(3)
    with pytest.raises(ContractViolation):
        complete_graph(3).degree(-1)


def test_graph_rejects_self_loop_and_bad_edges():
    with pytest.raises(ContractViolation):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ContractViolation):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ContractViolation):
        Graph(2, (2, 0))  # asymmetric adjacency


def test_graph_is_immutable_and_hashable():
    g = path_graph(4)
    with pytest.raises(AttributeError):
        g.n = 5
    assert g == Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert len({g, complete_graph(4)}) == 2


def test_edge_count_is_half_degree_sum():
    rng = random.Random(11)
    for _ in range(50):
        g = make_random_graph(rng, rng.randrange(0, 10))
        assert 2 * g.m == sum(g.degree(v) for v in range(g.n))


def test_edges_are_lexicographic():
    g = Graph.from_edges(4, [(2, 3), (0, 2), (0, 1)])
    assert g.edges() == [(0, 1), (0, 2), (2, 3)]


def test_adjacency_matrix_examples():
    assert adjacency_matrix(complete_graph(2)).tolist() == [[0, 1], [1, 0]]
    assert adjacency_matrix(Graph.empty(3)).tolist() == [[0] * 3] * 3
    a3 = adjacency_matrix(complete_graph(3))
    assert a3.tolist() == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]


def test_laplacian_examples():
    assert laplacian(complete_graph(2)).tolist() == [[1, -1], [-1, 1]]
    assert laplacian(complete_graph(3)).tolist() == [
        [2, -1, -1],
        [-1, 2, -1],
        [-1, -1, 2],
    ]


def test_laplacian_row_sums_zero():
    rng = random.Random(23)
    for _ in range(30):
        g = make_random_graph(rng, rng.randrange(1, 11))
        assert (laplacian(g).sum(axis=1) == 0.0).all()


def test_signless_laplacian_examples():
    assert signless_laplacian(complete_graph(2)).tolist() == [[1, 1], [1, 1]]
    assert signless_laplacian(complete_graph(3)).tolist() == [
        [2, 1, 1],
        [1, 2, 1],
        [1, 1, 2],
    ]
    assert (signless_laplacian(Graph.empty(4)) == 0.0).all()


def test_signless_row_sums_twice_degree():
    rng = random.Random(29)
    for _ in range(30):
        g = make_random_graph(rng, rng.randrange(1, 11))
        sums = signless_laplacian(g).sum(axis=1)
        assert sums.tolist() == [2.0 * g.degree(v) for v in range(g.n)]


def test_incidence_matrix_examples():
    assert incidence_matrix(complete_graph(2)).tolist() == [[1], [1]]
    assert incidence_matrix(path_graph(3)).tolist() == [[1, 0], [1, 1], [0, 1]]


def test_incidence_gram_identity_exact():
    rng = random.Random(31)
    for _ in range(60):
        g = make_random_graph(rng, rng.randrange(1, 12))
        x = incidence_matrix(g)
        assert np.array_equal(x @ x.T, signless_laplacian(g))


def test_directed_incidence_examples():
    g = complete_graph(2)
    d = directed_incidence_matrix(g, Orientation.all_forward(g))
    assert d.tolist() == [[-1], [1]]


def test_directed_gram_identity_exact():
    rng = random.Random(37)
    for _ in range(60):
        g = make_random_graph(rng, rng.randrange(1, 12))
        o = Orientation.random(g, rng)
        d = directed_incidence_matrix(g, o)
        assert np.array_equal(d @ d.T, laplacian(g))


def test_orientation_flip_negates_one_column():
    rng = random.Random(41)
    for _ in range(30):
        g = make_random_graph(rng, rng.randrange(2, 10))
        if g.m == 0:
            continue
        o = Orientation.random(g, rng)
        idx = rng.randrange(g.m)
        d0 = directed_incidence_matrix(g, o)
        d1 = directed_incidence_matrix(g, o.flipped(idx))
        diff = d0 != d1
        assert diff[:, idx].any() and not diff[:, [c for c in range(g.m) if c != idx]].any()
        assert np.array_equal(d1[:, idx], -d0[:, idx])
        assert np.array_equal(d0 @ d0.T, d1 @ d1.T)


def test_orientation_mismatch_rejected():
    g = path_graph(3)
    other = Orientation.all_forward(complete_graph(3))
    with pytest.raises(ContractViolation):
        directed_incidence_matrix(g, other)


def test_bipartite_examples():
    assert is_bipartite(cycle_graph(4))[0]
    assert not is_bipartite(complete_graph(3))[0]
    assert is_bipartite(Graph.empty(5))[0]


def test_bipartite_witness_colors_every_edge():
    rng = random.Random(43)
    found = 0
    for _ in range(200):
        g = make_random_graph(rng, rng.randrange(1, 9), p=0.25)
        flag, colors = is_bipartite(g)
        if not flag:
            continue
        found += 1
        assert colors is not None
        for i, j in g.edges():
            assert colors[i] != colors[j]
    assert found > 20


def test_odd_cycles_are_not_bipartite():
    for n in (3, 5, 7, 9):
        assert not is_bipartite(cycle_graph(n))[0]
    for n in (4, 6, 8):
        assert is_bipartite(cycle_graph(n))[0]


def test_regular_examples():
    assert is_regular(cycle_graph(5)) == 2
    assert is_regular(path_graph(3)) is None
    assert is_regular(complete_graph(4)) == 3
    assert is_regular(Graph.empty(0)) == 0
    assert is_regular(Graph.empty(6)) == 0


def test_connected_components_examples():
    assert connected_components(complete_graph(3))[0] == 1
    assert connected_components(Graph.empty(3))[0] == 3
    two_k2 = Graph.from_edges(4, [(0, 1), (2, 3)])
    count, labels = connected_components(two_k2)
    assert count == 2
    assert labels[0] == labels[1] and labels[2] == labels[3] and labels[0] != labels[2]


def test_permute_preserves_structure():
    rng = random.Random(47)
    for _ in range(40):
        g = make_random_graph(rng, rng.randrange(1, 9))
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.permute(perm)
        assert h.m == g.m
        assert sorted(h.degree(v) for v in range(h.n)) == sorted(
            g.degree(v) for v in range(g.n)
        )


def test_toggle_edge_round_trip():
    g = path_graph(4)
    assert g.toggle_edge(0, 3).toggle_edge(0, 3) == g
    assert g.toggle_edge(0, 1).m == g.m - 1
