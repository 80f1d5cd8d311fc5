import random

import pytest

from spectra_verify import Graph, enumerate_graphs


def make_random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


@pytest.fixture(scope="session")
def classes_by_n():
    """Memoized access to all isomorphism classes at a given vertex count."""
    cache: dict[int, list[Graph]] = {}

    def get(n: int) -> list[Graph]:
        if n not in cache:
            cache[n] = list(enumerate_graphs(n))
        return cache[n]

    return get
