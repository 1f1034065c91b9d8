import random

import pytest

from turanclique import Graph, TuranCliqueInstance, turan_edge_count

PETERSEN_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),          # outer cycle
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),          # inner pentagram
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),          # spokes
]


@pytest.fixture
def petersen() -> Graph:
    return Graph.from_edges(10, PETERSEN_EDGES)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def wrap_as_instance(g: Graph, r: int, ell: int, extra_k: int = 0) -> TuranCliqueInstance:
    """Make (g, r, k, ell) valid by setting k to the exact deficit plus slack."""
    k = max(0, turan_edge_count(g.n, r) - g.m) + extra_k
    return TuranCliqueInstance(g=g, r=r, k=k, ell=ell)
