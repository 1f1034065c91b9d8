"""Brute-force ground truth for tests.

Deliberately independent of the main solver: plain depth-first
enumeration in ascending vertex order with only the trivial
cardinality cutoff, no coloring bounds, no degeneracy ordering.
Capped at desk scale.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .graph import Graph, complement
from .turan import build_turan_graph

BRUTE_FORCE_VERTEX_CAP = 26
ENUMERATION_VERTEX_CAP = 7
UNIQUENESS_VERTEX_CAP = 6


def brute_force_max_clique(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact maximum clique by exhaustive enumeration (n <= 26).

    Returns (size, witness).  The empty graph on n >= 1 vertices has
    clique number 1; on 0 vertices the result is (0, ()).
    """
    n = g.n
    if n > BRUTE_FORCE_VERTEX_CAP:
        raise ValueError(f"brute force capped at {BRUTE_FORCE_VERTEX_CAP} vertices, got {n}")
    if n == 0:
        return 0, ()
    neigh = [set(g.neighbors(u)) for u in range(n)]
    best_size = 0
    best: tuple[int, ...] = ()

    def extend(chosen: list[int], candidates: list[int]) -> None:
        nonlocal best_size, best
        if len(chosen) > best_size:
            best_size = len(chosen)
            best = tuple(chosen)
        for i, v in enumerate(candidates):
            if len(chosen) + len(candidates) - i <= best_size:
                return
            chosen.append(v)
            extend(chosen, [w for w in candidates[i + 1 :] if w in neigh[v]])
            chosen.pop()

    extend([], list(range(n)))
    return best_size, best


def brute_force_max_independent_set(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact maximum independent set via the complement (n <= 26)."""
    return brute_force_max_clique(complement(g))


def _edge_index_table(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


@lru_cache(maxsize=None)
def _clique_numbers_all_graphs(n: int) -> np.ndarray:
    """Clique number of every labeled n-vertex graph, indexed by edge bitmask.

    Edge bit order follows combinations(range(n), 2).  Exhaustive over
    all 2^C(n,2) graphs, so n is capped at 7 (2^21 graphs).
    """
    if n > ENUMERATION_VERTEX_CAP:
        raise ValueError(f"graph enumeration capped at {ENUMERATION_VERTEX_CAP} vertices, got {n}")
    pairs = _edge_index_table(n)
    pair_bit = {pair: 1 << i for i, pair in enumerate(pairs)}
    count = 1 << len(pairs)
    graphs = np.arange(count, dtype=np.uint32)
    omega = np.ones(count, dtype=np.uint8)  # every vertex alone is a K_1
    if n == 0:
        return np.zeros(1, dtype=np.uint8)
    for size in range(2, n + 1):
        hit = np.zeros(count, dtype=bool)
        for subset in combinations(range(n), size):
            required = 0
            for pair in combinations(subset, 2):
                required |= pair_bit[pair]
            req = np.uint32(required)
            hit |= (graphs & req) == req
        omega[hit] = size
    return omega


def max_edges_clique_free(n: int, r: int) -> int:
    """Maximum edge count over all K_{r+1}-free n-vertex graphs (n <= 7).

    Exhaustive over every labeled graph; the value must equal t_r(n).
    """
    if not (1 <= r <= n):
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    omega = _clique_numbers_all_graphs(n)
    graphs = np.arange(len(omega), dtype=np.uint32)
    free = omega <= r
    edge_counts = np.bitwise_count(graphs[free])
    return int(edge_counts.max())


def _canonical_edge_mask(n: int, mask: int) -> int:
    """Minimum edge bitmask over all vertex relabelings (n <= 6)."""
    pairs = _edge_index_table(n)
    pair_index = {pair: i for i, pair in enumerate(pairs)}
    bits = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
    best = None
    for perm in permutations(range(n)):
        out = 0
        for u, v in bits:
            a, b = perm[u], perm[v]
            if a > b:
                a, b = b, a
            out |= 1 << pair_index[(a, b)]
        if best is None or out < best:
            best = out
    return best if best is not None else 0


def _graph_edge_mask(g: Graph) -> int:
    pair_index = {pair: i for i, pair in enumerate(_edge_index_table(g.n))}
    mask = 0
    for e in g.edges():
        mask |= 1 << pair_index[e]
    return mask


def turan_maximizer_unique(n: int, r: int) -> bool:
    """Whether the only edge-maximal K_{r+1}-free graph is T_r(n) (n <= 6).

    Checks every maximizing graph from the exhaustive enumeration
    against T_r(n) by brute-force permutation canonical form.
    """
    if n > UNIQUENESS_VERTEX_CAP:
        raise ValueError(f"uniqueness check capped at {UNIQUENESS_VERTEX_CAP} vertices, got {n}")
    if not (1 <= r <= n):
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    omega = _clique_numbers_all_graphs(n)
    graphs = np.arange(len(omega), dtype=np.uint32)
    free = omega <= r
    edge_counts = np.bitwise_count(graphs.astype(np.uint32))
    best = int(edge_counts[free].max())
    attaining = graphs[free & (edge_counts == best)]
    target = _canonical_edge_mask(n, _graph_edge_mask(build_turan_graph(n, r)))
    return all(_canonical_edge_mask(n, int(mask)) == target for mask in attaining)
