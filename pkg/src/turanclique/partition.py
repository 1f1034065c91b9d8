"""Recursive max-degree partition and its complete multipartite closure.

The procedure repeatedly picks a maximum-degree vertex v of the current
graph, splits off the part V_i of non-neighbors of v (v included), and
recurses on the neighborhood.  Each pivot v_i is adjacent to every
vertex of all later parts, so the pivots induce a clique.  Closing the
parts into a complete multipartite graph G' never loses edges, and for
graphs with at least t_r(n) - k edges the edit distance between G and
G' is at most 3k.

Degree bookkeeping runs on a packed bitmatrix so a full run costs
O(n^2 / w) word operations; ties always break toward the lowest vertex
id, making the output deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .graph import Graph, _iter_bits
from .turan import edge_surplus_check

_WORD_BITS = 64


def _packed_adjacency(g: Graph) -> np.ndarray:
    """Adjacency as an (n, words) uint64 matrix, little-endian bit order."""
    n = g.n
    words = max(1, (n + _WORD_BITS - 1) // _WORD_BITS)
    row_bytes = words * 8
    buf = b"".join(mask.to_bytes(row_bytes, "little") for mask in g.adjacency_masks())
    return np.frombuffer(buf, dtype=np.uint64).reshape(n, words).copy()


def _bits_of(words_row: np.ndarray, n: int) -> np.ndarray:
    bits = np.unpackbits(words_row.view(np.uint8), bitorder="little")[:n]
    return np.nonzero(bits)[0]


def _popcount_rows(rows: np.ndarray) -> np.ndarray:
    return np.bitwise_count(rows).sum(axis=-1, dtype=np.int64)


@dataclass(frozen=True)
class Partition:
    """Ordered parts V_1..V_p with one pivot vertex per part.

    Intended invariants (graph-dependent, checked by verify_partition):
    parts are nonempty, disjoint, and cover the vertex set; each pivot
    v_i is adjacent to every vertex of V_{i+1} .. V_p; consequently the
    pivots induce a clique.
    """

    parts: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.parts)

    def to_json_dict(self) -> dict:
        return {"parts": [list(part) for part in self.parts], "pivots": list(self.pivots)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Partition":
        return cls(
            parts=tuple(tuple(int(v) for v in part) for part in data["parts"]),
            pivots=tuple(int(v) for v in data["pivots"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


@dataclass(frozen=True)
class EditReport:
    """Edge edits turning G into its multipartite closure G'.

    added:   R = E(G') \\ E(G), the missing cross-part edges
    removed: A = E(G) \\ E(G'), the intra-part edges
    touched: X, every vertex covered by the symmetric difference
    """

    added: tuple[tuple[int, int], ...]
    removed: tuple[tuple[int, int], ...]
    touched: tuple[int, ...]

    @property
    def touched_mask(self) -> int:
        mask = 0
        for v in self.touched:
            mask |= 1 << v
        return mask


def check_partition_of(g: Graph, part: Partition) -> None:
    """Raise ValueError unless parts are nonempty, disjoint, cover V(g),
    and each pivot belongs to its part."""
    seen = 0
    total = 0
    for i, vs in enumerate(part.parts):
        if not vs:
            raise ValueError(f"part {i} is empty")
        mask = 0
        for v in vs:
            if not (0 <= v < g.n):
                raise ValueError(f"part {i} contains out-of-range vertex {v}")
            mask |= 1 << v
        if mask & seen:
            raise ValueError(f"part {i} overlaps an earlier part")
        seen |= mask
        total += len(vs)
    if total != g.n or seen != (1 << g.n) - 1:
        raise ValueError("parts do not cover the vertex set")
    if len(part.pivots) != len(part.parts):
        raise ValueError("pivot count differs from part count")
    for i, (v, vs) in enumerate(zip(part.pivots, part.parts)):
        if v not in vs:
            raise ValueError(f"pivot {v} not inside part {i}")


def erdos_partition(g: Graph) -> Partition:
    """Run the recursive max-degree partition on g.

    Ties on maximum degree break toward the lowest vertex id.  Works on
    any graph with n >= 1; the edit-distance guarantees only hold under
    the edge-surplus precondition checked by verify_partition.
    """
    n = g.n
    if n == 0:
        raise ValueError("cannot partition the empty graph")
    adj = _packed_adjacency(g)
    words = adj.shape[1]
    alive = np.zeros(words, dtype=np.uint64)
    full_bytes = ((1 << n) - 1).to_bytes(words * 8, "little")
    alive[:] = np.frombuffer(full_bytes, dtype=np.uint64)
    deg = _popcount_rows(adj)
    active = np.ones(n, dtype=bool)
    parts: list[tuple[int, ...]] = []
    pivots: list[int] = []
    remaining = n
    while remaining > 0:
        pivot = int(np.argmax(np.where(active, deg, -1)))
        neigh_alive = adj[pivot] & alive
        part_words = alive & ~neigh_alive
        part_ids = _bits_of(part_words, n)
        parts.append(tuple(int(v) for v in part_ids))
        pivots.append(pivot)
        active[part_ids] = False
        alive = neigh_alive
        remaining -= len(part_ids)
        if remaining > 0:
            rest = np.nonzero(active)[0]
            deg[rest] -= _popcount_rows(adj[rest] & part_words)
    return Partition(parts=tuple(parts), pivots=tuple(pivots))


def multipartite_closure(g: Graph, part: Partition) -> tuple[Graph, EditReport]:
    """Complete multipartite graph G' on the given parts, plus the edit sets.

    When the partition came from erdos_partition on g, |E(G')| >= |E(g)|
    and every vertex degree is no smaller in G' than in g.
    """
    check_partition_of(g, part)
    n = g.n
    full = (1 << n) - 1
    part_mask = [0] * len(part.parts)
    part_of = [0] * n
    for i, vs in enumerate(part.parts):
        for v in vs:
            part_mask[i] |= 1 << v
            part_of[v] = i
    masks = [0] * n
    added: list[tuple[int, int]] = []
    removed: list[tuple[int, int]] = []
    touched_mask = 0
    for u in range(n):
        own = part_mask[part_of[u]]
        row = full & ~own
        masks[u] = row
        g_row = g.neighbor_mask(u)
        add_row = (row & ~g_row) >> (u + 1) << (u + 1)
        rem_row = (g_row & own) >> (u + 1) << (u + 1)
        for v in _iter_bits(add_row):
            added.append((u, v))
            touched_mask |= (1 << u) | (1 << v)
        for v in _iter_bits(rem_row):
            removed.append((u, v))
            touched_mask |= (1 << u) | (1 << v)
    m = sum(mask.bit_count() for mask in masks) // 2
    closure = Graph(n, masks, None, m)
    report = EditReport(
        added=tuple(added),
        removed=tuple(removed),
        touched=tuple(_iter_bits(touched_mask)),
    )
    return closure, report


@dataclass(frozen=True)
class PartitionVerification:
    """Outcome of checking a partition against the structural guarantees.

    ``violations`` holds (check name, certificate) pairs; an empty list
    means every applicable property held.  Any entry indicates a bug in
    the partition procedure, not bad input.
    """

    p: int
    r: int
    k: int
    min_parts_ok: bool
    pivot_adjacency_ok: bool
    edit_checked: bool
    edit_distance: int | None
    added_count: int | None
    removed_count: int | None
    violations: tuple[tuple[str, object], ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_partition(g: Graph, part: Partition, r: int, k: int) -> PartitionVerification:
    """Check properties (i)-(iii) of the partition guarantee.

    Preconditions (raise ValueError): k >= 1, r >= 2, the partition is
    structurally valid for g, and m >= t_r(n) - k.  Property failures
    are returned in the report with witnesses, never raised.
    """
    if k < 1:
        raise ValueError(f"guarantee requires k >= 1, got k={k}")
    if r < 2:
        raise ValueError(f"guarantee requires r >= 2, got r={r}")
    check_partition_of(g, part)
    surplus = edge_surplus_check(g, r, k)
    if not surplus.valid:
        raise ValueError(f"edge surplus precondition fails: slack={surplus.slack}")
    violations: list[tuple[str, object]] = []
    p = part.p
    if p < r - k:
        violations.append(("min_parts", {"p": p, "r_minus_k": r - k}))
    # pivot adjacency: N(v_i) must cover all later parts
    suffix = 0
    pivot_ok = True
    for i in range(p - 1, -1, -1):
        v = part.pivots[i]
        missing = suffix & ~g.neighbor_mask(v)
        if missing:
            pivot_ok = False
            witness = next(_iter_bits(missing))
            violations.append(("pivot_adjacency", {"part": i, "pivot": v, "non_neighbor": witness}))
        for u in part.parts[i]:
            suffix |= 1 << u
    edit_checked = p <= r
    edit_distance = added_count = removed_count = None
    if edit_checked:
        _, report = multipartite_closure(g, part)
        added_count = len(report.added)
        removed_count = len(report.removed)
        edit_distance = added_count + removed_count
        if edit_distance > 3 * k:
            violations.append(("edit_distance", {"distance": edit_distance, "bound": 3 * k}))
        if added_count > 2 * k:
            violations.append(("added_bound", {"added": added_count, "bound": 2 * k}))
        if added_count < removed_count:
            violations.append(("added_ge_removed", {"added": added_count, "removed": removed_count}))
        covered_by_removed = 0
        for u, v in report.removed:
            covered_by_removed |= (1 << u) | (1 << v)
        covered_by_added = 0
        for u, v in report.added:
            covered_by_added |= (1 << u) | (1 << v)
        uncovered = covered_by_removed & ~covered_by_added
        if uncovered:
            violations.append(("coverage", {"vertex": next(_iter_bits(uncovered))}))
    return PartitionVerification(
        p=p,
        r=r,
        k=k,
        min_parts_ok=p >= r - k,
        pivot_adjacency_ok=pivot_ok,
        edit_checked=edit_checked,
        edit_distance=edit_distance,
        added_count=added_count,
        removed_count=removed_count,
        violations=tuple(violations),
    )


def intra_part_edge_count(g: Graph, parts: Iterable[Iterable[int]]) -> int:
    """Sum over parts of the number of g-edges inside the part."""
    total = 0
    for vs in parts:
        mask = 0
        for v in vs:
            mask |= 1 << v
        total += sum((g.neighbor_mask(v) & mask).bit_count() for v in _iter_bits(mask))
    return total // 2
