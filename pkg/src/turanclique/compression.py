"""Compression of near-Turan clique instances into small Clique instances.

An instance (G, r, k, ell) asks for a clique of size ell in an n-vertex
graph with at least t_r(n) - k edges.  For ell <= r + 1 the pipeline
either answers directly or produces an equivalent Clique instance on at
most 5k vertices:

1. If r < 2 or n <= 5k, the instance is already small enough (or
   carries no structure): return it unchanged.
2. Run the max-degree partition.  If it finds p >= ell parts, the
   pivots form a clique of size ell: answer yes.
3. Otherwise close the partition into the complete multipartite graph
   G', collect the edit sets R (added), A (removed), X (touched), and
   apply two reduction rules part by part:
   Rule 1 deletes any independent part with an untouched vertex and
   lowers ell by one (every maximal clique meets such a part exactly
   once).  Rule 2 keeps one representative of the untouched vertices
   inside each remaining part (they are twins).
   The survivors fit in |X| + |A| <= 2|R| + |A| <= 5k vertices.

For ell > r + 1, shift_parameters rewrites the instance with r' = ell
and k' = k + (t_ell(n) - t_r(n)), after which the pipeline above
applies.  The independent-set wrapper asks for an independent set of
size ceil(n/(d+1)) + t and runs the same machinery on the complement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, _iter_bits, complement, induced_subgraph
from .partition import EditReport, Partition, erdos_partition, multipartite_closure
from .turan import edge_surplus_check, turan_edge_count, turan_gap


@dataclass(frozen=True)
class TuranCliqueInstance:
    """Input (g, r, k, ell) with the edge-surplus invariant m >= t_r(n) - k."""

    g: Graph
    r: int
    k: int
    ell: int

    def __post_init__(self):
        n = self.g.n
        if not (1 <= self.r <= n):
            raise ValueError(f"need 1 <= r <= n, got r={self.r}, n={n}")
        if not (1 <= self.ell <= n):
            raise ValueError(f"need 1 <= ell <= n, got ell={self.ell}, n={n}")
        if self.k < 0:
            raise ValueError(f"need k >= 0, got k={self.k}")
        check = edge_surplus_check(self.g, self.r, self.k)
        if not check.valid:
            raise ValueError(
                f"edge surplus violated: m={self.g.m} < t_{self.r}({n}) - {self.k} "
                f"(slack {check.slack})"
            )

    @property
    def tau(self) -> int:
        return max(self.ell - self.r, 0)

    @property
    def xi(self) -> int:
        return self.g.n // self.r

    def describe(self) -> dict:
        return {
            "n": self.g.n,
            "m": self.g.m,
            "r": self.r,
            "k": self.k,
            "ell": self.ell,
            "tau": self.tau,
            "xi": self.xi,
        }


@dataclass(frozen=True)
class CompressionTrace:
    """Audit record of one compression run.

    ``kept`` lists the surviving original vertex ids in sorted order;
    position in the tuple is the vertex id in the output graph.
    Replaying the recorded removals on the input graph reproduces the
    output graph byte for byte (see replay_trace).
    """

    trivial: bool
    partition: Partition | None
    edit: EditReport | None
    removed_parts: tuple[int, ...]
    part_representatives: tuple[int, ...]
    removed_vertices: tuple[int, ...]
    ell_decrements: int
    kept: tuple[int, ...]

    def summary(self) -> dict:
        return {
            "trivial": self.trivial,
            "parts": self.partition.p if self.partition is not None else None,
            "added_edges": len(self.edit.added) if self.edit is not None else None,
            "removed_edges": len(self.edit.removed) if self.edit is not None else None,
            "touched_vertices": len(self.edit.touched) if self.edit is not None else None,
            "parts_removed": len(self.removed_parts),
            "vertices_removed_as_twins": len(self.removed_vertices),
            "ell_decrements": self.ell_decrements,
            "kept_vertices": len(self.kept),
        }


OPEN = "open"
TRIVIALLY_YES = "trivially_yes"
TRIVIALLY_NO = "trivially_no"


@dataclass(frozen=True)
class CliqueInstance:
    """Compression output: a small open Clique instance or a verdict.

    The verdict answers the source question exactly: the source graph
    has a clique of the requested size iff this instance is
    trivially_yes, or is open and its graph has a clique of size ell.
    """

    kind: str
    graph: Graph | None
    ell: int | None
    witness_hint: tuple[int, ...] | None
    trace: CompressionTrace

    @classmethod
    def open_instance(cls, graph: Graph, ell: int, trace: CompressionTrace) -> "CliqueInstance":
        if ell > graph.n:  # no room for a clique that large
            return cls(TRIVIALLY_NO, None, None, None, trace)
        if ell < 1:
            raise ValueError("open instance requires ell >= 1; use trivially_yes")
        return cls(OPEN, graph, ell, None, trace)

    @classmethod
    def yes(cls, witness_hint: tuple[int, ...], trace: CompressionTrace) -> "CliqueInstance":
        return cls(TRIVIALLY_YES, None, None, tuple(witness_hint), trace)

    @classmethod
    def no(cls, trace: CompressionTrace) -> "CliqueInstance":
        return cls(TRIVIALLY_NO, None, None, None, trace)

    @property
    def is_open(self) -> bool:
        return self.kind == OPEN

    def describe(self) -> dict:
        return {
            "verdict": self.kind,
            "n": self.graph.n if self.graph is not None else None,
            "ell": self.ell,
        }


def _identity_trace(n: int) -> CompressionTrace:
    return CompressionTrace(
        trivial=True,
        partition=None,
        edit=None,
        removed_parts=(),
        part_representatives=(),
        removed_vertices=(),
        ell_decrements=0,
        kept=tuple(range(n)),
    )


def compress_clique(inst: TuranCliqueInstance) -> CliqueInstance:
    """Compress an instance with tau <= 1 into Clique on at most 5k vertices.

    Raises ValueError when ell > r + 1; route those instances through
    shift_parameters first.  k = 0 is lifted to k = 1, which keeps the
    surplus invariant and enables the partition guarantee.
    """
    if inst.tau > 1:
        raise ValueError(
            f"compression requires ell <= r + 1 (tau <= 1), got tau={inst.tau}; "
            "apply shift_parameters first"
        )
    g, r, ell = inst.g, inst.r, inst.ell
    k = max(inst.k, 1)
    n = g.n
    if r < 2 or n <= 5 * k:
        return CliqueInstance.open_instance(g, ell, _identity_trace(n))

    part = erdos_partition(g)
    if part.p >= ell:
        trace = CompressionTrace(
            trivial=False,
            partition=part,
            edit=None,
            removed_parts=(),
            part_representatives=(),
            removed_vertices=(),
            ell_decrements=0,
            kept=tuple(range(n)),
        )
        return CliqueInstance.yes(part.pivots[:ell], trace)

    _, report = multipartite_closure(g, part)
    touched = report.touched_mask
    part_masks = [0] * part.p
    for i, vs in enumerate(part.parts):
        for v in vs:
            part_masks[i] |= 1 << v
    has_intra_edge = [False] * part.p
    part_of = {}
    for i, vs in enumerate(part.parts):
        for v in vs:
            part_of[v] = i
    for u, _v in report.removed:
        has_intra_edge[part_of[u]] = True

    # Rule 1: delete independent parts holding an untouched vertex.
    removed_parts: list[int] = []
    reps: list[int] = []
    removed_mask = 0
    for i in range(part.p):
        untouched = part_masks[i] & ~touched
        if untouched and not has_intra_edge[i]:
            removed_parts.append(i)
            reps.append(next(_iter_bits(untouched)))
            removed_mask |= part_masks[i]
    ell_out = ell - len(removed_parts)

    # Rule 2: in the remaining parts, untouched vertices are twins.
    removed_part_set = set(removed_parts)
    twin_removed: list[int] = []
    for i in range(part.p):
        if i in removed_part_set:
            continue
        untouched = part_masks[i] & ~touched
        if untouched.bit_count() > 1:
            keep = next(_iter_bits(untouched))
            extra = untouched & ~(1 << keep)
            twin_removed.extend(_iter_bits(extra))
            removed_mask |= extra

    kept_mask = ((1 << n) - 1) & ~removed_mask
    kept = tuple(_iter_bits(kept_mask))
    trace = CompressionTrace(
        trivial=False,
        partition=part,
        edit=report,
        removed_parts=tuple(removed_parts),
        part_representatives=tuple(reps),
        removed_vertices=tuple(twin_removed),
        ell_decrements=len(removed_parts),
        kept=kept,
    )
    if ell_out <= 0:
        return CliqueInstance.yes(tuple(reps[:ell]), trace)
    sub = induced_subgraph(g, kept)
    return CliqueInstance.open_instance(sub.graph, ell_out, trace)


def rule1_remove_untouched_part(
    g: Graph, part: Partition, touched: int | tuple[int, ...], ell: int
) -> tuple[Graph, int, int | None]:
    """Apply one step of Rule 1: delete the first independent part with
    an untouched vertex, lowering ell by one.

    ``touched`` is the vertex set X as a bitmask or id tuple.  Returns
    (graph, ell, removed part index) with index None when no part
    qualifies (the rule is then a no-op).  Part vertices keep their ids
    in the returned graph's numbering via induced_subgraph ordering;
    intended for small graphs and tests, the pipeline uses a batched
    equivalent.
    """
    x_mask = touched if isinstance(touched, int) else _ids_to_mask(touched)
    for i, vs in enumerate(part.parts):
        pm = _ids_to_mask(vs)
        untouched = pm & ~x_mask
        independent = all((g.neighbor_mask(v) & pm) == 0 for v in vs)
        if untouched and independent:
            keep = [v for v in range(g.n) if not ((pm >> v) & 1)]
            return induced_subgraph(g, keep).graph, ell - 1, i
    return g, ell, None


def rule2_dedupe_untouched_vertices(
    g: Graph, part: Partition, touched: int | tuple[int, ...]
) -> tuple[Graph, tuple[int, ...]]:
    """Apply Rule 2 exhaustively: keep the lowest-id untouched vertex of
    every part, deleting the other untouched vertices (they are twins).

    Returns (graph, removed vertex ids in g's numbering).
    """
    x_mask = touched if isinstance(touched, int) else _ids_to_mask(touched)
    removed: list[int] = []
    for vs in part.parts:
        pm = _ids_to_mask(vs)
        untouched = pm & ~x_mask
        if untouched.bit_count() > 1:
            keep = next(_iter_bits(untouched))
            removed.extend(_iter_bits(untouched & ~(1 << keep)))
    if not removed:
        return g, ()
    removed_mask = _ids_to_mask(removed)
    keep_ids = [v for v in range(g.n) if not ((removed_mask >> v) & 1)]
    return induced_subgraph(g, keep_ids).graph, tuple(removed)


def _ids_to_mask(ids) -> int:
    mask = 0
    for v in ids:
        mask |= 1 << v
    return mask


def shift_parameters(inst: TuranCliqueInstance) -> TuranCliqueInstance:
    """Rewrite an ell > r + 1 instance as an equivalent one with tau = 0.

    Returns (g, r' = ell, k' = k + t_ell(n) - t_r(n), ell).  The surplus
    invariant carries over: m >= t_r(n) - k = t_ell(n) - k'.
    """
    if inst.ell <= inst.r + 1:
        raise ValueError(
            f"shift applies only when ell > r + 1, got r={inst.r}, ell={inst.ell}"
        )
    gap = turan_gap(inst.g.n, inst.r, inst.ell)
    return TuranCliqueInstance(g=inst.g, r=inst.ell, k=inst.k + gap, ell=inst.ell)


def independent_set_target(g: Graph, t: int) -> int:
    """ceil(n / (d + 1)) + t with d = 2m/n, in exact arithmetic."""
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if t < 1:
        raise ValueError(f"need t >= 1, got t={t}")
    # n / (d + 1) = n^2 / (2m + n)
    return math.ceil(Fraction(g.n * g.n, 2 * g.m + g.n)) + t


def compress_independent_set(g: Graph, t: int) -> CliqueInstance:
    """Compress "does g have an independent set of size >= n/(d+1) + t".

    Works on the complement: an independent set of the target size in g
    is a clique there.  The part count r is the largest value whose
    ratio floor(n/r) exceeds the average degree, which guarantees the
    complement meets the Turan bound; the surplus is still verified
    explicitly and r lowered if ever needed, so an invalid instance is
    never emitted.  The result has O(t d^2) vertices.
    """
    target = independent_set_target(g, t)
    n = g.n
    d_ceil = -((-2 * g.m) // n)  # ceil of the average degree
    if d_ceil + 1 > n:
        raise ValueError(f"degenerate instance: average degree + 1 exceeds n={n}")
    if target > n:
        return CliqueInstance.no(_identity_trace(n))
    h = complement(g)
    r = n // (d_ceil + 1)
    while r > 1 and not edge_surplus_check(h, r, 0).valid:
        r -= 1
    inst = TuranCliqueInstance(g=h, r=r, k=0, ell=target)
    if inst.tau > 1:
        inst = shift_parameters(inst)
    return compress_clique(inst)


def lift_witness(ci: CliqueInstance, kernel_witness: tuple[int, ...]) -> tuple[int, ...]:
    """Map a clique found in an open output back to source-graph ids,
    re-attaching one representative for every part deleted by Rule 1."""
    if not ci.is_open:
        raise ValueError("witness lifting applies to open instances")
    trace = ci.trace
    mapped = [trace.kept[v] for v in kernel_witness]
    mapped.extend(trace.part_representatives)
    return tuple(sorted(mapped))


def replay_trace(g: Graph, trace: CompressionTrace) -> Graph:
    """Re-derive the output graph from the input graph and a trace."""
    if trace.trivial:
        return g
    removed = set(trace.removed_vertices)
    if trace.partition is not None:
        for i in trace.removed_parts:
            removed.update(trace.partition.parts[i])
    kept = [v for v in range(g.n) if v not in removed]
    if tuple(kept) != trace.kept:
        raise ValueError("trace kept-set is inconsistent with its removals")
    return induced_subgraph(g, kept).graph
