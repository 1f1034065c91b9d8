"""Exact maximum-clique solving and the end-to-end decision pipelines.

The solver is branch and bound with a greedy-coloring upper bound and
degeneracy root ordering, on bitmask adjacency.  It runs in two phases:
phase one computes the clique number, phase two extracts the
lexicographically smallest maximum clique.  The two-phase split makes
the reported witness canonical, so it cannot depend on thread count or
on how aggressively bounds pruned the search.

Work is metered in search nodes against a configurable budget;
exhausting the budget raises BudgetExceededError, never returns a wrong
answer.
"""

from __future__ import annotations

import os
import sys
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

from .compression import (
    CliqueInstance,
    TuranCliqueInstance,
    compress_clique,
    compress_independent_set,
    lift_witness,
    shift_parameters,
)
from .graph import Graph, _iter_bits

DEFAULT_NODE_BUDGET = 10**8
BUDGET_ENV_VAR = "TURANCLIQUE_BUDGET"


class BudgetExceededError(RuntimeError):
    """Search node budget exhausted before the instance was decided."""


def resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    return int(os.environ.get(BUDGET_ENV_VAR, DEFAULT_NODE_BUDGET))


class _Budget:
    __slots__ = ("cap", "used", "_lock")

    def __init__(self, cap: int, locked: bool):
        self.cap = cap
        self.used = 0
        self._lock = threading.Lock() if locked else None

    def charge(self) -> None:
        if self._lock is None:
            self.used += 1
            if self.used > self.cap:
                raise BudgetExceededError(f"node budget {self.cap} exhausted")
        else:
            with self._lock:
                self.used += 1
                if self.used > self.cap:
                    raise BudgetExceededError(f"node budget {self.cap} exhausted")


class _Best:
    """Shared lower bound on the clique number; larger values only."""

    __slots__ = ("value", "_lock")

    def __init__(self):
        self.value = 0
        self._lock = threading.Lock()

    def offer(self, candidate: int) -> None:
        if candidate > self.value:
            with self._lock:
                if candidate > self.value:
                    self.value = candidate


def _degeneracy_order(masks: list[int], n: int) -> list[int]:
    """Vertices in degeneracy order (min degree peeled first, lowest id wins)."""
    alive = (1 << n) - 1
    deg = [masks[u].bit_count() for u in range(n)]
    order = []
    for _ in range(n):
        best_v = -1
        best_d = n + 1
        rest = alive
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if deg[v] < best_d:
                best_d = deg[v]
                best_v = v
        order.append(best_v)
        alive &= ~(1 << best_v)
        nb = masks[best_v] & alive
        while nb:
            low = nb & -nb
            deg[low.bit_length() - 1] -= 1
            nb ^= low
    return order


def _color_order(P: int, masks: list[int]) -> list[tuple[int, int]]:
    """Greedy coloring of P; returns (vertex, color) with colors ascending."""
    out = []
    rem = P
    color = 0
    while rem:
        color += 1
        avail = rem
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            out.append((v, color))
            avail &= ~masks[v]
            avail ^= low
            rem ^= low
    return out


class _Searcher:
    __slots__ = ("masks", "best", "budget")

    def __init__(self, masks: list[int], best: _Best, budget: _Budget):
        self.masks = masks
        self.best = best
        self.budget = budget

    def expand(self, r_size: int, P: int) -> None:
        self.budget.charge()
        masks = self.masks
        order = _color_order(P, masks)
        for v, color in reversed(order):
            if r_size + color <= self.best.value:
                return
            new_p = P & masks[v]
            if new_p:
                self.expand(r_size + 1, new_p)
            else:
                self.best.offer(r_size + 1)
            P &= ~(1 << v)


def _run_root_jobs(masks: list[int], order: list[int], best: _Best, budget: _Budget, threads: int) -> None:
    later = (1 << len(masks)) - 1
    jobs: list[tuple[int, int]] = []
    for v in order:
        later &= ~(1 << v)
        jobs.append((v, masks[v] & later))

    def run(job: tuple[int, int]) -> None:
        v, p = job
        if not p:
            best.offer(1)
            return
        if 1 + p.bit_count() <= best.value:
            return
        _Searcher(masks, best, budget).expand(1, p)

    if threads <= 1:
        for job in jobs:
            run(job)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(run, job) for job in jobs]
        errors = [f.exception() for f in futures]
    for err in errors:
        if err is not None:
            raise err


def _lex_min_clique(masks: list[int], n: int, size: int, budget: _Budget) -> tuple[int, ...]:
    """Lexicographically smallest clique of exactly ``size`` vertices.

    Explores candidates in ascending id order, so the first complete
    clique found is the lexicographic minimum; pruning only removes
    branches that cannot reach ``size``.
    """
    if size == 0:
        return ()
    full = (1 << n) - 1

    def dfs(prefix: list[int], P: int, need: int) -> tuple[int, ...] | None:
        budget.charge()
        if need == 0:
            return tuple(prefix)
        if P.bit_count() < need:
            return None
        if _count_colors(P) < need:
            return None
        rest = P
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            above = ~((1 << (v + 1)) - 1)
            found = dfs(prefix + [v], P & masks[v] & above, need - 1)
            if found is not None:
                return found
        return None

    def _count_colors(P: int) -> int:
        count = 0
        rem = P
        while rem:
            count += 1
            avail = rem
            while avail:
                low = avail & -avail
                rem ^= low
                avail &= ~masks[low.bit_length() - 1]
                avail ^= low
        return count

    witness = dfs([], full, size)
    if witness is None:  # phase one said a clique of this size exists
        raise AssertionError(f"no clique of size {size} found; solver bug")
    return witness


class MaxCliqueResult(NamedTuple):
    size: int
    vertices: tuple[int, ...]
    nodes: int


def max_clique_exact(g: Graph, *, budget: int | None = None, threads: int = 1) -> MaxCliqueResult:
    """Exact maximum clique with a canonical (lex-min) witness.

    Deterministic for any thread count.  Raises BudgetExceededError if
    the node budget runs out.
    """
    n = g.n
    if n == 0:
        return MaxCliqueResult(0, (), 0)
    cell = _Budget(resolve_budget(budget), locked=threads > 1)
    masks = g.adjacency_masks()
    depth_needed = n + 200
    if sys.getrecursionlimit() < depth_needed:
        sys.setrecursionlimit(depth_needed)
    order = _degeneracy_order(masks, n)
    best = _Best()
    best.offer(1)
    _run_root_jobs(masks, order, best, cell, threads)
    witness = _lex_min_clique(masks, n, best.value, cell)
    return MaxCliqueResult(best.value, witness, cell.used)


def verify_witness(g: Graph, s, ell: int, mode: str = "clique") -> bool:
    """True iff |s| >= ell and s induces a clique (or independent set)."""
    vs = sorted(set(s))
    for v in vs:
        if not (0 <= v < g.n):
            raise ValueError(f"witness vertex {v} out of range for n={g.n}")
    if len(vs) < ell:
        return False
    if mode == "clique":
        return all(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])
    if mode == "independent_set":
        return not any(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])
    raise ValueError(f"unknown witness mode {mode!r}")


@dataclass(frozen=True)
class SolveStats:
    nodes: int
    wall_time_s: float
    kernel_vertices: int | None = None

    def to_json_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "wall_time_s": self.wall_time_s,
            "kernel_vertices": self.kernel_vertices,
        }


@dataclass(frozen=True)
class Decision:
    """Yes/no answer with an optional witness in the input graph's ids.

    ``compression`` keeps the compression output (with its trace) for
    auditing; it is not part of the JSON record.
    """

    answer: bool
    witness: tuple[int, ...] | None
    stats: SolveStats
    compression: CliqueInstance | None = None

    def to_json_dict(self) -> dict:
        return {
            "answer": "yes" if self.answer else "no",
            "witness": list(self.witness) if self.witness is not None else None,
            "stats": self.stats.to_json_dict(),
        }


def _decide_compressed(ci: CliqueInstance, budget: int | None, threads: int, started: float) -> Decision:
    kernel_vertices = ci.graph.n if ci.is_open else 0
    if ci.kind == "trivially_yes":
        return Decision(
            answer=True,
            witness=tuple(sorted(ci.witness_hint)),
            stats=SolveStats(0, time.perf_counter() - started, kernel_vertices),
            compression=ci,
        )
    if ci.kind == "trivially_no":
        return Decision(
            answer=False,
            witness=None,
            stats=SolveStats(0, time.perf_counter() - started, kernel_vertices),
            compression=ci,
        )
    result = max_clique_exact(ci.graph, budget=budget, threads=threads)
    if result.size >= ci.ell:
        witness = lift_witness(ci, result.vertices)
        return Decision(
            answer=True,
            witness=witness,
            stats=SolveStats(result.nodes, time.perf_counter() - started, kernel_vertices),
            compression=ci,
        )
    return Decision(
        answer=False,
        witness=None,
        stats=SolveStats(result.nodes, time.perf_counter() - started, kernel_vertices),
        compression=ci,
    )


def solve_turan_clique(
    inst: TuranCliqueInstance, *, budget: int | None = None, threads: int = 1
) -> Decision:
    """Decide whether inst.g has a clique of size inst.ell.

    Shifts parameters when ell > r + 1, compresses, and solves the
    remainder exactly.  The witness, when present, is a clique in the
    original input graph.
    """
    started = time.perf_counter()
    work = inst
    if work.tau > 1:
        work = shift_parameters(work)
    ci = compress_clique(work)
    return _decide_compressed(ci, budget, threads, started)


def solve_turan_is(g: Graph, t: int, *, budget: int | None = None, threads: int = 1) -> Decision:
    """Decide whether g has an independent set of size ceil(n/(d+1)) + t.

    The witness, when present, is an independent set in g of the target
    size (a clique in the complement, which shares vertex ids).
    """
    started = time.perf_counter()
    ci = compress_independent_set(g, t)
    return _decide_compressed(ci, budget, threads, started)
