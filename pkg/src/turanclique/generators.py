"""Seeded instance families for tests and benchmarks.

All randomness flows through SplitMix64, a 64-bit generator defined by
a fixed integer recurrence, so identical seeds give byte-identical
instances in any implementation of the same recurrence.

Families:

* perturbed: the Turan graph minus k random cross edges (always a
  no-instance for ell = r + 1, since subgraphs of T_r(n) stay
  K_{r+1}-free).
* planted: the Turan graph plus one intra-part edge (creating a known
  K_{r+1}) minus k - 1 cross edges chosen away from the planted clique
  (always a yes-instance, witness recorded).
* fixed-xi reduction: pads an arbitrary Clique question with isolated
  and universal vertices until floor(n/ell) equals the requested ratio,
  then emits it either with tau = 0 (k = binom(n, 2)) or with k = 0
  (r = 1).
* fixed-tau reduction: embeds an arbitrary Clique question into a large
  complete (ell-1)-partite scaffold sized so that k = 0 is valid while
  ell exceeds the part count by tau.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .compression import TuranCliqueInstance
from .graph import Graph
from .turan import build_turan_graph, turan_edge_count, turan_graph_parts

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Deterministic 64-bit PRNG (splitmix64).

    state <- (state + 0x9E3779B97F4A7C15) mod 2^64, then the output is
    z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2^64;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB mod 2^64; z ^ (z >> 31).
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound), rejection-sampled (unbiased)."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = _MASK64 + 1 - ((_MASK64 + 1) % bound)
        while True:
            value = self.next_u64()
            if value < limit:
                return value % bound

    def sample_distinct(self, bound: int, count: int, forbidden=frozenset()) -> list[int]:
        """count distinct integers from [0, bound) avoiding ``forbidden``."""
        if count > bound - len(forbidden):
            raise ValueError(
                f"cannot sample {count} distinct values from [0, {bound}) "
                f"with {len(forbidden)} forbidden"
            )
        chosen: list[int] = []
        seen = set(forbidden)
        while len(chosen) < count:
            value = self.below(bound)
            if value not in seen:
                seen.add(value)
                chosen.append(value)
        return chosen

    def chance(self, prob: float) -> bool:
        return self.next_u64() < prob * (_MASK64 + 1)


@dataclass(frozen=True)
class GeneratedInstance:
    instance: TuranCliqueInstance
    family: str
    params: dict = field(default_factory=dict)
    seed: int | None = None
    known_answer: bool | None = None
    witness: tuple[int, ...] | None = None

    def sidecar(self) -> dict:
        data = {"family": self.family, "params": dict(self.params), "seed": self.seed}
        if self.known_answer is not None:
            data["known_answer"] = self.known_answer
        if self.witness is not None:
            data["witness"] = list(self.witness)
        return data


def _turan_part_ends(n: int, r: int) -> list[int]:
    ends = []
    stop = 0
    for part in turan_graph_parts(n, r):
        stop = part[-1] + 1
        ends.append(stop)
    return ends


class _CrossEdgeIndex:
    """Bijection between [0, t_r(n)) and the cross edges of T_r(n).

    Edge i of vertex u runs to vertex part_end(u) + i; edges are ordered
    lexicographically by (u, v).
    """

    def __init__(self, n: int, r: int):
        parts = turan_graph_parts(n, r)
        self.part_end = [0] * n
        for part in parts:
            stop = part[-1] + 1
            for v in part:
                self.part_end[v] = stop
        self.cum = [0] * (n + 1)
        for u in range(n):
            self.cum[u + 1] = self.cum[u] + (n - self.part_end[u])
        self.total = self.cum[n]

    def edge(self, index: int) -> tuple[int, int]:
        import bisect

        u = bisect.bisect_right(self.cum, index) - 1
        return u, self.part_end[u] + (index - self.cum[u])

    def index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self.cum[u] + (v - self.part_end[u])


def gen_perturbed_turan(n: int, r: int, k: int, seed: int) -> GeneratedInstance:
    """T_r(n) with exactly k seeded-random edges deleted; ell = r + 1.

    Always a no-instance: a subgraph of T_r(n) stays K_{r+1}-free.
    """
    if not (1 <= r < n):
        raise ValueError(f"need 1 <= r < n (ell = r + 1 must fit), got r={r}, n={n}")
    total = turan_edge_count(n, r)
    if k > total:
        raise ValueError(f"cannot delete {k} edges, T_{r}({n}) has only {total}")
    rng = SplitMix64(seed)
    index = _CrossEdgeIndex(n, r)
    doomed = [index.edge(i) for i in sorted(rng.sample_distinct(total, k))]
    g = build_turan_graph(n, r).with_edges_removed(doomed)
    inst = TuranCliqueInstance(g=g, r=r, k=k, ell=r + 1)
    return GeneratedInstance(
        instance=inst,
        family="perturbed",
        params={"n": n, "r": r, "k": k},
        seed=seed,
        known_answer=False,
    )


def gen_planted(n: int, r: int, k: int, seed: int) -> GeneratedInstance:
    """T_r(n) plus one intra-part edge, minus k - 1 cross edges chosen
    away from the planted K_{r+1}; ell = r + 1, guaranteed yes."""
    if r < 2:
        raise ValueError(f"need r >= 2, got r={r}")
    if k < 2:
        raise ValueError(f"need k >= 2, got k={k}")
    if n < r + 1:
        raise ValueError(f"need n >= r + 1, got n={n}, r={r}")
    rng = SplitMix64(seed)
    parts = turan_graph_parts(n, r)
    eligible = [i for i, part in enumerate(parts) if len(part) >= 2]
    host = parts[eligible[rng.below(len(eligible))]]
    a_pos = rng.below(len(host))
    b_pos = rng.below(len(host) - 1)
    if b_pos >= a_pos:
        b_pos += 1
    a, b = sorted((host[a_pos], host[b_pos]))
    witness = [a, b]
    for i, part in enumerate(parts):
        if part is not host:
            witness.append(part[rng.below(len(part))])
    witness.sort()

    index = _CrossEdgeIndex(n, r)
    protected = frozenset(
        index.index(u, v)
        for i, u in enumerate(witness)
        for v in witness[i + 1 :]
        if (u, v) != (a, b)
    )
    doomed_idx = rng.sample_distinct(index.total, k - 1, forbidden=protected)
    doomed = [index.edge(i) for i in sorted(doomed_idx)]
    g = build_turan_graph(n, r).with_edges_added([(a, b)]).with_edges_removed(doomed)
    inst = TuranCliqueInstance(g=g, r=r, k=k, ell=r + 1)
    return GeneratedInstance(
        instance=inst,
        family="planted",
        params={"n": n, "r": r, "k": k},
        seed=seed,
        known_answer=True,
        witness=tuple(witness),
    )


XI_CASE_TAU_ZERO = "tau-zero"
XI_CASE_K_ZERO = "k-zero"


def gen_reduction_fixed_xi(
    g: Graph, ell: int, xi: int, case: str = XI_CASE_TAU_ZERO
) -> GeneratedInstance:
    """Pad the Clique question (g, ell) until floor(n/ell') = xi, then
    emit it with tau = 0 (case "tau-zero") or k = 0 (case "k-zero").

    The padded question (isolated vertices, then universal vertices each
    raising ell' by one) is equivalent to the original.
    """
    if not (1 <= xi <= ell):
        raise ValueError(f"need 1 <= xi <= ell, got xi={xi}, ell={ell}")
    if case not in (XI_CASE_TAU_ZERO, XI_CASE_K_ZERO):
        raise ValueError(f"unknown case {case!r}")
    padded = g.with_isolated_vertices(max(xi * ell - g.n, 0))
    ell_out = ell
    universal_added = 0
    while padded.n >= (xi + 1) * ell_out:
        padded = padded.with_universal_vertex()
        ell_out += 1
        universal_added += 1
    assert xi * ell_out <= padded.n < (xi + 1) * ell_out
    if case == XI_CASE_TAU_ZERO:
        inst = TuranCliqueInstance(
            g=padded, r=ell_out, k=padded.n * (padded.n - 1) // 2, ell=ell_out
        )
    else:
        inst = TuranCliqueInstance(g=padded, r=1, k=0, ell=ell_out)
    return GeneratedInstance(
        instance=inst,
        family="reduction-xi",
        params={
            "source_n": g.n,
            "source_ell": ell,
            "xi": xi,
            "case": case,
            "isolated_added": max(xi * ell - g.n, 0),
            "universal_added": universal_added,
        },
    )


def gen_reduction_fixed_tau(
    g: Graph, ell: int, tau: int, x_cap: int = 10**6
) -> GeneratedInstance:
    """Embed the Clique question (g, ell) in a complete (ell-1)-partite
    scaffold so that (G', ell - tau, 0, ell) is a valid instance.

    The scaffold part size x is the smallest integer making
    t_{ell-1}(N) - n (ell-2) x >= t_{ell-tau}(N) with N = (ell-1) x,
    found by upward search in exact arithmetic.  The emitted question is
    equivalent to the source: the scaffold remainder is (ell-1)-partite,
    so any clique of size ell must live inside the embedded copy of g.
    """
    if tau < 2:
        raise ValueError(f"need tau >= 2, got tau={tau}")
    if ell < 2 * tau:
        raise ValueError(f"need ell >= 2 * tau, got ell={ell}, tau={tau}")
    n = g.n
    x = max(2, -(-n // (ell - 1)))
    while True:
        if x > x_cap:
            raise ValueError(f"no feasible scaffold part size below cap {x_cap}")
        big_n = (ell - 1) * x
        if turan_edge_count(big_n, ell - 1) - n * (ell - 2) * x >= turan_edge_count(
            big_n, ell - tau
        ):
            break
        x += 1
    scaffold = build_turan_graph(big_n, ell - 1)
    emb_mask = (1 << n) - 1
    masks = [scaffold.neighbor_mask(v) & ~emb_mask for v in range(big_n)]
    for u in range(n):
        masks[u] = g.neighbor_mask(u)
    out = Graph.from_masks(masks)
    inst = TuranCliqueInstance(g=out, r=ell - tau, k=0, ell=ell)
    return GeneratedInstance(
        instance=inst,
        family="reduction-tau",
        params={"source_n": n, "ell": ell, "tau": tau, "x": x, "scaffold_n": big_n},
    )


def gen_random_graph(n: int, p: float, seed: int) -> Graph:
    """Seeded Erdos-Renyi style graph; utility for tests and benchmarks."""
    rng = SplitMix64(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.chance(p)]
    return Graph.from_edges(n, edges)
