"""Simple undirected graph with dense vertex ids 0..n-1.

Two storage backends sit behind one interface: per-vertex bitmasks
(Python ints) for graphs up to a configurable vertex threshold, and
sorted neighbor tuples above it.  All algorithms in this package work
through the public accessors, so the backend is an implementation
detail.  Graphs are immutable after construction; the ``with_*``
helpers return modified copies.

Supported file formats:

* DIMACS clique format: ``c`` comment lines, one ``p edge <n> <m>``
  header, ``e <u> <v>`` edge lines with 1-based vertex ids.
* Plain edge list: one ``<u> <v>`` pair per line, 0-based ids, ``#``
  comments.  The serializer writes a ``# n <count>`` comment so that
  trailing isolated vertices survive a round trip.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple

DEFAULT_BITSET_THRESHOLD = 100_000

# t_r(n) ~ n^2/2 overflows fixed 64-bit arithmetic near n ~ 6.1e9; Python
# ints are unbounded, but the id cap keeps every count within 128 bits.
MAX_VERTICES = 2**31 - 1


class ParseError(ValueError):
    """Raised on malformed graph input; carries the offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("_n", "_m", "_masks", "_lists")

    def __init__(self, n: int, masks: list[int] | None, lists: tuple[tuple[int, ...], ...] | None, m: int):
        self._n = n
        self._m = m
        self._masks = masks
        self._lists = lists

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        *,
        bitset_threshold: int = DEFAULT_BITSET_THRESHOLD,
    ) -> "Graph":
        """Build a graph from an iterable of (u, v) pairs.

        Duplicate edges collapse; self-loops and out-of-range ids raise
        ValueError.
        """
        if n < 0 or n > MAX_VERTICES:
            raise ValueError(f"vertex count {n} out of supported range")
        if n <= bitset_threshold:
            masks = [0] * n
            for u, v in edges:
                if u == v:
                    raise ValueError(f"self-loop at vertex {u}")
                if not (0 <= u < n and 0 <= v < n):
                    raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            m = sum(mask.bit_count() for mask in masks) // 2
            return cls(n, masks, None, m)
        neigh: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            neigh[u].add(v)
            neigh[v].add(u)
        lists = tuple(tuple(sorted(s)) for s in neigh)
        m = sum(len(t) for t in lists) // 2
        return cls(n, None, lists, m)

    @classmethod
    def from_masks(cls, masks: list[int]) -> "Graph":
        """Build directly from per-vertex adjacency bitmasks (trusted input)."""
        n = len(masks)
        m = sum(mask.bit_count() for mask in masks) // 2
        return cls(n, list(masks), None, m)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def is_dense(self) -> bool:
        return self._masks is not None

    def vertices(self) -> range:
        return range(self._n)

    def degree(self, u: int) -> int:
        if self._masks is not None:
            return self._masks[u].bit_count()
        return len(self._lists[u])

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self._n and 0 <= v < self._n):
            raise ValueError(f"vertex pair ({u}, {v}) out of range")
        if self._masks is not None:
            return bool((self._masks[u] >> v) & 1)
        import bisect

        row = self._lists[u]
        i = bisect.bisect_left(row, v)
        return i < len(row) and row[i] == v

    def neighbors(self, u: int) -> Iterator[int]:
        if self._masks is not None:
            return _iter_bits(self._masks[u])
        return iter(self._lists[u])

    def neighbor_mask(self, u: int) -> int:
        if self._masks is not None:
            return self._masks[u]
        mask = 0
        for v in self._lists[u]:
            mask |= 1 << v
        return mask

    def adjacency_masks(self) -> list[int]:
        """Per-vertex bitmasks; built on the fly for the sparse backend."""
        if self._masks is not None:
            return self._masks
        return [self.neighbor_mask(u) for u in range(self._n)]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        if self._masks is not None:
            for u in range(self._n):
                yield from ((u, v) for v in _iter_bits(self._masks[u] >> (u + 1) << (u + 1)))
        else:
            for u in range(self._n):
                for v in self._lists[u]:
                    if v > u:
                        yield (u, v)

    def with_edges_added(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        masks = list(self.adjacency_masks())
        m = self._m
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not ((masks[u] >> v) & 1):
                masks[u] |= 1 << v
                masks[v] |= 1 << u
                m += 1
        return Graph(self._n, masks, None, m)

    def with_edges_removed(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        masks = list(self.adjacency_masks())
        m = self._m
        for u, v in pairs:
            if (masks[u] >> v) & 1:
                masks[u] &= ~(1 << v)
                masks[v] &= ~(1 << u)
                m -= 1
        return Graph(self._n, masks, None, m)

    def with_isolated_vertices(self, count: int) -> "Graph":
        masks = list(self.adjacency_masks()) + [0] * count
        return Graph(self._n + count, masks, None, self._m)

    def with_universal_vertex(self) -> "Graph":
        """Append a vertex adjacent to every existing vertex."""
        n = self._n
        masks = [mask | (1 << n) for mask in self.adjacency_masks()]
        masks.append((1 << n) - 1)
        return Graph(n + 1, masks, None, self._m + n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        if self._n != other._n or self._m != other._m:
            return False
        return self.adjacency_masks() == other.adjacency_masks()

    __hash__ = None  # mutable-style equality semantics

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


# ---------------------------------------------------------------------------
# Constructors for common graphs


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n, None, 0)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    masks = [full ^ (1 << u) for u in range(n)]
    return Graph(n, masks, None, n * (n - 1) // 2)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


# ---------------------------------------------------------------------------
# Core operations


def complement(g: Graph) -> Graph:
    """Graph with edge {u, v} iff u != v and {u, v} not in g."""
    n = g.n
    full = (1 << n) - 1
    masks = [(full ^ g.neighbor_mask(u)) & ~(1 << u) for u in range(n)]
    return Graph(n, masks, None, n * (n - 1) // 2 - g.m)


class InducedSubgraph(NamedTuple):
    graph: Graph
    old_to_new: dict[int, int]
    new_to_old: tuple[int, ...]


def induced_subgraph(g: Graph, s: Iterable[int]) -> InducedSubgraph:
    """Subgraph induced on vertex set ``s`` with the id remapping table.

    New ids follow the sorted order of the old ids.
    """
    kept = sorted(set(s))
    if kept and not (0 <= kept[0] and kept[-1] < g.n):
        raise ValueError(f"vertex set not within 0..{g.n - 1}")
    old_to_new = {old: new for new, old in enumerate(kept)}
    keep_mask = 0
    for old in kept:
        keep_mask |= 1 << old
    masks = [0] * len(kept)
    for new, old in enumerate(kept):
        row = g.neighbor_mask(old) & keep_mask
        out = 0
        for v in _iter_bits(row):
            out |= 1 << old_to_new[v]
        masks[new] = out
    m = sum(mask.bit_count() for mask in masks) // 2
    return InducedSubgraph(Graph(len(kept), masks, None, m), old_to_new, tuple(kept))


def average_degree(g: Graph) -> Fraction:
    """Average vertex degree 2m/n as an exact rational."""
    if g.n == 0:
        raise ValueError("average degree undefined for the empty vertex set")
    return Fraction(2 * g.m, g.n)


# ---------------------------------------------------------------------------
# Parsing / serialization


def parse_dimacs(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem header", lineno)
            if len(fields) != 4 or fields[1] != "edge":
                raise ParseError(f"malformed header {line!r}, expected 'p edge <n> <m>'", lineno)
            try:
                n = int(fields[2])
                declared_m = int(fields[3])
            except ValueError:
                raise ParseError(f"malformed header {line!r}: non-integer counts", lineno) from None
            if n < 0 or declared_m < 0:
                raise ParseError("negative counts in header", lineno)
        elif fields[0] == "e":
            if n is None:
                raise ParseError("edge line before problem header", lineno)
            if len(fields) != 3:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            try:
                u = int(fields[1])
                v = int(fields[2])
            except ValueError:
                raise ParseError(f"malformed edge line {line!r}: non-integer ids", lineno) from None
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex id out of range in edge ({u}, {v}), n={n}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise ParseError("missing 'p edge <n> <m>' header", 0)
    return Graph.from_edges(n, edges)


def parse_edge_list(text: str) -> Graph:
    edges: list[tuple[int, int]] = []
    hinted_n = 0
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            fields = line[1:].split()
            if len(fields) == 2 and fields[0] == "n" and fields[1].isdigit():
                hinted_n = max(hinted_n, int(fields[1]))
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"malformed edge line {line!r}, expected '<u> <v>'", lineno)
        try:
            u = int(fields[0])
            v = int(fields[1])
        except ValueError:
            raise ParseError(f"malformed edge line {line!r}: non-integer ids", lineno) from None
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if u < 0 or v < 0:
            raise ParseError(f"vertex id out of range in edge ({u}, {v})", lineno)
        max_id = max(max_id, u, v)
        edges.append((u, v))
    n = max(max_id + 1, hinted_n)
    return Graph.from_edges(n, edges)


def parse_graph(data: str | bytes, fmt: str) -> Graph:
    """Parse a graph from text or bytes in the named format.

    ``fmt`` is ``"dimacs"`` or ``"edge-list"`` (underscore accepted).
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    fmt = fmt.replace("_", "-")
    if fmt == "dimacs":
        return parse_dimacs(data)
    if fmt == "edge-list":
        return parse_edge_list(data)
    raise ValueError(f"unknown graph format {fmt!r}")


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def to_edge_list(g: Graph) -> str:
    lines = [f"# n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def serialize_graph(g: Graph, fmt: str) -> str:
    fmt = fmt.replace("_", "-")
    if fmt == "dimacs":
        return to_dimacs(g)
    if fmt == "edge-list":
        return to_edge_list(g)
    raise ValueError(f"unknown graph format {fmt!r}")
