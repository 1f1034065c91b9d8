"""Exact Turan numbers, Turan graph construction, and gap arithmetic.

The Turan graph T_r(n) is the complete r-partite graph on n vertices
with parts as equal as possible; t_r(n) denotes its edge count, the
maximum over all K_{r+1}-free n-vertex graphs.  Everything here is
exact integer (or rational) arithmetic; no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, average_degree, complement


def turan_part_sizes(n: int, r: int) -> list[int]:
    """Part sizes of T_r(n): n mod r parts of ceil(n/r), the rest floor(n/r)."""
    if not (1 <= r <= n):
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    q, s = divmod(n, r)
    return [q + 1] * s + [q] * (r - s)


@dataclass(frozen=True)
class TuranParams:
    """The (n, r) pair with its derived remainder s and ratio xi = floor(n/r)."""

    n: int
    r: int

    def __post_init__(self):
        if not (1 <= self.r <= self.n):
            raise ValueError(f"need 1 <= r <= n, got r={self.r}, n={self.n}")

    @property
    def s(self) -> int:
        return self.n % self.r

    @property
    def xi(self) -> int:
        return self.n // self.r


def turan_edge_count(n: int, r: int) -> int:
    """Exact t_r(n), via the part-size sum (always an integer).

    Equals (n^2 - sum of squared part sizes) / 2; the closed rational
    form (1 - 1/r) n^2/2 - (s/2)(1 - s/r) agrees but needs fractions.
    """
    if not (1 <= r <= n):
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    q, s = divmod(n, r)
    sum_sq = s * (q + 1) * (q + 1) + (r - s) * q * q
    return (n * n - sum_sq) // 2


def turan_edge_count_closed_form(n: int, r: int) -> Fraction:
    """The closed rational form of t_r(n); exists to cross-check the sum."""
    if not (1 <= r <= n):
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    s = n % r
    return Fraction(r - 1, r) * Fraction(n * n, 2) - Fraction(s, 2) * (1 - Fraction(s, r))


def build_turan_graph(n: int, r: int) -> Graph:
    """The complete r-partite graph T_r(n), vertices numbered part-by-part."""
    sizes = turan_part_sizes(n, r)
    full = (1 << n) - 1
    masks = [0] * n
    start = 0
    for size in sizes:
        part_mask = ((1 << size) - 1) << start
        row = full ^ part_mask
        for u in range(start, start + size):
            masks[u] = row
        start += size
    return Graph(n, masks, None, turan_edge_count(n, r))


def turan_graph_parts(n: int, r: int) -> list[tuple[int, ...]]:
    """Vertex sets of the parts of build_turan_graph(n, r)."""
    out = []
    start = 0
    for size in turan_part_sizes(n, r):
        out.append(tuple(range(start, start + size)))
        start += size
    return out


def turan_gap(n: int, r: int, ell: int) -> int:
    """t_ell(n) - t_r(n), exactly; requires 1 <= r < ell <= n.

    Always >= ell - r because t_i(n) is strictly increasing in i.
    """
    if not (1 <= r < ell <= n):
        raise ValueError(f"need 1 <= r < ell <= n, got r={r}, ell={ell}, n={n}")
    return turan_edge_count(n, ell) - turan_edge_count(n, r)


@dataclass(frozen=True)
class SurplusCheck:
    valid: bool
    slack: int


def edge_surplus_check(g: Graph, r: int, k: int) -> SurplusCheck:
    """Whether m >= t_r(n) - k, with slack = m - (t_r(n) - k)."""
    slack = g.m - (turan_edge_count(g.n, r) - k)
    return SurplusCheck(valid=slack >= 0, slack=slack)


class MathInvariantError(AssertionError):
    """A provable implication failed; indicates a library bug."""


@dataclass(frozen=True)
class AvgDegreeXiReport:
    """Concrete check of the two implications tying edge surplus to the
    complement's average degree (with xi = floor(n/r)):

    * m >= t_r(n)  implies  avg_deg(complement) <= xi
    * avg_deg(complement) <= xi - 1  implies  m >= t_r(n)
    """

    meets_turan_bound: bool
    complement_avg_deg_le_xi: bool
    complement_avg_deg_le_xi_minus_1: bool
    surplus_implied: bool


def avg_degree_xi_check(g: Graph, r: int) -> AvgDegreeXiReport:
    """Evaluate both implications for this graph; raise if either fails.

    A failure is mathematically impossible, so it is surfaced as a
    MathInvariantError rather than reported.
    """
    n = g.n
    if not (1 <= r <= n):
        raise ValueError(f"need 1 <= r <= n, got r={r}, n={n}")
    xi = n // r
    t = turan_edge_count(n, r)
    comp_m = n * (n - 1) // 2 - g.m
    # avg degree of the complement is 2 comp_m / n; compare without division
    meets_bound = g.m >= t
    deg_le_xi = 2 * comp_m <= xi * n
    deg_le_xi_minus_1 = 2 * comp_m <= (xi - 1) * n
    if meets_bound and not deg_le_xi:
        raise MathInvariantError(
            f"m={g.m} >= t_{r}({n})={t} but complement average degree exceeds xi={xi}"
        )
    if deg_le_xi_minus_1 and not meets_bound:
        raise MathInvariantError(
            f"complement average degree <= xi-1={xi - 1} but m={g.m} < t_{r}({n})={t}"
        )
    return AvgDegreeXiReport(
        meets_turan_bound=meets_bound,
        complement_avg_deg_le_xi=deg_le_xi,
        complement_avg_deg_le_xi_minus_1=deg_le_xi_minus_1,
        surplus_implied=deg_le_xi_minus_1 and meets_bound,
    )


def complement_average_degree(g: Graph) -> Fraction:
    """Average degree of the complement graph, exact."""
    return average_degree(complement(g))
