"""Timing harness behind the ``bench`` CLI subcommand.

Each measurement point is repeated (default 5 times) and the median is
reported.  Rows carry both the clique-side fields (k) and the
independent-set-side fields (t, t*d^2); inapplicable fields stay empty
in the CSV.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

from .compression import compress_clique, compress_independent_set
from .generators import gen_perturbed_turan, gen_planted, gen_random_graph
from .graph import average_degree
from .solver import solve_turan_clique, solve_turan_is

CSV_COLUMNS = (
    "schema_version",
    "family",
    "n",
    "m",
    "k",
    "t",
    "td2",
    "compress_ns",
    "kernel_vertices",
    "solve_ns",
)

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class BenchRow:
    family: str
    n: int
    m: int
    k: int | None
    t: int | None
    td2: float | None
    compress_ns: int
    kernel_vertices: int
    solve_ns: int | None

    def to_csv_fields(self) -> list[str]:
        def fmt(value) -> str:
            if value is None:
                return ""
            if isinstance(value, float):
                return f"{value:.6g}"
            return str(value)

        return [
            str(SCHEMA_VERSION),
            self.family,
            str(self.n),
            str(self.m),
            fmt(self.k),
            fmt(self.t),
            fmt(self.td2),
            str(self.compress_ns),
            str(self.kernel_vertices),
            fmt(self.solve_ns),
        ]


def rows_to_csv(rows: list[BenchRow]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    lines.extend(",".join(row.to_csv_fields()) for row in rows)
    return "\n".join(lines) + "\n"


def _median_ns(fn, repeats: int) -> tuple[int, object]:
    times = []
    result = None
    for _ in range(repeats):
        start = time.perf_counter_ns()
        result = fn()
        times.append(time.perf_counter_ns() - start)
    return int(statistics.median(times)), result


def _kernel_size(ci) -> int:
    return ci.graph.n if ci.is_open else 0


def bench_clique_family(
    family: str,
    ns: list[int],
    r: int,
    k: int,
    seed: int,
    repeats: int = 5,
    solve: bool = False,
    budget: int | None = None,
) -> list[BenchRow]:
    """Compression (and optionally end-to-end solve) timings per size."""
    gen = {"perturbed": gen_perturbed_turan, "planted": gen_planted}[family]
    rows = []
    for n in ns:
        inst = gen(n, r, k, seed).instance
        compress_ns, ci = _median_ns(lambda: compress_clique(inst), repeats)
        solve_ns = None
        if solve:
            solve_ns, _ = _median_ns(
                lambda: solve_turan_clique(inst, budget=budget), repeats
            )
        rows.append(
            BenchRow(
                family=family,
                n=inst.g.n,
                m=inst.g.m,
                k=k,
                t=None,
                td2=None,
                compress_ns=compress_ns,
                kernel_vertices=_kernel_size(ci),
                solve_ns=solve_ns,
            )
        )
    return rows


def bench_independent_set(
    ns: list[int],
    ts: list[int],
    p: float,
    seed: int,
    repeats: int = 5,
    solve: bool = False,
    budget: int | None = None,
) -> list[BenchRow]:
    """Kernel sizes and timings for the independent-set wrapper.

    Records t * d^2 per point so the kernel-size trend against the
    predicted O(t d^2) bound can be plotted.
    """
    rows = []
    for i, n in enumerate(ns):
        g = gen_random_graph(n, p, seed + i)
        d = float(average_degree(g))
        for t in ts:
            compress_ns, ci = _median_ns(lambda: compress_independent_set(g, t), repeats)
            solve_ns = None
            if solve:
                solve_ns, _ = _median_ns(lambda: solve_turan_is(g, t, budget=budget), repeats)
            rows.append(
                BenchRow(
                    family="is",
                    n=g.n,
                    m=g.m,
                    k=None,
                    t=t,
                    td2=t * d * d,
                    compress_ns=compress_ns,
                    kernel_vertices=_kernel_size(ci),
                    solve_ns=solve_ns,
                )
            )
    return rows


def plot_kernel_trend(rows: list[BenchRow], path: str) -> None:
    """Scatter kernel size against t * d^2 for independent-set rows."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    xs = [row.td2 for row in rows if row.td2 is not None]
    ys = [row.kernel_vertices for row in rows if row.td2 is not None]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.scatter(xs, ys, s=18, alpha=0.7)
    ax.set_xlabel("t * d^2")
    ax.set_ylabel("kernel vertices")
    ax.set_title("Independent-set compression size vs t*d^2")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
