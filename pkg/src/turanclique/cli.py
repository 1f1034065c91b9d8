"""Batch command-line front end.

Subcommands: solve, compress, generate, verify, bench.  stdout carries
exactly one JSON document (CSV for bench) with a schema_version field;
anything human-oriented goes to stderr.  Exit codes: 0 decided, 1 usage
or invariant error, 2 node budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import bench as bench_mod
from .compression import (
    TuranCliqueInstance,
    compress_clique,
    compress_independent_set,
    independent_set_target,
    shift_parameters,
)
from .graph import parse_graph, to_dimacs
from .generators import (
    XI_CASE_K_ZERO,
    XI_CASE_TAU_ZERO,
    gen_perturbed_turan,
    gen_planted,
    gen_reduction_fixed_tau,
    gen_reduction_fixed_xi,
)
from .oracle import brute_force_max_clique, max_edges_clique_free, turan_maximizer_unique
from .solver import BudgetExceededError, solve_turan_clique, solve_turan_is
from .turan import edge_surplus_check, turan_edge_count

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2


class _Parser(argparse.ArgumentParser):
    """argparse maps usage errors to exit code 2; reserve that for budget."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(payload: dict) -> None:
    payload = {"schema_version": SCHEMA_VERSION, **payload}
    json.dump(payload, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _fail(message: str, **extra) -> int:
    print(f"error: {message}", file=sys.stderr)
    _emit({"error": message, **extra})
    return EXIT_USAGE


def _load_graph(path: str, fmt: str):
    return parse_graph(Path(path).read_bytes(), fmt)


def _build_instance(args) -> TuranCliqueInstance | int:
    g = _load_graph(args.graph, args.format)
    check = edge_surplus_check(g, args.r, args.k)
    if not check.valid:
        return _fail(
            f"invalid instance: m={g.m} < t_{args.r}({g.n}) - {args.k}, slack={check.slack}",
            slack=check.slack,
        )
    try:
        return TuranCliqueInstance(g=g, r=args.r, k=args.k, ell=args.ell)
    except ValueError as exc:
        return _fail(str(exc))


def _add_graph_args(parser, with_instance=True):
    parser.add_argument("--graph", required=True, help="path to the input graph")
    parser.add_argument(
        "--format",
        choices=["dimacs", "edge-list"],
        default="dimacs",
        help="input format (default dimacs)",
    )
    if with_instance:
        parser.add_argument("--r", type=int, help="Turan part-count parameter")
        parser.add_argument("--k", type=int, help="edge deficit budget")
        parser.add_argument("--ell", type=int, help="clique size sought")
        parser.add_argument(
            "--is-mode",
            action="store_true",
            help="independent-set mode: target ceil(n/(d+1)) + t",
        )
        parser.add_argument("--t", type=int, help="independent-set surplus (with --is-mode)")


def _check_mode_args(parser, args) -> None:
    if args.is_mode:
        if args.t is None:
            parser.error("--is-mode requires --t")
    else:
        missing = [name for name in ("r", "k", "ell") if getattr(args, name) is None]
        if missing:
            parser.error(f"missing {', '.join('--' + m for m in missing)} (or use --is-mode)")


def cmd_solve(parser, args) -> int:
    _check_mode_args(parser, args)
    try:
        if args.is_mode:
            g = _load_graph(args.graph, args.format)
            decision = solve_turan_is(g, args.t, budget=args.budget, threads=args.threads)
            target = independent_set_target(g, args.t)
            extra = {"mode": "independent_set", "target": target}
        else:
            inst = _build_instance(args)
            if isinstance(inst, int):
                return inst
            decision = solve_turan_clique(inst, budget=args.budget, threads=args.threads)
            extra = {"mode": "clique", "target": inst.ell}
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit({"error": str(exc), "budget_exceeded": True})
        return EXIT_BUDGET
    except ValueError as exc:
        return _fail(str(exc))
    payload = {**decision.to_json_dict(), **extra}
    if args.emit_partition and decision.compression is not None:
        trace = decision.compression.trace
        payload["partition"] = (
            trace.partition.to_json_dict() if trace.partition is not None else None
        )
    if args.emit_trace and decision.compression is not None:
        payload["trace"] = decision.compression.trace.summary()
    _emit(payload)
    return EXIT_OK


def cmd_compress(parser, args) -> int:
    _check_mode_args(parser, args)
    started = time.perf_counter()
    try:
        if args.is_mode:
            g = _load_graph(args.graph, args.format)
            ci = compress_independent_set(g, args.t)
            input_desc = {
                "n": g.n,
                "m": g.m,
                "t": args.t,
                "target": independent_set_target(g, args.t),
                "mode": "independent_set",
            }
        else:
            inst = _build_instance(args)
            if isinstance(inst, int):
                return inst
            input_desc = {**inst.describe(), "mode": "clique"}
            if inst.tau > 1:
                inst = shift_parameters(inst)
                input_desc["shifted"] = inst.describe()
            ci = compress_clique(inst)
    except ValueError as exc:
        return _fail(str(exc))
    wall = time.perf_counter() - started
    payload = {
        "input": input_desc,
        "output": ci.describe(),
        "trace": ci.trace.summary(),
        "wall_time_s": wall,
    }
    if args.emit_partition and ci.trace.partition is not None:
        payload["partition"] = ci.trace.partition.to_json_dict()
    if args.emit_trace:
        payload["trace_detail"] = {
            "removed_parts": list(ci.trace.removed_parts),
            "part_representatives": list(ci.trace.part_representatives),
            "removed_vertices": list(ci.trace.removed_vertices),
            "kept": list(ci.trace.kept),
        }
    _emit(payload)
    return EXIT_OK


def cmd_generate(parser, args) -> int:
    try:
        if args.family == "perturbed":
            if None in (args.n, args.r, args.k, args.seed):
                parser.error("--family perturbed requires --n --r --k --seed")
            gi = gen_perturbed_turan(args.n, args.r, args.k, args.seed)
        elif args.family == "planted":
            if None in (args.n, args.r, args.k, args.seed):
                parser.error("--family planted requires --n --r --k --seed")
            gi = gen_planted(args.n, args.r, args.k, args.seed)
        elif args.family == "reduction-xi":
            if args.source is None or args.ell is None or args.xi is None:
                parser.error("--family reduction-xi requires --source --ell --xi")
            src = _load_graph(args.source, args.format)
            gi = gen_reduction_fixed_xi(src, args.ell, args.xi, case=args.case)
        else:  # reduction-tau
            if args.source is None or args.ell is None or args.tau is None:
                parser.error("--family reduction-tau requires --source --ell --tau")
            src = _load_graph(args.source, args.format)
            gi = gen_reduction_fixed_tau(src, args.ell, args.tau)
    except ValueError as exc:
        return _fail(str(exc))
    sidecar = gi.sidecar()
    sidecar["instance"] = gi.instance.describe()
    out = Path(args.out)
    out.write_text(to_dimacs(gi.instance.g))
    out.with_suffix(out.suffix + ".json").write_text(
        json.dumps({"schema_version": SCHEMA_VERSION, **sidecar}, indent=2, sort_keys=True) + "\n"
    )
    _emit({**sidecar, "dimacs_path": str(out)})
    return EXIT_OK


def cmd_verify(parser, args) -> int:
    if args.max_clique_graph is not None:
        g = _load_graph(args.max_clique_graph, args.format)
        try:
            size, witness = brute_force_max_clique(g)
        except ValueError as exc:
            return _fail(str(exc))
        _emit({"max_clique": {"size": size, "witness": list(witness)}})
        return EXIT_OK
    if not args.turan_table:
        parser.error("nothing to verify: use --turan-table or --max-clique-graph")
    checks = []
    all_pass = True
    for n in range(1, args.max_n + 1):
        for r in range(1, n + 1):
            formula = turan_edge_count(n, r)
            oracle_value = max_edges_clique_free(n, r)
            entry = {"n": n, "r": r, "formula": formula, "oracle": oracle_value,
                     "match": formula == oracle_value}
            if n <= args.uniqueness_max_n:
                entry["unique_maximizer"] = turan_maximizer_unique(n, r)
                all_pass = all_pass and entry["unique_maximizer"]
            all_pass = all_pass and entry["match"]
            checks.append(entry)
    _emit({"turan_table": checks, "all_pass": all_pass})
    return EXIT_OK if all_pass else EXIT_USAGE


def cmd_bench(parser, args) -> int:
    ns = [int(x) for x in args.n_list.split(",") if x]
    try:
        if args.family in ("perturbed", "planted"):
            if args.r is None or args.k is None:
                parser.error(f"--family {args.family} requires --r --k")
            rows = bench_mod.bench_clique_family(
                args.family, ns, args.r, args.k, args.seed,
                repeats=args.repeats, solve=args.solve, budget=args.budget,
            )
        else:  # is
            ts = [int(x) for x in args.t_list.split(",") if x]
            rows = bench_mod.bench_independent_set(
                ns, ts, args.p, args.seed,
                repeats=args.repeats, solve=args.solve, budget=args.budget,
            )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(bench_mod.rows_to_csv(rows))
    if args.plot is not None:
        bench_mod.plot_kernel_trend(rows, args.plot)
        print(f"plot written to {args.plot}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="turanclique", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="decide a clique / independent-set instance")
    _add_graph_args(p_solve)
    p_solve.add_argument("--budget", type=int, default=None, help="search node budget")
    p_solve.add_argument("--threads", type=int, default=1, help="solver worker threads")
    p_solve.add_argument("--emit-partition", action="store_true")
    p_solve.add_argument("--emit-trace", action="store_true")

    p_compress = sub.add_parser("compress", help="run the compression only")
    _add_graph_args(p_compress)
    p_compress.add_argument("--emit-partition", action="store_true")
    p_compress.add_argument("--emit-trace", action="store_true")

    p_gen = sub.add_parser("generate", help="emit a benchmark instance")
    p_gen.add_argument(
        "--family",
        required=True,
        choices=["perturbed", "planted", "reduction-xi", "reduction-tau"],
    )
    p_gen.add_argument("--n", type=int)
    p_gen.add_argument("--r", type=int)
    p_gen.add_argument("--k", type=int)
    p_gen.add_argument("--seed", type=int)
    p_gen.add_argument("--source", help="source graph for reduction families")
    p_gen.add_argument("--format", choices=["dimacs", "edge-list"], default="dimacs")
    p_gen.add_argument("--ell", type=int)
    p_gen.add_argument("--xi", type=int)
    p_gen.add_argument("--tau", type=int)
    p_gen.add_argument("--case", choices=[XI_CASE_TAU_ZERO, XI_CASE_K_ZERO],
                       default=XI_CASE_TAU_ZERO)
    p_gen.add_argument("--out", required=True, help="DIMACS output path")

    p_verify = sub.add_parser("verify", help="run brute-force oracle checks")
    p_verify.add_argument("--turan-table", action="store_true",
                          help="check edge-count formula against exhaustive enumeration")
    p_verify.add_argument("--max-n", type=int, default=7)
    p_verify.add_argument("--uniqueness-max-n", type=int, default=6)
    p_verify.add_argument("--max-clique-graph", help="brute-force a small graph")
    p_verify.add_argument("--format", choices=["dimacs", "edge-list"], default="dimacs")

    p_bench = sub.add_parser("bench", help="timing harness (CSV on stdout)")
    p_bench.add_argument("--family", required=True, choices=["perturbed", "planted", "is"])
    p_bench.add_argument("--n-list", required=True, help="comma-separated sizes")
    p_bench.add_argument("--r", type=int)
    p_bench.add_argument("--k", type=int)
    p_bench.add_argument("--t-list", default="1", help="comma-separated t values (is family)")
    p_bench.add_argument("--p", type=float, default=0.3, help="edge density (is family)")
    p_bench.add_argument("--seed", type=int, default=1)
    p_bench.add_argument("--repeats", type=int, default=5)
    p_bench.add_argument("--solve", action="store_true", help="also time end-to-end solving")
    p_bench.add_argument("--budget", type=int, default=None)
    p_bench.add_argument("--plot", help="write a kernel-size trend PNG")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "solve": cmd_solve,
        "compress": cmd_compress,
        "generate": cmd_generate,
        "verify": cmd_verify,
        "bench": cmd_bench,
    }
    try:
        return handlers[args.command](parser, args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
