"""Clique finding in graphs near the Turan edge bound.

A graph with at least t_r(n) - k edges compresses in linear time to an
equivalent Clique instance on at most 5k vertices; larger targets shift
parameters first.  The package bundles the compression pipeline, an
exact branch-and-bound solver, brute-force oracles, seeded instance
generators, and a batch CLI.
"""

from .compression import (
    CliqueInstance,
    CompressionTrace,
    TuranCliqueInstance,
    compress_clique,
    compress_independent_set,
    independent_set_target,
    lift_witness,
    replay_trace,
    rule1_remove_untouched_part,
    rule2_dedupe_untouched_vertices,
    shift_parameters,
)
from .generators import (
    GeneratedInstance,
    SplitMix64,
    gen_perturbed_turan,
    gen_planted,
    gen_random_graph,
    gen_reduction_fixed_tau,
    gen_reduction_fixed_xi,
)
from .graph import (
    Graph,
    ParseError,
    average_degree,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    induced_subgraph,
    parse_graph,
    path_graph,
    serialize_graph,
    to_dimacs,
    to_edge_list,
)
from .oracle import (
    brute_force_max_clique,
    brute_force_max_independent_set,
    max_edges_clique_free,
    turan_maximizer_unique,
)
from .partition import (
    EditReport,
    Partition,
    PartitionVerification,
    erdos_partition,
    multipartite_closure,
    verify_partition,
)
from .solver import (
    BudgetExceededError,
    Decision,
    MaxCliqueResult,
    SolveStats,
    max_clique_exact,
    solve_turan_clique,
    solve_turan_is,
    verify_witness,
)
from .turan import (
    AvgDegreeXiReport,
    SurplusCheck,
    TuranParams,
    avg_degree_xi_check,
    build_turan_graph,
    edge_surplus_check,
    turan_edge_count,
    turan_gap,
    turan_graph_parts,
)

__version__ = "0.1.0"

__all__ = [
    "AvgDegreeXiReport",
    "BudgetExceededError",
    "CliqueInstance",
    "CompressionTrace",
    "Decision",
    "EditReport",
    "GeneratedInstance",
    "Graph",
    "MaxCliqueResult",
    "ParseError",
    "Partition",
    "PartitionVerification",
    "SolveStats",
    "SplitMix64",
    "SurplusCheck",
    "TuranCliqueInstance",
    "TuranParams",
    "average_degree",
    "avg_degree_xi_check",
    "brute_force_max_clique",
    "brute_force_max_independent_set",
    "build_turan_graph",
    "complement",
    "complete_graph",
    "compress_clique",
    "compress_independent_set",
    "cycle_graph",
    "edge_surplus_check",
    "empty_graph",
    "erdos_partition",
    "gen_perturbed_turan",
    "gen_planted",
    "gen_random_graph",
    "gen_reduction_fixed_tau",
    "gen_reduction_fixed_xi",
    "independent_set_target",
    "induced_subgraph",
    "lift_witness",
    "max_clique_exact",
    "max_edges_clique_free",
    "multipartite_closure",
    "parse_graph",
    "path_graph",
    "replay_trace",
    "rule1_remove_untouched_part",
    "rule2_dedupe_untouched_vertices",
    "serialize_graph",
    "shift_parameters",
    "solve_turan_clique",
    "solve_turan_is",
    "to_dimacs",
    "to_edge_list",
    "turan_edge_count",
    "turan_gap",
    "turan_graph_parts",
    "turan_maximizer_unique",
    "verify_partition",
    "verify_witness",
]
