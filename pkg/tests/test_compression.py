import random

import pytest

from turanclique import (
    CliqueInstance,
    Graph,
    TuranCliqueInstance,
    brute_force_max_clique,
    brute_force_max_independent_set,
    build_turan_graph,
    complete_graph,
    compress_clique,
    compress_independent_set,
    cycle_graph,
    empty_graph,
    erdos_partition,
    gen_perturbed_turan,
    gen_planted,
    independent_set_target,
    lift_witness,
    max_clique_exact,
    multipartite_closure,
    replay_trace,
    rule1_remove_untouched_part,
    rule2_dedupe_untouched_vertices,
    shift_parameters,
    to_dimacs,
    turan_edge_count,
    turan_gap,
    verify_witness,
)
from tests.conftest import random_graph, wrap_as_instance


def decide(ci: CliqueInstance) -> bool:
    """Ground-truth answer of a compression output (kernels are tiny)."""
    if ci.kind == "trivially_yes":
        return True
    if ci.kind == "trivially_no":
        return False
    return brute_force_max_clique(ci.graph)[0] >= ci.ell


class TestCompressClique:
    def test_perturbed_turan_is_no_instance(self):
        g = build_turan_graph(9, 3).with_edges_removed([(0, 3)])
        inst = TuranCliqueInstance(g=g, r=3, k=1, ell=4)
        assert brute_force_max_clique(g)[0] == 3  # oracle: source answer NO
        ci = compress_clique(inst)
        if ci.is_open:
            assert ci.graph.n <= 5 * 1
        assert decide(ci) is False

    def test_intra_edge_makes_yes_instance(self):
        g = build_turan_graph(9, 3).with_edges_added([(0, 1)]).with_edges_removed([(0, 3)])
        inst = TuranCliqueInstance(g=g, r=3, k=1, ell=4)
        assert brute_force_max_clique(g)[0] >= 4  # oracle: source answer YES
        ci = compress_clique(inst)
        assert decide(ci) is True

    def test_complete_graph_yes_at_partition_stage(self):
        n = 12
        inst = TuranCliqueInstance(g=complete_graph(n), r=n, k=1, ell=n)
        ci = compress_clique(inst)
        assert ci.kind == "trivially_yes"
        assert verify_witness(inst.g, ci.witness_hint, n)

    def test_small_instance_returned_unchanged(self):
        g = build_turan_graph(9, 3)
        inst = TuranCliqueInstance(g=g, r=3, k=2, ell=4)  # n = 9 <= 5k = 10
        ci = compress_clique(inst)
        assert ci.is_open
        assert ci.graph == g and ci.ell == 4
        assert ci.trace.trivial

    def test_r_below_two_returned_unchanged(self):
        g = cycle_graph(6)
        inst = TuranCliqueInstance(g=g, r=1, k=0, ell=2)
        ci = compress_clique(inst)
        assert ci.is_open and ci.graph == g

    def test_tau_above_one_rejected(self):
        g = build_turan_graph(12, 3)
        inst = TuranCliqueInstance(g=g, r=3, k=0, ell=5)
        with pytest.raises(ValueError):
            compress_clique(inst)


class TestReductionRules:
    def test_rule1_two_applications_empty_c4(self):
        g = build_turan_graph(4, 2)  # C_4 as K_{2,2}
        part = erdos_partition(g)
        ell = 2
        g1, ell, removed = rule1_remove_untouched_part(g, part, (), ell)
        assert removed is not None and ell == 1
        # the remaining part is still independent and untouched
        from turanclique import Partition

        rest = Partition(parts=(tuple(range(g1.n)),), pivots=(0,))
        g2, ell, removed = rule1_remove_untouched_part(g1, rest, (), ell)
        assert removed is not None and ell == 0
        assert g2.n == 0  # everything deleted, answer is trivially yes

    def test_rule1_skips_touched_part(self):
        g = build_turan_graph(6, 2)
        part = erdos_partition(g)
        touched = part.parts[0]  # whole first part touched
        _, _, removed = rule1_remove_untouched_part(g, part, touched, 2)
        assert removed == 1  # only the second part qualifies

    def test_rule1_noop_without_candidates(self):
        g = complete_graph(3)
        part = erdos_partition(g)  # three singleton parts, all cliques... singletons are independent
        # touch everything so no part has an untouched vertex
        g2, ell, removed = rule1_remove_untouched_part(g, part, tuple(range(3)), 3)
        assert removed is None and ell == 3 and g2 == g

    def test_rule2_keeps_lowest_id(self):
        g = build_turan_graph(9, 3)
        part = erdos_partition(g)
        # mark nothing touched: every part collapses to its lowest vertex
        g2, removed = rule2_dedupe_untouched_vertices(g, part, ())
        assert g2.n == 3
        assert removed == (1, 2, 4, 5, 7, 8)

    def test_rule2_noop_on_single_untouched(self):
        g = build_turan_graph(6, 3)
        part = erdos_partition(g)
        touched = tuple(v for vs in part.parts for v in vs[1:])
        g2, removed = rule2_dedupe_untouched_vertices(g, part, touched)
        assert removed == () and g2 == g

    def test_rule2_postcondition(self):
        gi = gen_perturbed_turan(20, 4, 5, seed=21)
        g = gi.instance.g
        part = erdos_partition(g)
        _, report = multipartite_closure(g, part)
        x_mask = report.touched_mask
        g2, removed = rule2_dedupe_untouched_vertices(g, part, x_mask)
        removed_set = set(removed)
        for vs in part.parts:
            untouched_left = [v for v in vs if not (x_mask >> v) & 1 and v not in removed_set]
            assert len(untouched_left) <= 1


class TestShiftParameters:
    def test_gap_values_from_constructed_graphs(self):
        # the shift adds exactly the edge-count gap between the two bounds
        assert turan_gap(12, 3, 4) == 6
        assert turan_gap(5, 4, 5) == 1

    def test_shift_on_12_vertices(self):
        g = build_turan_graph(12, 3)
        inst = TuranCliqueInstance(g=g, r=3, k=0, ell=5)
        shifted = shift_parameters(inst)
        assert (shifted.r, shifted.ell) == (5, 5)
        assert shifted.k == turan_gap(12, 3, 5)
        assert shifted.tau == 0

    def test_shift_adds_small_gap(self):
        g = complete_graph(5)
        inst = TuranCliqueInstance(g=g, r=3, k=2, ell=5)
        shifted = shift_parameters(inst)
        assert shifted.k == 2 + turan_gap(5, 3, 5) and shifted.r == 5

    def test_tau_at_most_one_rejected(self):
        # ell = r + 1 is already compressible; the shift refuses it
        g = build_turan_graph(12, 3)
        with pytest.raises(ValueError):
            shift_parameters(TuranCliqueInstance(g=g, r=3, k=0, ell=4))
        with pytest.raises(ValueError):
            shift_parameters(TuranCliqueInstance(g=g, r=3, k=0, ell=3))

    def test_invariant_preserved_randomized(self):
        rng = random.Random(22)
        for _ in range(60):
            n = rng.randint(6, 24)
            r = rng.randint(1, n // 2)
            ell = rng.randint(r + 2, n)
            g = random_graph(rng, n, rng.uniform(0.2, 0.9))
            inst = wrap_as_instance(g, r, ell, extra_k=rng.randint(0, 3))
            shifted = shift_parameters(inst)  # constructor re-checks the invariant
            assert shifted.ell == inst.ell and shifted.r == inst.ell
            assert shifted.k == inst.k + turan_gap(n, inst.r, inst.ell)
            assert shifted.tau == 0


class TestSizeBoundAndEquivalence:
    def test_kernel_size_bound_randomized(self):
        rng = random.Random(23)
        for _ in range(80):
            n = rng.randint(12, 120)
            r = rng.randint(2, n // 2)
            k = rng.randint(1, 10)
            if rng.random() < 0.5:
                gi = gen_perturbed_turan(n, r, k, seed=rng.randint(0, 10**6))
            else:
                gi = gen_planted(n, r, max(k, 2), seed=rng.randint(0, 10**6))
            ci = compress_clique(gi.instance)
            if ci.is_open:
                assert ci.graph.n <= 5 * gi.instance.k

    @staticmethod
    def _assert_chain(ci, k):
        report = ci.trace.edit
        x = len(report.touched)
        a = len(report.removed)
        rr = len(report.added)
        assert ci.graph.n <= x + a
        assert x + a <= 2 * rr + a
        assert 2 * rr + a <= 5 * k

    def test_accounting_chain_randomized(self):
        # |V(out)| <= |X| + |A| <= 2|R| + |A| <= 5k, each step separately;
        # size-2 parts make fully-touched survivor parts likely
        rng = random.Random(24)
        checked = 0
        for _ in range(120):
            r = rng.randint(18, 30)
            n = 2 * r + 1
            k = rng.randint(4, 7)
            gi = gen_perturbed_turan(n, r, k, seed=rng.randint(0, 10**6))
            ci = compress_clique(gi.instance)
            if not ci.is_open or ci.trace.trivial:
                continue
            checked += 1
            self._assert_chain(ci, gi.instance.k)
        assert checked >= 20

    def test_accounting_chain_with_removed_edges(self):
        # an intra-part edge on low-degree endpoints survives into the part
        # structure, so the closure actually removes edges (A nonempty)
        for half in (15, 20, 25):
            n = 2 * half
            g = (
                build_turan_graph(n, 2)
                .with_edges_added([(0, 1)])
                .with_edges_removed([(0, half), (0, half + 1), (1, half + 2), (1, half + 3)])
            )
            inst = TuranCliqueInstance(g=g, r=2, k=3, ell=3)
            ci = compress_clique(inst)
            assert ci.is_open and not ci.trace.trivial
            assert len(ci.trace.edit.removed) == 1  # the planted intra edge
            self._assert_chain(ci, inst.k)
            # equivalence: source has a triangle through (0, 1)
            assert decide(ci) is True
            assert brute_force_max_clique(ci.graph)[0] >= ci.ell

    def test_equivalence_small_instances(self):
        rng = random.Random(25)
        for _ in range(150):
            n = rng.randint(4, 22)
            r = rng.randint(1, n - 1)
            g = random_graph(rng, n, rng.uniform(0.3, 0.95))
            ell = min(n, r + rng.choice([0, 1]))
            if ell < 1:
                continue
            inst = wrap_as_instance(g, r, ell, extra_k=rng.randint(0, 2))
            ci = compress_clique(inst)
            assert decide(ci) == (brute_force_max_clique(g)[0] >= ell)

    def test_idempotence(self):
        rng = random.Random(26)
        for _ in range(40):
            n = rng.randint(12, 80)
            r = rng.randint(2, n // 2)
            k = rng.randint(1, 8)
            gi = gen_perturbed_turan(n, r, k, seed=rng.randint(0, 10**6))
            ci = compress_clique(gi.instance)
            if not ci.is_open:
                continue
            g2 = ci.graph
            n2 = g2.n
            if n2 == 0:
                continue
            r2 = max(1, min(ci.ell, n2))
            k2 = max(1, turan_edge_count(n2, r2) - g2.m)
            if ci.ell > n2:
                continue
            again = compress_clique(TuranCliqueInstance(g=g2, r=r2, k=k2, ell=ci.ell))
            if again.is_open:
                assert again.graph.n <= n2

    def test_trace_replay_byte_identical(self):
        rng = random.Random(27)
        for _ in range(60):
            n = rng.randint(12, 60)
            r = rng.randint(2, n // 2)
            k = rng.randint(1, 6)
            gi = gen_perturbed_turan(n, r, k, seed=rng.randint(0, 10**6))
            ci = compress_clique(gi.instance)
            if not ci.is_open:
                continue
            replayed = replay_trace(gi.instance.g, ci.trace)
            assert to_dimacs(replayed) == to_dimacs(ci.graph)

    def test_lifted_witness_lands_in_source(self):
        rng = random.Random(28)
        for _ in range(40):
            n = rng.randint(10, 22)
            r = rng.randint(2, n // 2)
            gi = gen_planted(n, r, rng.randint(2, 6), seed=rng.randint(0, 10**6))
            inst = gi.instance
            ci = compress_clique(inst)
            if ci.kind == "trivially_yes":
                assert verify_witness(inst.g, ci.witness_hint, inst.ell)
            elif ci.is_open:
                size, kernel_witness = brute_force_max_clique(ci.graph)
                if size >= ci.ell:
                    lifted = lift_witness(ci, kernel_witness[: ci.ell])
                    assert verify_witness(inst.g, lifted, inst.ell)


class TestCompressIndependentSet:
    def test_three_triangles(self):
        g = Graph.from_edges(
            9, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (6, 7), (7, 8), (6, 8)]
        )
        assert independent_set_target(g, 1) == 4
        assert brute_force_max_independent_set(g)[0] == 3  # oracle: NO
        ci = compress_independent_set(g, 1)
        assert decide(ci) is False

    def test_empty_graph_target_exceeds_n(self):
        g = empty_graph(6)
        for t in (1, 3):
            assert independent_set_target(g, t) == 6 + t
            ci = compress_independent_set(g, t)
            assert ci.kind == "trivially_no"

    def test_c5(self):
        g = cycle_graph(5)
        assert independent_set_target(g, 1) == 3
        assert brute_force_max_independent_set(g)[0] == 2  # oracle: NO
        ci = compress_independent_set(g, 1)
        assert decide(ci) is False

    def test_t_zero_rejected(self):
        with pytest.raises(ValueError):
            compress_independent_set(cycle_graph(5), 0)

    def test_never_emits_invalid_instance(self):
        # the internal wrapping instance is constructor-validated, so the
        # sweep passes iff the r choice always satisfies the edge surplus
        rng = random.Random(29)
        for _ in range(80):
            n = rng.randint(1, 18)
            g = random_graph(rng, n, rng.uniform(0.0, 0.9))
            ci = compress_independent_set(g, rng.randint(1, 2))
            assert ci.kind in ("open", "trivially_yes", "trivially_no")

    def test_agrees_with_oracle_randomized(self):
        rng = random.Random(30)
        for _ in range(80):
            n = rng.randint(1, 18)
            t = rng.randint(1, 2)
            g = random_graph(rng, n, rng.uniform(0.0, 0.9))
            target = independent_set_target(g, t)
            truth = brute_force_max_independent_set(g)[0] >= target
            ci = compress_independent_set(g, t)
            assert decide(ci) == truth
