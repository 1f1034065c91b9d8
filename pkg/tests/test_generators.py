import random

import pytest

from turanclique import (
    SplitMix64,
    brute_force_max_clique,
    build_turan_graph,
    complete_graph,
    cycle_graph,
    edge_surplus_check,
    gen_perturbed_turan,
    gen_planted,
    gen_random_graph,
    gen_reduction_fixed_tau,
    gen_reduction_fixed_xi,
    solve_turan_clique,
    to_dimacs,
    turan_edge_count,
    verify_witness,
)
from turanclique.generators import XI_CASE_K_ZERO, XI_CASE_TAU_ZERO
from tests.conftest import random_graph


class TestSplitMix64:
    def test_known_sequence(self):
        # first outputs for seed 1234567, from the published recurrence
        rng = SplitMix64(1234567)
        first = [rng.next_u64() for _ in range(3)]
        assert first == [6457827717110365317, 3203168211198807973, 9817491932198370423]

    def test_below_is_in_range(self):
        rng = SplitMix64(99)
        for _ in range(1000):
            assert 0 <= rng.below(7) < 7

    def test_sample_distinct(self):
        rng = SplitMix64(7)
        values = rng.sample_distinct(10, 10)
        assert sorted(values) == list(range(10))
        with pytest.raises(ValueError):
            SplitMix64(7).sample_distinct(5, 6)


class TestPerturbedTuran:
    def test_zero_deletions_is_turan_graph(self):
        gi = gen_perturbed_turan(9, 3, 0, seed=77)
        assert gi.instance.g == build_turan_graph(9, 3)

    def test_all_deleted_boundary(self):
        gi = gen_perturbed_turan(9, 3, 27, seed=1)
        assert gi.instance.g.m == 0
        assert gi.instance.k == 27  # m = 0 = t_3(9) - 27, still valid

    def test_seeded_instance_is_fixed_and_answer_no(self):
        gi = gen_perturbed_turan(12, 3, 2, seed=7)
        assert gi.instance.g.m == 46  # t_3(12) - 2
        again = gen_perturbed_turan(12, 3, 2, seed=7)
        assert to_dimacs(gi.instance.g) == to_dimacs(again.instance.g)
        # a K_4 would need an intra-part edge; deletions cannot create one
        assert brute_force_max_clique(gi.instance.g)[0] <= 3
        assert gi.known_answer is False

    def test_exact_edge_count(self):
        rng = random.Random(41)
        for _ in range(40):
            n = rng.randint(3, 60)
            r = rng.randint(1, n - 1)
            k = rng.randint(0, min(12, turan_edge_count(n, r)))
            gi = gen_perturbed_turan(n, r, k, seed=rng.randint(0, 10**6))
            assert gi.instance.g.m == turan_edge_count(n, r) - k
            assert edge_surplus_check(gi.instance.g, r, k).slack == 0

    def test_k_too_large(self):
        with pytest.raises(ValueError):
            gen_perturbed_turan(9, 3, 28, seed=1)


class TestPlanted:
    def test_recorded_witness_verifies(self):
        gi = gen_planted(9, 3, 2, seed=5)
        assert gi.known_answer is True
        assert verify_witness(gi.instance.g, gi.witness, 4)

    def test_k2_is_one_add_one_remove(self):
        gi = gen_planted(12, 4, 2, seed=9)
        g = gi.instance.g
        base = build_turan_graph(12, 4)
        added = [e for e in g.edges() if not base.has_edge(*e)]
        removed = [e for e in base.edges() if not g.has_edge(*e)]
        assert len(added) == 1 and len(removed) == 1
        assert g.m == base.m

    def test_oracle_sweep_yes(self):
        rng = random.Random(42)
        for _ in range(40):
            n = rng.randint(4, 20)
            r = rng.randint(2, n - 1)
            k = rng.randint(2, 6)
            try:
                gi = gen_planted(n, r, k, seed=rng.randint(0, 10**6))
            except ValueError:
                continue  # not enough removable cross edges at this size
            assert brute_force_max_clique(gi.instance.g)[0] >= r + 1
            assert verify_witness(gi.instance.g, gi.witness, r + 1)

    def test_deterministic(self):
        a = gen_planted(30, 5, 6, seed=123)
        b = gen_planted(30, 5, 6, seed=123)
        assert to_dimacs(a.instance.g) == to_dimacs(b.instance.g)
        assert a.witness == b.witness

    def test_bad_parameters(self):
        with pytest.raises(ValueError):
            gen_planted(9, 1, 2, seed=0)
        with pytest.raises(ValueError):
            gen_planted(9, 3, 1, seed=0)
        with pytest.raises(ValueError):
            gen_planted(3, 3, 2, seed=0)


class TestReductionFixedXi:
    def test_k3_no_padding_needed(self):
        gi = gen_reduction_fixed_xi(complete_graph(3), 3, 1)
        inst = gi.instance
        assert inst.g.n == 3  # 3 <= |V| < 6 already
        assert inst.ell == 3
        assert inst.tau == 0 and inst.r == inst.ell
        assert solve_turan_clique(inst).answer is True

    def test_isolated_then_universal_padding(self):
        g = complete_graph(3).with_isolated_vertices(5)  # n = 8
        gi = gen_reduction_fixed_xi(g, 3, 2)
        inst = gi.instance
        assert inst.g.n // inst.ell == 2
        # source has K_3, so the padded question is still a yes
        assert solve_turan_clique(inst).answer is True

    def test_window_postcondition_holds(self):
        rng = random.Random(43)
        for _ in range(60):
            n = rng.randint(1, 12)
            g = random_graph(rng, n, rng.uniform(0.2, 0.9))
            xi = rng.randint(1, 3)
            ell = rng.randint(xi, max(xi, min(n, 8))) if n else xi
            case = rng.choice([XI_CASE_TAU_ZERO, XI_CASE_K_ZERO])
            gi = gen_reduction_fixed_xi(g, max(ell, xi), xi, case=case)
            inst = gi.instance
            assert inst.g.n // inst.ell == xi
            if case == XI_CASE_TAU_ZERO:
                assert inst.tau == 0 and inst.r == inst.ell
            else:
                assert inst.k == 0 and inst.r == 1

    def test_answer_equivalent_to_source(self):
        rng = random.Random(44)
        for _ in range(40):
            n = rng.randint(2, 10)
            g = random_graph(rng, n, rng.uniform(0.3, 0.9))
            xi = rng.randint(1, 2)
            ell = rng.randint(max(2, xi), n)
            case = rng.choice([XI_CASE_TAU_ZERO, XI_CASE_K_ZERO])
            gi = gen_reduction_fixed_xi(g, ell, xi, case=case)
            expected = brute_force_max_clique(g)[0] >= ell
            assert solve_turan_clique(gi.instance).answer == expected

    def test_precondition(self):
        with pytest.raises(ValueError):
            gen_reduction_fixed_xi(complete_graph(3), 2, 3)


class TestReductionFixedTau:
    def test_k4_source_yes(self):
        gi = gen_reduction_fixed_tau(complete_graph(4), 4, 2)
        inst = gi.instance
        assert inst.k == 0 and inst.r == inst.ell - 2
        assert edge_surplus_check(inst.g, inst.r, 0).valid
        assert solve_turan_clique(inst).answer is True

    def test_c5_source_no(self):
        gi = gen_reduction_fixed_tau(cycle_graph(5), 4, 2)
        assert solve_turan_clique(gi.instance).answer is False

    def test_minimal_part_size(self):
        gi = gen_reduction_fixed_tau(complete_graph(4), 4, 2)
        x = gi.params["x"]
        n, ell, tau = 4, 4, 2
        big_n = (ell - 1) * x
        assert turan_edge_count(big_n, ell - 1) - n * (ell - 2) * x >= turan_edge_count(
            big_n, ell - tau
        )
        if x > 2:  # x - 1 must fail the same inequality (minimality)
            smaller = (ell - 1) * (x - 1)
            assert turan_edge_count(smaller, ell - 1) - n * (ell - 2) * (x - 1) < (
                turan_edge_count(smaller, ell - tau)
            )

    def test_surplus_always_valid(self):
        rng = random.Random(45)
        for _ in range(20):
            n = rng.randint(2, 10)
            g = random_graph(rng, n, rng.uniform(0.2, 0.9))
            tau = 2
            ell = rng.randint(2 * tau, 2 * tau + 2)
            gi = gen_reduction_fixed_tau(g, ell, tau)
            assert gi.instance.k == 0
            assert edge_surplus_check(gi.instance.g, gi.instance.r, 0).valid

    def test_preconditions(self):
        with pytest.raises(ValueError):
            gen_reduction_fixed_tau(complete_graph(4), 4, 1)
        with pytest.raises(ValueError):
            gen_reduction_fixed_tau(complete_graph(4), 3, 2)

    def test_infeasible_cap_reports(self):
        with pytest.raises(ValueError):
            gen_reduction_fixed_tau(complete_graph(6), 6, 2, x_cap=1)


class TestRandomGraph:
    def test_deterministic(self):
        assert to_dimacs(gen_random_graph(10, 0.5, 3)) == to_dimacs(gen_random_graph(10, 0.5, 3))

    def test_extremes(self):
        assert gen_random_graph(8, 0.0, 1).m == 0
        assert gen_random_graph(8, 1.0, 1).m == 28
