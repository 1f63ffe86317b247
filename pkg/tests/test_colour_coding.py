import math
import random
from itertools import combinations

import numpy as np
import pytest

from tempex import (
    INFINITY,
    CapacityError,
    Colouring,
    HashFamily,
    InputError,
    McConfig,
    NonStrictMetrics,
    StrictMetrics,
    TargetSpec,
    bf_ns,
    bf_strict,
    build_verified_family,
    certify_family,
    colourful_dp,
    solve_k_arbitrary_det,
    solve_k_arbitrary_mc,
    validate_strict_walk,
    verify_k_perfect,
    visited_vertices,
)
from tempex.colour_coding import random_colouring

from helpers import sample_ns, sample_strict


class TestColourfulDp:
    def test_rainbow_on_g1(self, g1):
        # hand-unrolled: H({1},0)=1, H({1,2},1)=2, H({1,2,3},2)=3
        res = colourful_dp(StrictMetrics(g1), 0, Colouring((1, 2, 3), 3))
        assert res.answer and res.arrival == 3

    def test_two_colours_on_g1(self, g1):
        # c = (1,1,2): both colours need one vertex; optimum is 3, not 2
        res = colourful_dp(StrictMetrics(g1), 0, Colouring((1, 1, 2), 2))
        assert res.answer and res.arrival == 3

    def test_missing_colour_class_is_no(self, g1):
        res = colourful_dp(StrictMetrics(g1), 0, Colouring((1, 1, 1), 2))
        assert not res.answer

    def test_walk_visits_k_distinct(self, g1):
        res = colourful_dp(StrictMetrics(g1), 0, Colouring((1, 2, 3), 3))
        assert len(visited_vertices(g1, res.walk)) >= 3


class TestMcDriver:
    def test_iteration_count(self):
        cfg = McConfig(epsilon=0.01, seed=1)
        assert cfg.iterations_for(3) == math.ceil(math.e**3 * math.log(100))
        assert McConfig(epsilon=0.9, seed=1).iterations_for(2) >= 1

    def test_bad_epsilon(self):
        with pytest.raises(InputError):
            McConfig(epsilon=0.0)
        with pytest.raises(InputError):
            McConfig(epsilon=1.5)

    def test_g1_k3(self, g1):
        res = solve_k_arbitrary_mc(StrictMetrics(g1), 0, 3, McConfig(0.01, seed=5))
        assert res.answer and res.arrival == 3
        assert validate_strict_walk(g1, res.walk)

    def test_truncated_never_yes(self, g1):
        from tempex import StrictTemporalGraph

        g = StrictTemporalGraph(3, 1, [g1.layers[0]])
        res = solve_k_arbitrary_mc(StrictMetrics(g), 0, 3, McConfig(0.2, seed=6))
        assert not res.answer

    def test_k1_trivial(self, g1):
        res = solve_k_arbitrary_mc(StrictMetrics(g1), 0, 1, McConfig(0.5, seed=7))
        assert res.answer and res.arrival == 1

    def test_k_over_n_is_no(self, g1):
        assert not solve_k_arbitrary_mc(StrictMetrics(g1), 0, 4, McConfig(0.5, 1)).answer

    def test_k_over_64_capacity(self, g1):
        with pytest.raises(CapacityError):
            solve_k_arbitrary_mc(StrictMetrics(g1), 0, 65, McConfig(0.5, 1))

    def test_seed_reproducible(self, g1):
        prov = StrictMetrics(g1)
        a = solve_k_arbitrary_mc(prov, 0, 2, McConfig(0.2, seed=11))
        b = solve_k_arbitrary_mc(prov, 0, 2, McConfig(0.2, seed=11))
        assert a == b

    def test_soundness_never_below_optimum(self):
        rnd = random.Random(131)
        for i in range(40):
            g = sample_strict(rnd, 15000 + i)
            s = rnd.randrange(g.n)
            k = rnd.randint(1, min(4, g.n))
            opt = bf_strict(g, s, TargetSpec.count_k(k))
            res = solve_k_arbitrary_mc(StrictMetrics(g), s, k, McConfig(0.2, seed=i))
            if res.answer:
                assert opt.answer and res.arrival >= opt.arrival
                assert len(visited_vertices(g, res.walk)) >= k


class TestHashFamily:
    def test_small_family_is_k_perfect(self):
        fam = build_verified_family(4, 2, seed=3)
        assert fam.certified_for == (4, 2)
        assert verify_k_perfect(fam.functions, 4, 2)
        for sub in combinations(range(4), 2):
            assert any(f.injective_on(sub) for f in fam.functions)

    def test_n_equals_k(self):
        fam = build_verified_family(3, 3, seed=4)
        assert verify_k_perfect(fam.functions, 3, 3)

    def test_k1_single_constant(self):
        fam = build_verified_family(6, 1, seed=5)
        assert len(fam.functions) == 1
        assert verify_k_perfect(fam.functions, 6, 1)

    def test_desk_scale_cap(self):
        with pytest.raises(CapacityError):
            build_verified_family(21, 2, seed=1)
        with pytest.raises(CapacityError):
            build_verified_family(10, 6, seed=1)

    def test_certify_external(self):
        # the full k^n enumeration restricted: use every mapping of 3 vertices
        fns = [Colouring(c, 2) for c in [(1, 1, 2), (1, 2, 1), (2, 1, 1)]]
        fam = certify_family(HashFamily(tuple(fns), "EXTERNAL"), 3, 2)
        assert fam.certified_for == (3, 2)
        bad = HashFamily((Colouring((1, 1, 1), 2),), "EXTERNAL")
        with pytest.raises(InputError):
            certify_family(bad, 3, 2)


class TestDetDriver:
    def test_refuses_uncertified(self, g1):
        fam = HashFamily((Colouring((1, 2, 3), 3),), "EXTERNAL")
        with pytest.raises(InputError):
            solve_k_arbitrary_det(StrictMetrics(g1), 0, 3, fam)

    def test_g1_exact(self, g1):
        fam = build_verified_family(3, 3, seed=9)
        res = solve_k_arbitrary_det(StrictMetrics(g1), 0, 3, fam)
        assert res.answer and res.arrival == 3

    def test_g2_nonstrict(self, g2):
        fam = build_verified_family(4, 3, seed=10)
        res = solve_k_arbitrary_det(NonStrictMetrics(g2), 0, 3, fam)
        assert res.answer and res.arrival == 2

    def test_disconnected_is_no(self, h1):
        fam = build_verified_family(2, 2, seed=11)
        assert not solve_k_arbitrary_det(NonStrictMetrics(h1), 0, 2, fam).answer

    def test_matches_oracle(self):
        rnd = random.Random(137)
        for i in range(60):
            strict = i % 2 == 0
            if strict:
                g = sample_strict(rnd, 16000 + i)
                prov, oracle = StrictMetrics(g), bf_strict
            else:
                g = sample_ns(rnd, 16000 + i)
                prov, oracle = NonStrictMetrics(g), bf_ns
            s = rnd.randrange(g.n)
            k = rnd.randint(1, min(4, g.n))
            fam = build_verified_family(g.n, k, seed=600 + i)
            got = solve_k_arbitrary_det(prov, s, k, fam)
            exp = oracle(g, s, TargetSpec.count_k(k))
            assert (got.answer, got.arrival) == (exp.answer, exp.arrival)


class TestColouringStream:
    def test_vertex_order_and_stability(self):
        rng1 = np.random.Generator(np.random.PCG64(42))
        rng2 = np.random.Generator(np.random.PCG64(42))
        assert random_colouring(10, 3, rng1) == random_colouring(10, 3, rng2)

    def test_well_colouring_probability(self):
        # empirical frequency of a fixed k-set being well-coloured ~ k!/k^k
        n, k, trials = 6, 3, 100_000
        rng = np.random.Generator(np.random.PCG64(77))
        draws = rng.integers(1, k + 1, size=(trials, k))  # colours of a fixed 3-set
        hits = sum(1 for row in draws if len(set(row.tolist())) == k)
        p = math.factorial(k) / k**k
        sigma = math.sqrt(p * (1 - p) / trials)
        assert abs(hits / trials - p) <= 3 * sigma


def test_colour_subset_monotonicity():
    # min_v H(D, v) is non-decreasing under subset order on D
    from tempex import build_colourful_table

    rnd = random.Random(139)
    for i in range(25):
        g = sample_strict(rnd, 17000 + i)
        k = rnd.randint(1, min(4, g.n))
        col = random_colouring(g.n, k, np.random.Generator(np.random.PCG64(i)))
        table = build_colourful_table(StrictMetrics(g), rnd.randrange(g.n), col)
        best = {mask: min(table.H[mask]) for mask in range(1, 1 << k)}
        for mask in range(1, 1 << k):
            for col_i in range(k):
                sub = mask & ~(1 << col_i)
                if sub:
                    assert best[sub] <= best[mask]
