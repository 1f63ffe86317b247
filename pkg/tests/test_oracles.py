import random

import pytest

from tempex import (
    BudgetExceededError,
    InputError,
    NonStrictTemporalGraph,
    OracleBudget,
    TargetSpec,
    bf_ns,
    bf_set_ns_texp,
    bf_set_texp,
    bf_strict,
    validate_ns_walk,
    validate_strict_walk,
    visited_vertices,
)

from helpers import enum_ns_tour, enum_strict_tour, sample_ns, sample_strict


class TestBfStrict:
    def test_g1_all(self, g1):
        res = bf_strict(g1, 0, TargetSpec.all())
        assert res.answer and res.arrival == 3
        assert validate_strict_walk(g1, res.walk)

    def test_truncated_all_is_no(self, g1):
        from tempex import StrictTemporalGraph

        g = StrictTemporalGraph(3, 1, [g1.layers[0]])
        assert not bf_strict(g, 0, TargetSpec.all()).answer

    def test_g1_count2(self, g1):
        assert bf_strict(g1, 0, TargetSpec.count_k(2)).arrival == 2

    def test_arrival_convention(self, g1):
        # strict arrivals are last-traversal-time + 1
        res = bf_strict(g1, 0, TargetSpec.fixed_set({2}))
        assert res.arrival == res.walk.traversals[-1][0] + 1

    def test_matches_plain_enumeration(self):
        rnd = random.Random(211)
        for i in range(120):
            g = sample_strict(rnd, 25000 + i, n_max=5, L_max=4)
            s = rnd.randrange(g.n)
            xs = set(rnd.sample(range(g.n), rnd.randint(0, g.n)))
            tgt = TargetSpec.fixed_set(xs)
            res = bf_strict(g, s, tgt)
            exp = enum_strict_tour(g, s, lambda vis: xs <= vis)
            assert (res.arrival if res.answer else float("inf")) == exp

    def test_budget_vertex_cap(self):
        from tempex import StrictTemporalGraph

        g = StrictTemporalGraph(8, 1, [[]])
        with pytest.raises(BudgetExceededError):
            bf_strict(g, 0, TargetSpec.all())  # default budget caps n at 7
        bf_strict(g, 0, TargetSpec.all(), OracleBudget(10, 6, 10**6))

    def test_budget_ceiling_refused(self):
        with pytest.raises(InputError):
            OracleBudget(7, 6, 10**9)


class TestBfNs:
    def test_g2_all_is_no(self, g2):
        assert not bf_ns(g2, 0, TargetSpec.all()).answer

    def test_g3_all(self, g3):
        res = bf_ns(g3, 0, TargetSpec.all())
        assert res.answer and res.arrival == 3
        assert validate_ns_walk(g3, res.walk)

    def test_g2_fixed(self, g2):
        res = bf_ns(g2, 0, TargetSpec.fixed_set({3}))
        assert res.answer and res.arrival == 2

    def test_arrival_convention(self, g2):
        # non-strict arrivals are the occupancy step itself
        res = bf_ns(g2, 0, TargetSpec.fixed_set({3}))
        assert res.arrival == res.walk.component_refs[-1][0]

    def test_matches_plain_enumeration(self):
        rnd = random.Random(223)
        for i in range(120):
            g = sample_ns(rnd, 26000 + i, n_max=6, L_max=4)
            s = rnd.randrange(g.n)
            k = rnd.randint(0, g.n)
            tgt = TargetSpec.count_k(k)
            res = bf_ns(g, s, tgt)
            exp = enum_ns_tour(g, s, lambda vis: len(vis) >= k)
            assert (res.arrival if res.answer else float("inf")) == exp

    def test_state_cap_aborts_cleanly(self):
        g = sample_ns(random.Random(5), 321, n_max=7, L_max=5)
        with pytest.raises(BudgetExceededError):
            bf_ns(g, 0, TargetSpec.all(), OracleBudget(32, 12, 1))


class TestSelfConsistency:
    def test_all_equals_fixed_v(self):
        rnd = random.Random(227)
        for i in range(60):
            g = sample_strict(rnd, 27000 + i)
            s = rnd.randrange(g.n)
            a = bf_strict(g, s, TargetSpec.all())
            b = bf_strict(g, s, TargetSpec.fixed_set(range(g.n)))
            assert (a.answer, a.arrival) == (b.answer, b.arrival)
            h = sample_ns(rnd, 27500 + i)
            s2 = rnd.randrange(h.n)
            c = bf_ns(h, s2, TargetSpec.all())
            d = bf_ns(h, s2, TargetSpec.fixed_set(range(h.n)))
            assert (c.answer, c.arrival) == (d.answer, d.arrival)

    def test_budget_determinism(self, g2):
        runs = [bf_ns(g2, 0, TargetSpec.count_k(3)) for _ in range(3)]
        assert runs[0] == runs[1] == runs[2]


class TestSetDelegates:
    def test_empty_family_yes(self, g1, g2):
        assert bf_set_texp(g1, 0, [])
        assert bf_set_ns_texp(g2, 0, [])

    def test_family_semantics(self, g1):
        assert bf_set_texp(g1, 0, [{1, 2}])
        assert bf_set_texp(g1, 0, [{1}, {2}])

    def test_l0_nonstrict_degenerate(self):
        g = NonStrictTemporalGraph(2, 0, [])
        assert bf_set_ns_texp(g, 0, [])
        assert not bf_set_ns_texp(g, 0, [{1}])
