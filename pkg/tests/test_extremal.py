"""Tests for the exhaustive codegree Turan search (small n; n=6 in acceptance)."""

import pytest

from oracles import oracle_ex2
from tightcycle.constructions import z3_construction
from tightcycle.extremal import (
    SearchBudgetExceeded,
    SearchConfig,
    SearchStats,
    density_profile,
    ex2_decision,
    ex2_exact,
)
from tightcycle.walks import exists_closed_tight_walk, find_injective_tight_cycle


class TestConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            SearchConfig(n=2)
        with pytest.raises(ValueError):
            SearchConfig(n=5, length=3)
        with pytest.raises(ValueError):
            SearchConfig(n=5, mode="both")
        with pytest.raises(ValueError):
            SearchConfig(n=5, workers=0)


class TestDecision:
    def test_n5_d2_impossible(self):
        # 3*2 > 5: any such hypergraph contains a homomorphic C11
        assert ex2_decision(SearchConfig(n=5, length=11), 2) is None

    def test_n5_d0_exists(self):
        h = ex2_decision(SearchConfig(n=5, length=11), 0)
        assert h is not None
        assert h.min_codegree() >= 0
        assert not exists_closed_tight_walk(h, 11)

    def test_n6_d3_impossible(self):
        assert ex2_decision(SearchConfig(n=6, length=11), 3) is None

    def test_d_out_of_range(self):
        with pytest.raises(ValueError):
            ex2_decision(SearchConfig(n=5, length=11), 4)

    def test_witness_respects_target(self):
        h = ex2_decision(SearchConfig(n=5, length=11), 1)
        assert h is not None and h.min_codegree() >= 1
        assert not exists_closed_tight_walk(h, 11)


class TestExact:
    def test_n5_matches_oracle(self):
        result = ex2_exact(SearchConfig(n=5, length=11))
        oracle_value, _ = oracle_ex2(5, 11)
        assert result.status == "exact"
        assert result.value == oracle_value == 1
        assert result.value <= 5 // 3

    def test_witness_reverified(self):
        result = ex2_exact(SearchConfig(n=5, length=11))
        assert result.witness.min_codegree() == result.value
        assert not exists_closed_tight_walk(result.witness, 11)

    def test_lower_bound_from_construction(self):
        h, _ = z3_construction(5)
        assert not exists_closed_tight_walk(h, 11)
        result = ex2_exact(SearchConfig(n=5, length=11))
        assert result.value >= h.min_codegree()

    def test_injective_vacuous(self):
        result = ex2_exact(SearchConfig(n=5, length=11, mode="injective"))
        assert result.value == 3 and result.status == "exact"
        assert result.witness.num_edges == 10

    def test_injective_small_length_matches_oracle(self):
        result = ex2_exact(SearchConfig(n=5, length=4, mode="injective"))
        oracle_value, _ = oracle_ex2(5, 4, mode="injective")
        assert result.value == oracle_value == 1
        assert find_injective_tight_cycle(result.witness, 4) is None

    def test_hom_length_6_matches_oracle(self):
        result = ex2_exact(SearchConfig(n=5, length=6))
        oracle_value, _ = oracle_ex2(5, 6)
        assert result.value == oracle_value == 0

    def test_unsupported_n(self):
        with pytest.raises(ValueError):
            ex2_exact(SearchConfig(n=40, length=11))

    def test_symmetry_same_value(self):
        plain = ex2_exact(SearchConfig(n=5, length=11))
        reduced = ex2_exact(SearchConfig(n=5, length=11, symmetry=True))
        assert plain.value == reduced.value
        assert reduced.stats.nodes <= plain.stats.nodes

    def test_full_length_sweep_matches_oracle(self):
        # lengths divisible by 3 collapse to 0: mod-3 colorings cannot help
        expected = {
            4: [(4, 1), (5, 2), (6, 0), (7, 1), (8, 1), (9, 0), (10, 1), (11, 1)],
            5: [(4, 1), (5, 1), (6, 0), (7, 1), (8, 1), (9, 0), (10, 1), (11, 1)],
        }
        for n, rows in expected.items():
            for length, value in rows:
                oracle_value, _ = oracle_ex2(n, length)
                result = ex2_exact(SearchConfig(n=n, length=length))
                assert oracle_value == result.value == value, (n, length)


class TestBudget:
    def test_decision_raises(self):
        stats = SearchStats()
        with pytest.raises(SearchBudgetExceeded):
            ex2_decision(SearchConfig(n=6, length=11, node_budget=40), 2, stats)
        assert stats.nodes > 0

    def test_exact_reports_unknown(self):
        result = ex2_exact(SearchConfig(n=6, length=11, node_budget=40))
        assert result.status == "unknown"
        assert result.value is None and result.witness is None


class TestDeterminism:
    def test_repeat_identical(self):
        a = ex2_exact(SearchConfig(n=5, length=11))
        b = ex2_exact(SearchConfig(n=5, length=11))
        assert a.value == b.value
        assert a.witness == b.witness
        assert a.stats == b.stats

    def test_workers_identical_decision(self):
        # n=6 splits into subtree tasks; the task set is fixed, so stats and
        # witness agree for any worker count
        s1, s4 = SearchStats(), SearchStats()
        w1 = ex2_decision(SearchConfig(n=6, length=11), 1, s1)
        w4 = ex2_decision(SearchConfig(n=6, length=11, workers=4), 1, s4)
        assert w1 == w4
        assert s1 == s4


class TestDensityProfile:
    def test_rows(self):
        rows = density_profile(11, [4, 5])
        assert [(r.n, r.value, r.status) for r in rows] == [
            (4, 1, "exact"),
            (5, 1, "exact"),
        ]
        assert rows[0].ratio == 0.25
        for row in rows:
            assert row.ratio <= 1 / 3 + 1 / row.n

    def test_empty_range(self):
        assert density_profile(11, []) == []

    def test_length_6(self):
        rows = density_profile(6, [5])
        assert rows[0].value == 0
