import itertools

import pytest

from conftest import theta
from rainbowcycles import generators as gen
from rainbowcycles import solver
from rainbowcycles.errors import BudgetExceeded, NotInFamily, ScopeExceeded
from rainbowcycles.graph import Graph
from rainbowcycles.search import verify_k_rainbow_cycle_colouring, verify_k_rainbow_index_colouring


def naive_partition_count(n, k):
    """Count set partitions of range(n) into exactly k blocks, directly."""
    def rec(i, blocks):
        if i == n:
            return 1 if len(blocks) == k else 0
        total = 0
        for b in blocks:
            b.append(i)
            total += rec(i + 1, blocks)
            b.pop()
        if len(blocks) < k:
            blocks.append([i])
            total += rec(i + 1, blocks)
            blocks.pop()
        return total

    return rec(0, [])


class TestEnumeration:
    def test_stirling_against_direct_partitions(self):
        for e in range(1, 9):
            for r in range(1, e + 1):
                assert solver.stirling2(e, r) == naive_partition_count(e, r)

    def test_canonical_colourings_count(self):
        for e in range(1, 9):
            for r in range(1, e + 1):
                got = sum(1 for _ in solver.canonical_colourings(e, r))
                assert got == solver.stirling2(e, r), (e, r)

    def test_canonical_colourings_are_rgs(self):
        for seq in solver.canonical_colourings(5, 3):
            top = -1
            for c in seq:
                assert c <= top + 1
                top = max(top, c)
            assert top == 2


class TestCrxExact:
    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_cycles(self, n):
        res = solver.crx_exact(gen.cycle(n), 1)
        assert res.kind == "exact" and res.value == n

    def test_k4(self):
        assert solver.crx_exact(gen.complete(4), 1).value == 3
        assert solver.crx_exact(gen.complete(4), 2).value == 3

    def test_k23(self):
        res = solver.crx_exact(gen.complete_bipartite(2, 3), 2)
        assert res.value == 6
        kinds = [c.kind for c in res.evidence]
        assert kinds.count("exhaustion") == 2  # r = 4, 5

    def test_w4(self):
        assert solver.crx_exact(gen.wheel(4), 2).value == 4
        assert solver.crx_exact(gen.wheel(4), 3).value == 4

    def test_witness_reverifies(self):
        res = solver.crx_exact(gen.wheel(4), 2)
        assert res.witness.r == res.value
        assert verify_k_rainbow_cycle_colouring(res.witness, 2).certified

    def test_witness_is_canonically_least(self):
        res = solver.crx_exact(gen.cycle(4), 1)
        assert res.witness.colour_of == (0, 1, 2, 3)

    def test_evidence_covers_every_smaller_r(self):
        res = solver.crx_exact(gen.complete_bipartite(2, 3), 2)
        covered = set()
        for cert in res.evidence:
            if cert.kind == "distance_bound":
                covered.update(range(1, cert.payload["length"]))
            elif cert.kind == "exhaustion":
                covered.add(cert.payload["r"])
        assert covered >= set(range(1, res.value))

    def test_monotone_in_k(self):
        for g in (gen.complete(4), gen.wheel(4), gen.hypercube(3)):
            prev = 0
            for k in (1, 2, 3):
                val = solver.crx_exact(g, k).value
                assert val >= prev
                prev = val

    def test_respects_distance_bound(self):
        g = gen.hypercube(3)
        res = solver.crx_exact(g, 2)
        bound, _ = solver.crx_lower_bound_distance(g, 2)
        assert res.value >= bound

    def test_not_in_family(self):
        with pytest.raises(NotInFamily):
            solver.crx_exact(Graph(4, ((0, 1), (1, 2), (2, 3))), 1)

    def test_scope_guard(self):
        with pytest.raises(ScopeExceeded):
            solver.crx_exact(gen.complete(7), 2)  # 21 > 16 edges
        with pytest.raises(ScopeExceeded):
            solver.crx_exact(gen.hypercube(4), 2)

    def test_budget_yields_interval(self):
        res = solver.crx_exact(gen.wheel(4), 2, budget=5)
        assert res.kind == "interval"
        assert res.lower <= 4 <= res.upper


class TestRxExact:
    def test_rx1_is_zero(self):
        assert solver.rx_exact(gen.complete(5), 1).value == 0

    def test_c5(self):
        assert solver.rx_exact(gen.cycle(5), 3).value == 3
        assert solver.rx_exact(gen.cycle(5), 4).value == 4

    def test_k4(self):
        assert solver.rx_exact(gen.complete(4), 2).value == 1

    def test_witness_reverifies(self):
        res = solver.rx_exact(gen.cycle(5), 3)
        assert verify_k_rainbow_index_colouring(res.witness, 3).certified

    def test_separation_values(self):
        # crx - rx: 3 for (K_4, 1), 2 for (K_4, 2), 2 for (C_5, 3)
        assert solver.crx_exact(gen.complete(4), 1).value - solver.rx_exact(gen.complete(4), 1).value == 3
        assert solver.crx_exact(gen.complete(4), 2).value - solver.rx_exact(gen.complete(4), 2).value == 2
        assert solver.crx_exact(gen.cycle(5), 3).value - solver.rx_exact(gen.cycle(5), 3).value == 2

    def test_crx_always_exceeds_rx(self):
        for g, k in [(gen.complete(4), 2), (gen.cycle(5), 3), (gen.cycle(5), 4),
                     (theta(2, 2, 2), 2)]:
            assert solver.crx_exact(g, k).value > solver.rx_exact(g, k).value


class TestLowerBoundDistance:
    def test_q4_pair(self):
        bound, cert = solver.crx_lower_bound_distance(gen.hypercube(4), 2)
        assert bound == 8
        assert cert.kind == "distance_bound"
        from rainbowcycles.search import min_cycle_length_through

        assert min_cycle_length_through(gen.hypercube(4), cert.payload["subset"]) == 8

    def test_join_triple(self):
        bound, cert = solver.crx_lower_bound_distance(gen.path_cycle_join(3, 3), 3)
        assert bound >= 3

    def test_complete_pair_is_girth(self):
        bound, _ = solver.crx_lower_bound_distance(gen.complete(6), 2)
        assert bound == 3


class TestInterval:
    def test_w9_k2(self):
        res = solver.crx_interval(gen.wheel(9), 2)
        assert (res.lower, res.upper) == (6, 7)
        assert res.kind == "interval"
        assert res.witness.r == 7

    def test_q3_k2_exact(self):
        res = solver.crx_interval(gen.hypercube(3), 2)
        assert res.kind == "exact" and res.lower == res.upper == 6

    def test_k8_k3(self):
        res = solver.crx_interval(gen.complete(8), 3, seed=2026)
        assert res.lower == 3
        assert res.upper in (5, 8)  # 5 when the seeded sampler lands

    def test_cycle_always_exact(self):
        res = solver.crx_interval(gen.cycle(6), 2)
        assert res.kind == "exact" and res.lower == 6

    def test_exactness_matches_solver_on_small(self):
        for g, k in [(gen.complete(4), 2), (gen.wheel(4), 2)]:
            iv = solver.crx_interval(g, k)
            ex = solver.crx_exact(g, k)
            assert iv.lower <= ex.value <= iv.upper


class TestFamilyDetection:
    def test_detects(self):
        assert solver._detect_family(gen.complete(5)) == ("complete", 5)
        assert solver._detect_family(gen.cycle(6)) == ("cycle", 6)
        assert solver._detect_family(gen.hypercube(3)) == ("hypercube", 3)
        assert solver._detect_family(gen.wheel(6)) == ("wheel", 6)
        assert solver._detect_family(gen.complete_bipartite(3, 5)) == (
            "complete_bipartite", (3, 5))
        assert solver._detect_family(gen.complete_multipartite((1, 2, 2))) == (
            "complete_multipartite", (1, 2, 2))

    def test_unknown(self):
        assert solver._detect_family(theta(2, 3, 4)) is None
