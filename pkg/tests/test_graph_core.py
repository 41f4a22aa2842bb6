import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_is_k_connected, random_connected_graph, theta, two_triangles
from rainbowcycles import generators as gen
from rainbowcycles.errors import BudgetExceeded, InvalidParameter, NotTwoConnected
from rainbowcycles.graph import (
    Budget,
    Graph,
    block_decomposition,
    circumference,
    cycle_through_exists,
    delete_vertex,
    ear_decomposition,
    enumerate_hamilton_cycles,
    enumerate_simple_cycles,
    find_hamilton_cycle,
    girth,
    graph_invariants,
    in_family_Fk,
    is_hypohamiltonian,
    is_k_connected,
    is_minimally_2_connected,
)

import random


class TestGraph:
    def test_edges_canonicalised(self):
        g = Graph(4, ((3, 1), (0, 2), (1, 0)))
        assert g.edges == ((0, 1), (0, 2), (1, 3))
        assert g.edge_id(1, 3) == 2 and g.edge_id(3, 1) == 2

    def test_rejects_loops_duplicates_range(self):
        with pytest.raises(InvalidParameter):
            Graph(3, ((1, 1),))
        with pytest.raises(InvalidParameter):
            Graph(3, ((0, 1), (1, 0)))
        with pytest.raises(InvalidParameter):
            Graph(2, ((0, 2),))

    def test_adjacency_sorted(self):
        g = gen.wheel(4)
        assert g.neighbours(4) == (0, 1, 2, 3)


class TestConnectivity:
    def test_cycle_is_2_connected(self):
        assert is_k_connected(gen.cycle(5), 2)

    def test_k4_minus_edge_not_3_connected(self):
        g = gen.complete(4).without_edge(0)
        assert not is_k_connected(g, 3)

    def test_cube_connectivity_is_dimension(self):
        q3 = gen.hypercube(3)
        assert is_k_connected(q3, 3)
        assert not is_k_connected(q3, 4)

    def test_agrees_with_brute_force(self, corpus):
        for name, g in corpus:
            if g.n > 9:
                continue
            for k in range(1, 4):
                assert is_k_connected(g, k) == brute_is_k_connected(g, k), (name, k)

    def test_large_graph_path_counting_route(self):
        q5 = gen.hypercube(5)  # 32 > 20 vertices: Menger route
        assert is_k_connected(q5, 5)
        assert not is_k_connected(q5, 6)


class TestBlocks:
    def test_two_triangles(self):
        dec = block_decomposition(two_triangles())
        assert len(dec.blocks) == 2
        assert dec.cut_vertices == frozenset({2})

    def test_single_block_cycle(self):
        dec = block_decomposition(gen.cycle(6))
        assert len(dec.blocks) == 1
        assert not dec.cut_vertices

    def test_k23_plus_pendant(self):
        base = gen.complete_bipartite(2, 3)
        g = Graph(6, base.edges + ((0, 5),))
        dec = block_decomposition(g)
        assert len(dec.blocks) == 2
        assert dec.cut_vertices == frozenset({0})

    def test_isolated_vertices_form_blocks(self):
        g = Graph(4, ((0, 1),))
        dec = block_decomposition(g)
        kinds = sorted(len(b.vertices) for b in dec.blocks)
        assert kinds == [1, 1, 2]

    def test_partition_property(self, corpus):
        for name, g in corpus:
            dec = block_decomposition(g)
            seen = []
            for b in dec.blocks:
                seen.extend(b.edge_ids)
            assert sorted(seen) == list(range(g.e)), name
            # shared vertices are exactly the cut vertices
            for b1, b2 in itertools.combinations(dec.blocks, 2):
                shared = b1.vertices & b2.vertices
                assert len(shared) <= 1
                assert shared <= dec.cut_vertices

    def test_block_cut_tree_is_acyclic(self, corpus):
        for name, g in corpus:
            dec = block_decomposition(g)
            # bipartite incidence graph on blocks + cut vertices must be a forest
            nodes = len(dec.blocks) + len(dec.cut_vertices)
            parent = dict()

            def find(x):
                while parent.get(x, x) != x:
                    x = parent[x]
                return x

            cyclic = False
            for bi, v in dec.block_cut_tree:
                a, b = find(("b", bi)), find(("v", v))
                if a == b:
                    cyclic = True
                parent[a] = b
            assert not cyclic, name
            assert len(dec.block_cut_tree) <= max(0, nodes - 1)


class TestMinimally2Connected:
    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_cycles(self, n):
        assert is_minimally_2_connected(gen.cycle(n))

    def test_k2n_minimal(self):
        assert is_minimally_2_connected(gen.complete_bipartite(2, 3))
        assert is_minimally_2_connected(gen.complete_bipartite(2, 5))

    def test_k4_not_minimal(self):
        assert not is_minimally_2_connected(gen.complete(4))

    def test_definitional_brute_force(self, corpus):
        for name, g in corpus:
            if g.n > 7 or g.e > 10:
                continue
            expected = brute_is_k_connected(g, 2) and all(
                not brute_is_k_connected(g.without_edge(e), 2) for e in range(g.e)
            )
            assert is_minimally_2_connected(g) == expected, name


class TestEarDecomposition:
    def test_cycle_has_no_ears(self):
        ed = ear_decomposition(gen.cycle(5))
        assert len(ed.initial_cycle) == 5
        assert not ed.ears

    def test_k4(self):
        g = gen.complete(4)
        ed = ear_decomposition(g)
        assert len(ed.initial_cycle) == 3
        assert sum(len(e) - 1 for e in ed.ears) == 3
        assert ed.replayed_edge_ids(g) == frozenset(range(6))

    def test_theta(self):
        g = theta(2, 2, 2)  # K_{2,3}: shortest cycle C_4 plus one ear
        ed = ear_decomposition(g)
        assert len(ed.initial_cycle) == 4
        assert len(ed.ears) == 1

    def test_replay_reconstructs_exact_edge_set(self, corpus):
        for name, g in corpus:
            if not is_k_connected(g, 2):
                continue
            ed = ear_decomposition(g)
            assert ed.replayed_edge_ids(g) == frozenset(range(g.e)), name
            for ear in ed.ears:
                assert len(ear) >= 2 and ear[0] != ear[-1]

    def test_requires_2_connected(self):
        with pytest.raises(NotTwoConnected):
            ear_decomposition(Graph(4, ((0, 1), (1, 2), (2, 3))))

    def test_initial_cycle_is_lex_least_shortest(self):
        ed = ear_decomposition(gen.complete(4))
        assert ed.initial_cycle == (0, 1, 2)


class TestInvariants:
    def test_q3(self):
        inv = graph_invariants(gen.hypercube(3))
        assert (inv.girth, inv.circumference, inv.is_hamiltonian) == (4, 8, True)

    def test_petersen(self):
        inv = graph_invariants(gen.petersen())
        assert inv.girth == 5
        assert not inv.is_hamiltonian
        assert inv.circumference == 9

    def test_k4(self):
        inv = graph_invariants(gen.complete(4))
        assert (inv.girth, inv.circumference) == (3, 4)

    def test_acyclic(self):
        inv = graph_invariants(Graph(3, ((0, 1), (1, 2))))
        assert inv.girth is None and inv.circumference == 0

    def test_girth_le_circumference(self, corpus):
        for name, g in corpus:
            inv = graph_invariants(g)
            if inv.circumference:
                assert 3 <= inv.girth <= inv.circumference, name

    def test_budget_exhaustion_carries_partial(self):
        with pytest.raises(BudgetExceeded) as exc:
            graph_invariants(gen.petersen(), budget=10)
        assert exc.value.partial == {"girth": 5}

    def test_brute_cycle_oracle(self):
        from conftest import brute_all_cycles

        for g in (gen.complete(4), gen.wheel(4), gen.hypercube(3)):
            cycles = brute_all_cycles(g)
            lengths = [len(e) for _, e in cycles]
            assert girth(g) == min(lengths)
            assert circumference(g) == max(lengths)
            assert len(enumerate_simple_cycles(g)) == len(cycles)


class TestHypohamiltonian:
    def test_petersen(self):
        assert is_hypohamiltonian(gen.petersen())

    def test_hamiltonian_graph_is_not(self):
        assert not is_hypohamiltonian(gen.cycle(6))

    def test_c4(self):
        assert not is_hypohamiltonian(gen.cycle(4))  # K_4 minus a perfect matching

    def test_petersen_minus_vertex_hamilton_counts(self):
        g = gen.petersen()
        for v in (0, 5):
            sub, _ = delete_vertex(g, v)
            assert enumerate_hamilton_cycles(sub)


class TestFamilyMembership:
    def test_path_not_in_f1(self):
        assert not in_family_Fk(Graph(4, ((0, 1), (1, 2), (2, 3))), 1)

    def test_two_triangles_in_f1_not_f2(self):
        g = two_triangles()
        assert in_family_Fk(g, 1)
        assert not in_family_Fk(g, 2)

    def test_petersen_in_f9(self):
        assert in_family_Fk(gen.petersen(), 9)

    def test_k_above_order(self):
        assert not in_family_Fk(gen.complete(4), 5)

    def test_monotone_in_k(self, corpus):
        for name, g in corpus:
            for k in range(2, min(g.n, 5) + 1):
                if in_family_Fk(g, k):
                    assert in_family_Fk(g, k - 1), (name, k)

    def test_cycle_through_matches_brute(self, corpus):
        from conftest import brute_all_cycles

        rng = random.Random(3)
        for name, g in corpus:
            if g.n > 8:
                continue
            cycles = brute_all_cycles(g)
            for _ in range(5):
                k = rng.randrange(1, min(4, g.n) + 1)
                s = tuple(sorted(rng.sample(range(g.n), k)))
                expected = any(set(s) <= verts for verts, _ in cycles)
                assert cycle_through_exists(g, s) == expected, (name, s)


class TestBudgets:
    def test_budget_object_counts(self):
        b = Budget(5)
        for _ in range(5):
            b.spend()
        with pytest.raises(BudgetExceeded):
            b.spend()

    def test_hamilton_budget(self):
        with pytest.raises(BudgetExceeded):
            find_hamilton_cycle(gen.hypercube(4), budget=3)


@settings(max_examples=40, deadline=None)
@given(st.integers(5, 9), st.integers(0, 6), st.integers(0, 10_000))
def test_block_partition_random(n, extra, seed):
    g = random_connected_graph(random.Random(seed), n, extra)
    dec = block_decomposition(g)
    seen = sorted(e for b in dec.blocks for e in b.edge_ids)
    assert seen == list(range(g.e))
