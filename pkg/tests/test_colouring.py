import pytest

from rainbowcycles import generators as gen
from rainbowcycles.colouring import (
    CycleWitness,
    EdgeColouring,
    TreeWitness,
    WalkWitness,
    check_cycle_witness,
    check_tree_witness,
    check_walk_witness,
    rainbow_colouring,
)
from rainbowcycles.errors import InvalidParameter


class TestEdgeColouring:
    def test_totality_enforced(self):
        g = gen.cycle(4)
        with pytest.raises(InvalidParameter):
            EdgeColouring(g, (0, 1, 2), 3)

    def test_range_enforced(self):
        g = gen.cycle(3)
        with pytest.raises(InvalidParameter):
            EdgeColouring(g, (0, 1, 3), 3)

    def test_surjectivity_enforced_unless_flagged(self):
        g = gen.cycle(3)
        with pytest.raises(InvalidParameter):
            EdgeColouring(g, (0, 0, 1), 3)
        c = EdgeColouring(g, (0, 0, 1), 3, unused_ok=True)
        assert c.used_colours() == frozenset({0, 1})

    def test_rainbow(self):
        c = rainbow_colouring(gen.complete(4))
        assert c.r == 6 and c.colour_of == (0, 1, 2, 3, 4, 5)


class TestCycleWitness:
    def test_valid(self):
        g = gen.cycle(4)
        w = CycleWitness((0, 1, 2, 3), (0, 2, 3, 1))
        assert check_cycle_witness(g, w)

    def test_rejects_short_or_nonadjacent(self):
        g = gen.cycle(4)
        assert not check_cycle_witness(g, CycleWitness((0, 1), (0, 0)))
        assert not check_cycle_witness(g, CycleWitness((0, 2, 1), (0, 1, 2)))

    def test_rainbow_check(self):
        g = gen.cycle(3)
        w = CycleWitness((0, 1, 2), (0, 2, 1))
        c = EdgeColouring(g, (0, 0, 1), 2)
        assert check_cycle_witness(g, w, c)
        assert not check_cycle_witness(g, w, c, require_rainbow=True)

    def test_containing(self):
        g = gen.wheel(4)
        w = CycleWitness((0, 1, 2, 3), tuple(g.edge_id(*p) for p in
                                             ((0, 1), (1, 2), (2, 3), (3, 0))))
        assert check_cycle_witness(g, w, containing=[0, 2])
        assert not check_cycle_witness(g, w, containing=[4])


class TestTreeWitness:
    def test_valid_path(self):
        g = gen.cycle(5)
        w = TreeWitness((g.edge_id(0, 1), g.edge_id(1, 2)), frozenset({0, 1, 2}))
        assert check_tree_witness(g, w, containing=[0, 2])

    def test_rejects_cycle_as_tree(self):
        g = gen.cycle(3)
        w = TreeWitness((0, 1, 2), frozenset({0, 1, 2}))
        assert not check_tree_witness(g, w)

    def test_rejects_disconnected(self):
        g = gen.cycle(6)
        w = TreeWitness((0, 3), frozenset({0, 1, 3, 4}))
        assert not check_tree_witness(g, w)


class TestWalkWitness:
    def test_trivial_paths_must_match_repeats(self):
        g = gen.hypercube(3)
        good = WalkWitness((0, 0, 3), ((0,), (0, 1, 3), (3, 2, 0)))
        assert check_walk_witness(g, good)
        bad = WalkWitness((0, 0, 3), ((0, 1, 0), (0, 1, 3), (3, 2, 0)))
        assert not check_walk_witness(g, bad)

    def test_rejects_length_one_paths(self):
        g = gen.hypercube(2)
        w = WalkWitness((0, 1), ((0, 1), (1, 3, 2, 0)))
        assert not check_walk_witness(g, w)

    def test_rejects_shared_internals(self):
        g = gen.hypercube(3)
        w = WalkWitness((0, 3), ((0, 1, 3), (3, 1, 0)))
        assert not check_walk_witness(g, w)

    def test_rejects_anchor_as_internal(self):
        g = gen.cycle(6)
        w = WalkWitness((0, 3), ((0, 1, 2, 3), (3, 4, 5, 0)))
        assert check_walk_witness(g, w)
        w2 = WalkWitness((0, 2), ((0, 1, 2), (2, 3, 4, 5, 0)))
        assert check_walk_witness(g, w2)
        # route one path through the other anchor
        w3 = WalkWitness((1, 4), ((1, 2, 3, 4), (4, 5, 0, 1)))
        assert check_walk_witness(g, w3)
        w4 = WalkWitness((1, 3), ((1, 2, 3), (3, 4, 5, 0, 1)))
        assert check_walk_witness(g, w4)

    def test_rainbow_requirement(self):
        g = gen.cycle(6)
        c = EdgeColouring(g, (0, 1, 2, 3, 4, 0), 5, unused_ok=True)
        w = WalkWitness((0, 3), ((0, 1, 2, 3), (3, 4, 5, 0)))
        assert not check_walk_witness(g, w, c, require_rainbow=True)
        c2 = rainbow_colouring(g)
        assert check_walk_witness(g, w, c2, require_rainbow=True)
