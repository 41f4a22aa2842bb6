import itertools
import random

import pytest

from rainbowcycles import generators as gen
from rainbowcycles.graph import Graph


def pytest_addoption(parser):
    parser.addoption(
        "--run-optional", action="store_true", default=False,
        help="run the expensive optional acceptance checks",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-optional"):
        return
    skip = pytest.mark.skip(reason="optional; enable with --run-optional")
    for item in items:
        if "optional" in item.keywords:
            item.add_marker(skip)


def theta(a: int, b: int, c: int) -> Graph:
    """Two hub vertices joined by three internally disjoint paths of the
    given lengths (each >= 2 keeps the graph simple)."""
    assert min(a, b, c) >= 2 or sorted((a, b, c))[:2] == [2, 2]
    edges = []
    hub0, hub1 = 0, 1
    nxt = 2
    for length in (a, b, c):
        prev = hub0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, hub1))
    return Graph(nxt, tuple(edges))


def two_triangles() -> Graph:
    return Graph(5, ((0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)))


def random_connected_graph(rng: random.Random, n: int, extra: int) -> Graph:
    """Random spanning tree plus ``extra`` random chords."""
    edges = set()
    for v in range(1, n):
        edges.add(tuple(sorted((v, rng.randrange(v)))))
    pool = [
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges
    ]
    rng.shuffle(pool)
    edges.update(pool[:extra])
    return Graph(n, tuple(edges))


def small_corpus() -> list[tuple[str, Graph]]:
    """Named graphs plus seeded random ones, all desk-sized."""
    out = [
        ("C3", gen.cycle(3)),
        ("C5", gen.cycle(5)),
        ("C7", gen.cycle(7)),
        ("K4", gen.complete(4)),
        ("K5", gen.complete(5)),
        ("K23", gen.complete_bipartite(2, 3)),
        ("K24", gen.complete_bipartite(2, 4)),
        ("K33", gen.complete_bipartite(3, 3)),
        ("W3", gen.wheel(3)),
        ("W4", gen.wheel(4)),
        ("W5", gen.wheel(5)),
        ("Q2", gen.hypercube(2)),
        ("Q3", gen.hypercube(3)),
        ("theta223", theta(2, 2, 3)),
        ("theta234", theta(2, 3, 4)),
        ("theta333", theta(3, 3, 3)),
        ("two-triangles", two_triangles()),
        ("join23", gen.path_cycle_join(2, 3)),
        ("P4", Graph(4, ((0, 1), (1, 2), (2, 3)))),
        ("triangle+pendant", Graph(4, ((0, 1), (1, 2), (0, 2), (2, 3)))),
    ]
    rng = random.Random(7)
    for i in range(8):
        n = rng.randrange(5, 10)
        extra = rng.randrange(0, min(5, n * (n - 1) // 2 - (n - 1)))
        out.append((f"rand{i}", random_connected_graph(rng, n, extra)))
    return out


@pytest.fixture(scope="session")
def corpus():
    return small_corpus()


# ---------------------------------------------------------------------------
# Brute-force oracles, independent of the library's search paths


def brute_is_k_connected(g: Graph, k: int) -> bool:
    """Definitional check: |V| > k and removing any <= k-1 vertices leaves
    a connected graph."""
    if g.n <= k:
        return False
    for size in range(0, k):
        for cut in itertools.combinations(range(g.n), size):
            left = [v for v in range(g.n) if v not in cut]
            if not left:
                continue
            seen = {left[0]}
            stack = [left[0]]
            while stack:
                x = stack.pop()
                for y, _ in g.adjacency[x]:
                    if y not in cut and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) != len(left):
                return False
    return True


def brute_all_cycles(g: Graph):
    """Every simple cycle, as a (vertex set, edge id set) pair, by checking
    all rotations of all vertex subsets -- slow but independent."""
    cycles = []
    for size in range(3, g.n + 1):
        for subset in itertools.combinations(range(g.n), size):
            rest = subset[1:]
            for perm in itertools.permutations(rest):
                if len(rest) > 1 and perm[0] > perm[-1]:
                    continue  # fix orientation
                cyc = (subset[0],) + perm
                if all(g.has_edge(cyc[i], cyc[(i + 1) % size]) for i in range(size)):
                    eids = frozenset(
                        g.edge_id(cyc[i], cyc[(i + 1) % size]) for i in range(size)
                    )
                    cycles.append((frozenset(cyc), eids))
    return cycles


def brute_has_rainbow_cycle_through(colouring, s) -> bool:
    g = colouring.graph
    ss = set(s)
    for verts, eids in brute_all_cycles(g):
        if ss <= verts and len({colouring.colour_of[e] for e in eids}) == len(eids):
            return True
    return False
