"""Simple undirected graphs and the structural algorithms built on them.

Vertices are dense integers 0..n-1. Edge ids are positions in the canonical
sorted edge list, so certificates and colourings are reproducible across runs.
All exhaustive searches take a node budget and either answer exactly or raise
BudgetExceeded; there is no silent approximation.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from .errors import BudgetExceeded, InvalidParameter, NotTwoConnected

DEFAULT_BUDGET = 10_000_000


class Budget:
    """Search-node counter. Budgets are in nodes, not wall time."""

    __slots__ = ("limit", "used")

    def __init__(self, limit=DEFAULT_BUDGET):
        self.limit = DEFAULT_BUDGET if limit is None else int(limit)
        self.used = 0

    def spend(self, amount=1):
        self.used += amount
        if self.used > self.limit:
            raise BudgetExceeded(self.limit)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: no loops, no duplicate edges, endpoints < n.

    Edges are normalised to (u, v) with u < v and stored sorted; the position
    of an edge in ``edges`` is its edge id.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameter("vertex count must be non-negative")
        norm = []
        for u, v in self.edges:
            if u == v:
                raise InvalidParameter(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidParameter(f"edge ({u},{v}) has an endpoint >= {self.n}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise InvalidParameter(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def e(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """adjacency[v] = ((neighbour, edge_id), ...) in ascending neighbour order."""
        adj = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            adj[u].append((v, eid))
            adj[v].append((u, eid))
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {uv: eid for eid, uv in enumerate(self.edges)}

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_index

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbours(self, v: int) -> tuple[int, ...]:
        return tuple(w for w, _ in self.adjacency[v])

    def without_edge(self, eid: int) -> "Graph":
        return Graph(self.n, self.edges[:eid] + self.edges[eid + 1 :])


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on ``vertices``; returns (graph, old_id_of_new_id)."""
    keep = sorted(set(vertices))
    remap = {old: new for new, old in enumerate(keep)}
    edges = [
        (remap[u], remap[v]) for u, v in g.edges if u in remap and v in remap
    ]
    return Graph(len(keep), tuple(edges)), tuple(keep)


def delete_vertex(g: Graph, v: int) -> tuple[Graph, tuple[int, ...]]:
    return induced_subgraph(g, [w for w in range(g.n) if w != v])


# ---------------------------------------------------------------------------
# Connectivity


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = bytearray(g.n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for w, _ in g.adjacency[v]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                queue.append(w)
    return count == g.n


def _connected_after_removal(g: Graph, removed: frozenset) -> bool:
    rest = [v for v in range(g.n) if v not in removed]
    if not rest:
        return True
    seen = set(removed)
    seen.add(rest[0])
    queue = deque([rest[0]])
    count = 1
    while queue:
        v = queue.popleft()
        for w, _ in g.adjacency[v]:
            if w not in seen:
                seen.add(w)
                count += 1
                queue.append(w)
    return count == len(rest)


def _max_vertex_disjoint_paths_at_least(g: Graph, s: int, t: int, k: int) -> bool:
    """Menger check: >= k internally vertex-disjoint s-t paths (s, t non-adjacent).

    Unit-capacity max flow on the vertex-split digraph, stopped at k.
    """
    # node 2v = v_in, 2v+1 = v_out
    succ = {}
    for v in range(g.n):
        cap = 10**9 if v in (s, t) else 1
        succ[(2 * v, 2 * v + 1)] = cap
        for w, _ in g.adjacency[v]:
            succ[(2 * v + 1, 2 * w)] = 1
    flow = 0
    while flow < k:
        # BFS augmenting path from s_out to t_in
        parent = {2 * s + 1: None}
        queue = deque([2 * s + 1])
        while queue and 2 * t not in parent:
            x = queue.popleft()
            for (a, b), c in succ.items():
                if a == x and c > 0 and b not in parent:
                    parent[b] = (a, b)
                    queue.append(b)
        if 2 * t not in parent:
            return False
        x = 2 * t
        while parent[x] is not None:
            a, b = parent[x]
            succ[(a, b)] -= 1
            succ[(b, a)] = succ.get((b, a), 0) + 1
            x = a
        flow += 1
    return True


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff |V| > k and no vertex set of size <= k-1 disconnects g."""
    if k < 1:
        raise InvalidParameter("k must be positive")
    if g.n <= k:
        return False
    if not is_connected(g):
        return False
    if k == 1:
        return True
    if g.n <= 20:
        for size in range(1, k):
            for cut in itertools.combinations(range(g.n), size):
                if not _connected_after_removal(g, frozenset(cut)):
                    return False
        return True
    # larger graphs: disjoint-path counting over non-adjacent pairs
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if g.has_edge(s, t):
                continue
            if not _max_vertex_disjoint_paths_at_least(g, s, t, k):
                return False
    return True


def is_minimally_2_connected(g: Graph) -> bool:
    if not is_k_connected(g, 2):
        return False
    return all(not is_k_connected(g.without_edge(eid), 2) for eid in range(g.e))


# ---------------------------------------------------------------------------
# Block decomposition


@dataclass(frozen=True)
class Block:
    """A block: edge-id set plus covered vertices (isolated vertex: no edges)."""

    edge_ids: frozenset
    vertices: frozenset

    @property
    def is_two_connected(self) -> bool:
        return len(self.vertices) >= 3


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset
    # (block index, cut vertex) incidences of the block-cut tree
    block_cut_tree: tuple[tuple[int, int], ...]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Unique block decomposition, blocks ordered by smallest contained edge id.

    Iterative lowpoint DFS with an edge stack; isolated vertices become
    singleton blocks and are listed after the edged blocks.
    """
    n = g.n
    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    pedge = [-1] * n
    it = [0] * n
    edge_stack = []
    raw_blocks = []
    timer = 0
    for root in range(n):
        if disc[root] != -1 or not adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [root]
        while stack:
            v = stack[-1]
            if it[v] < len(adj[v]):
                w, eid = adj[v][it[v]]
                it[v] += 1
                if disc[w] == -1:
                    pedge[w] = eid
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append(eid)
                    stack.append(w)
                elif eid != pedge[v] and disc[w] < disc[v]:
                    edge_stack.append(eid)
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    u = stack[-1]
                    if low[v] < low[u]:
                        low[u] = low[v]
                    if low[v] >= disc[u]:
                        blk = set()
                        while True:
                            top = edge_stack.pop()
                            blk.add(top)
                            if top == pedge[v]:
                                break
                        raw_blocks.append(blk)

    blocks = []
    for blk in sorted(raw_blocks, key=min):
        verts = set()
        for eid in blk:
            verts.update(g.edges[eid])
        blocks.append(Block(frozenset(blk), frozenset(verts)))
    for v in range(n):
        if not adj[v]:
            blocks.append(Block(frozenset(), frozenset({v})))

    membership = [0] * n
    for blk in blocks:
        for v in blk.vertices:
            membership[v] += 1
    cut = frozenset(v for v in range(n) if membership[v] >= 2)
    tree = tuple(
        (i, v)
        for i, blk in enumerate(blocks)
        for v in sorted(blk.vertices)
        if v in cut
    )
    return BlockDecomposition(tuple(blocks), cut, tree)


# ---------------------------------------------------------------------------
# Ear decomposition


@dataclass(frozen=True)
class EarDecomposition:
    """Initial cycle plus ears; replaying them reproduces E(G) exactly."""

    initial_cycle: tuple[int, ...]
    ears: tuple[tuple[int, ...], ...]

    def replayed_edge_ids(self, g: Graph) -> frozenset:
        ids = set()
        cyc = self.initial_cycle
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            ids.add(g.edge_id(a, b))
        for ear in self.ears:
            for a, b in zip(ear, ear[1:]):
                ids.add(g.edge_id(a, b))
        return frozenset(ids)


def _shortest_cycle_through_vertex(g: Graph, v0: int) -> tuple[int, ...]:
    """Lexicographically least shortest cycle through v0 (iterative deepening)."""
    for length in range(3, g.n + 1):
        found = _lex_cycle_of_length(g, v0, length)
        if found is not None:
            return found
    raise InvalidParameter(f"no cycle through vertex {v0}")


def _lex_cycle_of_length(g: Graph, v0: int, length: int):
    path = [v0]
    on_path = {v0}

    def extend():
        if len(path) == length:
            return g.has_edge(path[-1], v0)
        for w, _ in g.adjacency[path[-1]]:
            if w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            if extend():
                return True
            on_path.discard(path.pop())
        return False

    if extend():
        return tuple(path)
    return None


def ear_decomposition(g: Graph) -> EarDecomposition:
    """Cycle-plus-ears build of a 2-connected graph.

    The initial cycle is the shortest cycle through vertex 0 (lexicographically
    least); each ear starts from the lowest uncovered edge id incident to the
    built subgraph and returns to it by a shortest, lex-least detour.
    """
    if not is_k_connected(g, 2):
        raise NotTwoConnected("ear decomposition needs a 2-connected graph")
    cycle = _shortest_cycle_through_vertex(g, 0)
    covered_v = set(cycle)
    covered_e = set()
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        covered_e.add(g.edge_id(a, b))
    ears = []
    while len(covered_e) < g.e:
        eid = min(
            e
            for e in range(g.e)
            if e not in covered_e
            and (g.edges[e][0] in covered_v or g.edges[e][1] in covered_v)
        )
        a, b = g.edges[eid]
        if a in covered_v and b in covered_v:
            ear = (min(a, b), max(a, b))
        else:
            u, x = (a, b) if a in covered_v else (b, a)
            tail = _lex_shortest_path_to_set(g, x, covered_v, forbidden_target=u)
            ear = (u,) + tail
        ears.append(ear)
        covered_v.update(ear)
        for p, q in zip(ear, ear[1:]):
            covered_e.add(g.edge_id(p, q))
    return EarDecomposition(cycle, tuple(ears))


def _lex_shortest_path_to_set(g: Graph, start: int, targets: set, forbidden_target: int):
    """Lex-least shortest path from start to targets-{forbidden}, internally outside targets."""
    dist = {start: 0}
    queue = deque([start])
    best_len = None
    while queue:
        v = queue.popleft()
        if best_len is not None and dist[v] + 1 > best_len:
            break
        for w, _ in g.adjacency[v]:
            if w in targets:
                if w != forbidden_target and best_len is None:
                    best_len = dist[v] + 1
                continue
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    if best_len is None:
        raise NotTwoConnected("no return path for ear; graph not 2-connected")

    # depth-limited lex-least reconstruction
    path = [start]
    on_path = {start}

    def extend():
        v = path[-1]
        depth = len(path) - 1
        if depth == best_len - 1:
            for w, _ in g.adjacency[v]:
                if w in targets and w != forbidden_target:
                    path.append(w)
                    return True
            return False
        for w, _ in g.adjacency[v]:
            if w in targets or w in on_path:
                continue
            if dist.get(w, 10**9) > depth + 1:
                continue
            path.append(w)
            on_path.add(w)
            if extend():
                return True
            on_path.discard(path.pop())
        return False

    assert extend()
    return tuple(path)


# ---------------------------------------------------------------------------
# Cycles: enumeration, girth, circumference, Hamiltonicity


def enumerate_simple_cycles(g: Graph, budget=None):
    """All simple cycles, each once: rooted at its minimum vertex, direction
    fixed by second-vertex < last-vertex. Returns vertex tuples."""
    b = budget if isinstance(budget, Budget) else Budget(budget)
    cycles = []
    adj = g.adjacency
    for root in range(g.n):
        path = [root]
        on_path = {root}

        def extend():
            b.spend()
            v = path[-1]
            for w, _ in adj[v]:
                if w <= root:
                    if w == root and len(path) >= 3 and path[1] < path[-1]:
                        cycles.append(tuple(path))
                    continue
                if w in on_path:
                    continue
                path.append(w)
                on_path.add(w)
                extend()
                on_path.discard(path.pop())

        extend()
    return cycles


def cycle_vertices_to_edge_ids(g: Graph, cycle) -> tuple[int, ...]:
    return tuple(g.edge_id(a, b) for a, b in zip(cycle, cycle[1:] + cycle[:1]))


def girth(g: Graph):
    """Length of the shortest cycle, or None if acyclic."""
    best = None
    for eid, (u, v) in enumerate(g.edges):
        # distance u..v avoiding this edge
        dist = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            if best is not None and dist[x] + 1 >= best:
                break
            for y, e2 in g.adjacency[x]:
                if e2 == eid or y in dist:
                    continue
                dist[y] = dist[x] + 1
                if y == v:
                    queue.clear()
                    break
                queue.append(y)
        if v in dist and (best is None or dist[v] + 1 < best):
            best = dist[v] + 1
    return best


def _hamilton_prune(adj, unvisited, current, start) -> bool:
    """False if some unvisited vertex cannot keep two open connections."""
    for w in unvisited:
        free = 0
        for x, _ in adj[w]:
            if x in unvisited or x == current or x == start:
                free += 1
                if free >= 2:
                    break
        if free < 2:
            return False
    return True


def find_hamilton_cycle(g: Graph, budget=None):
    """First Hamilton cycle in deterministic DFS order, or None."""
    if g.n < 3 or not is_connected(g):
        return None
    if any(g.degree(v) < 2 for v in range(g.n)):
        return None
    b = budget if isinstance(budget, Budget) else Budget(budget)
    adj = g.adjacency
    path = [0]
    unvisited = set(range(1, g.n))

    def extend():
        b.spend()
        v = path[-1]
        if not unvisited:
            return g.has_edge(v, 0)
        if not _hamilton_prune(adj, unvisited, v, 0):
            return False
        for w, _ in adj[v]:
            if w not in unvisited:
                continue
            unvisited.discard(w)
            path.append(w)
            if extend():
                return True
            path.pop()
            unvisited.add(w)
        return False

    if extend():
        return tuple(path)
    return None


def enumerate_hamilton_cycles(g: Graph, budget=None):
    """All Hamilton cycles (rooted at vertex 0, direction path[1] < path[-1])."""
    if g.n < 3:
        return []
    b = budget if isinstance(budget, Budget) else Budget(budget)
    adj = g.adjacency
    path = [0]
    unvisited = set(range(1, g.n))
    out = []

    def extend():
        b.spend()
        v = path[-1]
        if not unvisited:
            if g.has_edge(v, 0) and path[1] < path[-1]:
                out.append(tuple(path))
            return
        if not _hamilton_prune(adj, unvisited, v, 0):
            return
        for w, _ in adj[v]:
            if w not in unvisited:
                continue
            unvisited.discard(w)
            path.append(w)
            extend()
            path.pop()
            unvisited.add(w)

    extend()
    return out


def circumference(g: Graph, budget=None) -> int:
    """Length of the longest cycle (0 if acyclic), by exhaustive DFS."""
    b = budget if isinstance(budget, Budget) else Budget(budget)
    if find_hamilton_cycle(g, b) is not None:
        return g.n
    best = 0
    adj = g.adjacency
    for root in range(g.n):
        path = [root]
        on_path = {root}

        def extend():
            nonlocal best
            b.spend()
            v = path[-1]
            for w, _ in adj[v]:
                if w == root and len(path) >= 3:
                    if len(path) > best:
                        best = len(path)
                if w <= root or w in on_path:
                    continue
                path.append(w)
                on_path.add(w)
                extend()
                on_path.discard(path.pop())

        extend()
    return best


@dataclass(frozen=True)
class GraphInvariants:
    girth: int | None
    circumference: int
    is_hamiltonian: bool


def graph_invariants(g: Graph, budget=None) -> GraphInvariants:
    """Exact girth / circumference / Hamiltonicity.

    On budget exhaustion re-raises BudgetExceeded carrying the fields computed
    so far as the partial result.
    """
    b = budget if isinstance(budget, Budget) else Budget(budget)
    gr = girth(g)
    try:
        ham = find_hamilton_cycle(g, b) is not None
        circ = g.n if ham else circumference(g, b)
    except BudgetExceeded as exc:
        raise BudgetExceeded(exc.nodes, partial={"girth": gr}) from None
    return GraphInvariants(gr, circ, ham)


def is_hypohamiltonian(g: Graph, budget=None) -> bool:
    """Not Hamiltonian, but every vertex-deleted subgraph is."""
    if g.n < 3:
        raise InvalidParameter("need at least 3 vertices")
    b = budget if isinstance(budget, Budget) else Budget(budget)
    if find_hamilton_cycle(g, b) is not None:
        return False
    for v in range(g.n):
        sub, _ = delete_vertex(g, v)
        if find_hamilton_cycle(sub, b) is None:
            return False
    return True


# ---------------------------------------------------------------------------
# Cycles through prescribed vertices, F_k membership


def cycle_through_exists(g: Graph, s, budget=None) -> bool:
    """Exact: is there a simple cycle containing every vertex of s?"""
    s = sorted(set(s))
    if not s:
        raise InvalidParameter("need at least one vertex")
    b = budget if isinstance(budget, Budget) else Budget(budget)
    anchor = s[0]
    needed = set(s[1:])
    adj = g.adjacency
    path = [anchor]
    on_path = {anchor}

    def extend(missing):
        b.spend()
        v = path[-1]
        if not missing and len(path) >= 3 and g.has_edge(v, anchor):
            return True
        for w, _ in adj[v]:
            if w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            took = w in missing
            if took:
                missing.discard(w)
            if extend(missing):
                return True
            if took:
                missing.add(w)
            on_path.discard(path.pop())
        return False

    return extend(set(needed))


def in_family_Fk(g: Graph, k: int, budget=None) -> bool:
    """Membership in F_k: any k vertices lie on a common cycle.

    k = 1 and k = 2 use the structural characterisations (2-connected blocks,
    2-connectivity); k >= 3 falls back to checking every k-subset, which is
    exponential -- a cheap Hamiltonicity shortcut covers the common case.
    """
    if k < 1:
        raise InvalidParameter("k must be positive")
    if k > g.n:
        return False
    if k == 1:
        dec = block_decomposition(g)
        good = set()
        for blk in dec.blocks:
            if blk.is_two_connected:
                good.update(blk.vertices)
        return len(good) == g.n
    if not is_k_connected(g, 2):
        return False
    if k == 2:
        return True
    b = budget if isinstance(budget, Budget) else Budget(budget)
    try:
        if find_hamilton_cycle(g, Budget(min(b.limit, 2_000_000))) is not None:
            return True
    except BudgetExceeded:
        pass
    for s in itertools.combinations(range(g.n), k):
        if not cycle_through_exists(g, s, b):
            return False
    return True
