"""Exact decision procedures over coloured graphs.

Every search here is complete: it returns a witness iff one exists, or raises
BudgetExceeded when the node budget runs out. Cycle searches anchor at the
lowest-id vertex of the requested set and explore neighbours in ascending
order, so the first witness found is deterministic.
"""

from __future__ import annotations

import itertools
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .colouring import CycleWitness, EdgeColouring, TreeWitness, WalkWitness
from .errors import InvalidParameter, NotInFamily
from .graph import Budget, Graph, in_family_Fk, is_connected

INF = float("inf")


def colex_subsets(n: int, k: int, universe=None):
    """All k-subsets of range(n) (or of ``universe``) in colexicographic order."""
    items = list(range(n)) if universe is None else list(universe)

    def rec(m, k):
        if k == 0:
            yield ()
            return
        for top in range(k - 1, m):
            for rest in rec(top, k - 1):
                yield rest + (top,)

    for idx in rec(len(items), k):
        yield tuple(items[i] for i in idx)


def _bfs_distances(g: Graph, source: int) -> list:
    dist = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w, _ in g.adjacency[v]:
            if dist[w] is INF or dist[w] > dist[v] + 1:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


# ---------------------------------------------------------------------------
# Rainbow cycles


def rainbow_cycle_through(c: EdgeColouring, s, budget=None):
    """First rainbow simple cycle containing every vertex of s, else None."""
    g = c.graph
    s = sorted(set(s))
    if not s:
        raise InvalidParameter("need at least one vertex")
    b = budget if isinstance(budget, Budget) else Budget(budget)
    anchor = s[0]
    r = c.r
    dist_anchor = _bfs_distances(g, anchor)
    dist_to = {v: _bfs_distances(g, v) for v in s[1:]}
    adj = g.adjacency
    colour_of = c.colour_of
    path = [anchor]
    on_path = {anchor}
    used_cols = set()
    edge_ids = []

    def lower_bound(v, missing):
        lb = dist_anchor[v]
        for m in missing:
            need = dist_to[m][v] + dist_anchor[m]
            if need > lb:
                lb = need
        return lb

    def extend(missing):
        b.spend()
        v = path[-1]
        if not missing and len(path) >= 3 and g.has_edge(v, anchor):
            eid = g.edge_id(v, anchor)
            if colour_of[eid] not in used_cols:
                edge_ids.append(eid)
                return True
        if len(path) + lower_bound(v, missing) > r + 1:
            return False  # even the cheapest completion exceeds the palette
        for w, eid in adj[v]:
            if w in on_path:
                continue
            col = colour_of[eid]
            if col in used_cols:
                continue
            path.append(w)
            on_path.add(w)
            used_cols.add(col)
            edge_ids.append(eid)
            took = w in missing
            if took:
                missing.discard(w)
            if extend(missing):
                return True
            if took:
                missing.add(w)
            edge_ids.pop()
            used_cols.discard(col)
            on_path.discard(path.pop())
        return False

    if extend(set(s[1:])):
        return CycleWitness(tuple(path), tuple(edge_ids))
    return None


def min_cycle_length_through(g: Graph, s, budget=None, cap=None):
    """Exact minimum length of a simple cycle containing s, or None if none.

    Iterative deepening: level L is a complete search over cycles of length
    at most L, so the first level that yields a cycle is the exact minimum.
    With ``cap`` the search stops early and returns None when the minimum
    provably exceeds it.
    """
    s = sorted(set(s))
    if not s:
        raise InvalidParameter("need at least one vertex")
    b = budget if isinstance(budget, Budget) else Budget(budget)
    anchor = s[0]
    dist_anchor = _bfs_distances(g, anchor)
    dist_to = {v: _bfs_distances(g, v) for v in s[1:]}
    if any(dist_to[v][anchor] is INF for v in s[1:]):
        return None
    adj = g.adjacency
    lb0 = 3
    for v in s[1:]:
        lb0 = max(lb0, 2 * int(dist_to[v][anchor]))
        for w in s[1:]:
            if w > v and dist_to[w][v] is not INF:
                lb0 = max(lb0, 2 * int(dist_to[w][v]))
    top = g.n if cap is None else min(cap, g.n)
    path = [anchor]
    on_path = {anchor}

    def lower_bound(v, missing):
        lb = dist_anchor[v]
        for m in missing:
            need = dist_to[m][v] + dist_anchor[m]
            if need > lb:
                lb = need
        return lb

    def extend(missing, limit):
        b.spend()
        v = path[-1]
        if not missing and len(path) >= 3 and g.has_edge(v, anchor):
            return True
        if len(path) - 1 + lower_bound(v, missing) > limit:
            return False
        for w, _ in adj[v]:
            if w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            took = w in missing
            if took:
                missing.discard(w)
            if extend(missing, limit):
                return True
            if took:
                missing.add(w)
            on_path.discard(path.pop())
        return False

    for limit in range(lb0, top + 1):
        if extend(set(s[1:]), limit):
            return len(path)
    return None


# ---------------------------------------------------------------------------
# Rainbow trees


def rainbow_tree_through(c: EdgeColouring, s, budget=None):
    """First rainbow tree connecting every vertex of s, else None.

    Grows a connected subtree from the lowest-id vertex of s; failed
    (vertex-set, colour-set) states are memoised, which keeps the search
    exact while taming the duplicate growth orders.
    """
    g = c.graph
    s = sorted(set(s))
    if not s:
        raise InvalidParameter("need at least one vertex")
    b = budget if isinstance(budget, Budget) else Budget(budget)
    start = s[0]
    needed = frozenset(s)
    adj = g.adjacency
    colour_of = c.colour_of
    dead = set()
    edges_taken = []

    def grow(tree: frozenset, cols: frozenset) -> bool:
        b.spend()
        if needed <= tree:
            return True
        if len(tree) > c.r:  # a rainbow tree has at most r edges
            return False
        key = (tree, cols)
        if key in dead:
            return False
        frontier = []
        for v in tree:
            for w, eid in adj[v]:
                if w not in tree and colour_of[eid] not in cols:
                    frontier.append((eid, v, w))
        for eid, v, w in sorted(frontier):
            edges_taken.append(eid)
            if grow(tree | {w}, cols | {colour_of[eid]}):
                return True
            edges_taken.pop()
        dead.add(key)
        return False

    if grow(frozenset({start}), frozenset()):
        verts = set()
        for eid in edges_taken:
            verts.update(g.edges[eid])
        verts.add(start)
        return TreeWitness(tuple(edges_taken), frozenset(verts))
    return None


# ---------------------------------------------------------------------------
# Full verification


@dataclass(frozen=True)
class VerificationReport:
    status: str  # "certified" | "counterexample"
    bad_set: tuple | None
    subsets_checked: int
    search_nodes: int

    @property
    def certified(self) -> bool:
        return self.status == "certified"


def _cycle_chunk_worker(args):
    n, edges, colours, r, subsets = args
    c = EdgeColouring(Graph(n, edges), colours, r, unused_ok=True)
    bad = None
    nodes = 0
    for s in subsets:
        b = Budget()
        if rainbow_cycle_through(c, s, b) is None:
            bad = s
            nodes += b.used
            break
        nodes += b.used
    return bad, nodes


def verify_k_rainbow_cycle_colouring(c: EdgeColouring, k: int, budget=None,
                                     workers: int = 1,
                                     check_family: bool = True) -> VerificationReport:
    """Check that every k-subset of vertices lies on a rainbow cycle.

    Subsets are visited in colex order and the first counterexample reported
    is the colex-least one, in sequential and parallel mode alike. Callers
    that re-verify the same graph can skip the F_k precheck.
    """
    g = c.graph
    if check_family and not in_family_Fk(g, k):
        raise NotInFamily(k)
    b = budget if isinstance(budget, Budget) else Budget(budget)
    if workers > 1:
        return _verify_parallel(c, k, workers)
    checked = 0
    for s in colex_subsets(g.n, k):
        checked += 1
        if rainbow_cycle_through(c, s, b) is None:
            return VerificationReport("counterexample", s, checked, b.used)
    return VerificationReport("certified", None, checked, b.used)


def _verify_parallel(c: EdgeColouring, k: int, workers: int) -> VerificationReport:
    g = c.graph
    subsets = list(colex_subsets(g.n, k))
    chunk = max(1, len(subsets) // (workers * 8))
    chunks = [subsets[i : i + chunk] for i in range(0, len(subsets), chunk)]
    payload = [(g.n, g.edges, c.colour_of, c.r, ch) for ch in chunks]
    nodes = 0
    checked = 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # chunks are scanned in colex order, so the first hit is colex-least
        for ch, (bad, used) in zip(chunks, pool.map(_cycle_chunk_worker, payload)):
            nodes += used
            if bad is not None:
                checked += ch.index(bad) + 1
                return VerificationReport("counterexample", bad, checked, nodes)
            checked += len(ch)
    return VerificationReport("certified", None, checked, nodes)


def verify_k_rainbow_index_colouring(c: EdgeColouring, k: int, budget=None) -> VerificationReport:
    """Check that every k-subset of vertices is connected by a rainbow tree."""
    g = c.graph
    if not is_connected(g):
        raise InvalidParameter("rainbow index needs a connected graph")
    b = budget if isinstance(budget, Budget) else Budget(budget)
    checked = 0
    for s in colex_subsets(g.n, k):
        checked += 1
        if rainbow_tree_through(c, s, b) is None:
            return VerificationReport("counterexample", s, checked, b.used)
    return VerificationReport("certified", None, checked, b.used)


# ---------------------------------------------------------------------------
# Pigeonhole collisions in complete bipartite graphs


def _bipartition_of_complete_bipartite(g: Graph):
    if g.n < 2 or not is_connected(g):
        raise InvalidParameter("not a complete bipartite graph")
    side = [None] * g.n
    side[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w, _ in g.adjacency[v]:
            if side[w] is None:
                side[w] = 1 - side[v]
                queue.append(w)
            elif side[w] == side[v]:
                raise InvalidParameter("not bipartite")
    a = [v for v in range(g.n) if side[v] == 0]
    bcl = [v for v in range(g.n) if side[v] == 1]
    if g.e != len(a) * len(bcl):
        raise InvalidParameter("bipartite but not complete")
    if len(a) <= len(bcl):
        return a, bcl
    return bcl, a


def colour_class_collision(c: EdgeColouring, k: int, mode: str = "auto"):
    """k vertices of the large class with identical incident colour signatures.

    mode "vector": identical colour vectors indexed by the small class U.
    mode "palette": identical incident colour sets, padded to |U| with the
    smallest absent colours -- the pigeonhole form used when 2k > |U|, where
    any cycle through the k vertices must repeat a colour.
    """
    g = c.graph
    small, large = _bipartition_of_complete_bipartite(g)
    if mode == "auto":
        mode = "palette" if 2 * k > len(small) else "vector"
    if mode not in ("vector", "palette"):
        raise InvalidParameter(f"unknown collision mode {mode!r}")
    groups = {}
    for v in large:
        vec = tuple(c.colour_of[g.edge_id(u, v)] for u in small)
        if mode == "vector":
            sig = vec
        else:
            pal = sorted(set(vec))
            pad = 0
            while len(pal) < min(len(small), c.r):
                if pad not in pal:
                    pal.append(pad)
                pad += 1
            sig = tuple(sorted(pal))
        bucket = groups.setdefault(sig, [])
        bucket.append(v)
        if len(bucket) == k:
            return tuple(bucket)
    return None


# ---------------------------------------------------------------------------
# S-subdivided closed walks


def find_subdivided_closed_walk(g: Graph, s, colouring: EdgeColouring | None = None,
                                budget=None):
    """Exact search for an S-subdivided closed walk visiting the ordered tuple s.

    Repeated consecutive anchors get the trivial path; distinct consecutive
    anchors get a path of length >= 2 whose internal vertices avoid every
    anchor and every other path. With a colouring the walk must additionally
    be rainbow. Returns a WalkWitness or None (proven absent).

    Iterative deepening on the total walk length keeps the backtracking from
    wandering: each level is a complete search over walks of that total
    length, and the distance-based level bounds make the exhaustion exact.
    """
    s = tuple(s)
    if not s:
        raise InvalidParameter("need at least one anchor")
    b = budget if isinstance(budget, Budget) else Budget(budget)
    k = len(s)
    anchor_set = set(s)
    segments = []  # (index, a, b) for the non-trivial steps
    for i in range(k):
        a, bv = s[i], s[(i + 1) % k]
        if a != bv:
            segments.append((i, a, bv))
    paths: list = [None] * k
    for i in range(k):
        if s[i] == s[(i + 1) % k]:
            paths[i] = (s[i],)
    if not segments:
        return WalkWitness(s, tuple(paths))

    dist_to = {}
    sorted_adj = {}
    for _, _, bv in segments:
        if bv not in dist_to:
            dist_to[bv] = _bfs_distances(g, bv)
            sorted_adj[bv] = tuple(
                tuple(sorted(g.adjacency[v], key=lambda t: (dist_to[bv][t[0]], t[0])))
                for v in range(g.n)
            )
    seg_lb = []
    for _, a, bv in segments:
        d = dist_to[bv][a]
        if d is INF:
            return None
        seg_lb.append(max(2, int(d)))
    rest_lb = [0] * (len(segments) + 1)
    for i in range(len(segments) - 1, -1, -1):
        rest_lb[i] = rest_lb[i + 1] + seg_lb[i]

    colour_of = colouring.colour_of if colouring is not None else None
    vertex_cap = (g.n - len(anchor_set)) + len(segments)
    cap = vertex_cap if colouring is None else min(vertex_cap, colouring.r)
    if rest_lb[0] > cap:
        return None
    blocked = set(anchor_set)
    used_cols = set()

    def solve(seg_idx, edges_left):
        if seg_idx == len(segments):
            return True
        i, a, target = segments[seg_idx]
        dist = dist_to[target]
        nbrs = sorted_adj[target]
        path = [a]

        def step():
            b.spend()
            v = path[-1]
            done = len(path) - 1
            room = edges_left - rest_lb[seg_idx + 1] - done
            # room = edges this segment may still use at the current level
            if max(dist[v], 2 - done) > room:
                return False
            for w, eid in nbrs[v]:
                col = colour_of[eid] if colour_of is not None else None
                if col is not None and col in used_cols:
                    continue
                if w == target:
                    if done < 1:  # non-trivial paths need length >= 2
                        continue
                    paths[i] = tuple(path) + (w,)
                    if col is not None:
                        used_cols.add(col)
                    inner = path[1:]
                    blocked.update(inner)
                    if solve(seg_idx + 1, edges_left - done - 1):
                        return True
                    blocked.difference_update(inner)
                    if col is not None:
                        used_cols.discard(col)
                    paths[i] = None
                    continue
                if w in blocked or w in path:
                    continue
                path.append(w)
                if col is not None:
                    used_cols.add(col)
                if step():
                    return True
                if col is not None:
                    used_cols.discard(col)
                path.pop()
            return False

        return step()

    for level in range(rest_lb[0], cap + 1):
        if solve(0, level):
            return WalkWitness(s, tuple(paths))
    return None
