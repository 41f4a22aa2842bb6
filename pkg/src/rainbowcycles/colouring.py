"""Edge colourings and the witness objects that certify rainbow structures.

Colours are 0-based everywhere; published 1-based formulas are shifted
uniformly at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameter
from .graph import Graph


@dataclass(frozen=True)
class EdgeColouring:
    """Total map edge id -> colour id in 0..r-1 on a fixed graph.

    Constructors emit surjective colourings; a colouring that legitimately
    leaves declared colours unused (e.g. a raw random sample) must say so
    via ``unused_ok``.
    """

    graph: Graph
    colour_of: tuple[int, ...]
    r: int
    unused_ok: bool = False

    def __post_init__(self):
        if len(self.colour_of) != self.graph.e:
            raise InvalidParameter("colouring must cover every edge")
        if self.r < 1 and self.graph.e > 0:
            raise InvalidParameter("need at least one colour")
        if any(c < 0 or c >= self.r for c in self.colour_of):
            raise InvalidParameter("colour id out of range")
        if not self.unused_ok and self.graph.e > 0:
            if len(set(self.colour_of)) != self.r:
                raise InvalidParameter(
                    "declared colours unused; pass unused_ok=True if intended"
                )

    def used_colours(self) -> frozenset:
        return frozenset(self.colour_of)

    def colour(self, eid: int) -> int:
        return self.colour_of[eid]


def rainbow_colouring(g: Graph) -> EdgeColouring:
    """Every edge its own colour (colour id = edge id)."""
    return EdgeColouring(g, tuple(range(g.e)), g.e if g.e else 1, unused_ok=g.e == 0)


@dataclass(frozen=True)
class CycleWitness:
    """A simple cycle given as its vertex sequence plus the edge ids used."""

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]


@dataclass(frozen=True)
class TreeWitness:
    """A tree given by its edge ids, spanning the requested vertex set."""

    edge_ids: tuple[int, ...]
    vertices: frozenset


@dataclass(frozen=True)
class WalkWitness:
    """An S-subdivided closed walk: anchors v_1..v_k plus a path per step.

    paths[i] runs from anchors[i] to anchors[(i+1) % k]; it is the one-vertex
    trivial path exactly when those anchors coincide, and has length >= 2
    otherwise. Paths share no internal vertex, and no anchor is internal to
    any path.
    """

    anchors: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]


def check_cycle_witness(g: Graph, w: CycleWitness, colouring: EdgeColouring | None = None,
                        require_rainbow: bool = False, containing=()) -> bool:
    """Re-validate a cycle witness against graph, colouring and required set."""
    vs = w.vertices
    if len(vs) < 3 or len(set(vs)) != len(vs):
        return False
    if len(w.edge_ids) != len(vs):
        return False
    for (a, b), eid in zip(zip(vs, vs[1:] + vs[:1]), w.edge_ids):
        if not g.has_edge(a, b) or g.edge_id(a, b) != eid:
            return False
    if not set(containing) <= set(vs):
        return False
    if require_rainbow:
        cols = [colouring.colour_of[eid] for eid in w.edge_ids]
        if len(set(cols)) != len(cols):
            return False
    return True


def check_tree_witness(g: Graph, w: TreeWitness, colouring: EdgeColouring | None = None,
                       require_rainbow: bool = False, containing=()) -> bool:
    """Acyclic, connected, spans the requested vertices, rainbow if claimed."""
    eids = list(w.edge_ids)
    if len(set(eids)) != len(eids):
        return False
    verts = set()
    for eid in eids:
        verts.update(g.edges[eid])
    if verts != set(w.vertices):
        return False
    if not set(containing) <= verts:
        return False
    if not eids:
        return len(containing) <= 1 and len(verts) <= 1
    if len(verts) != len(eids) + 1:
        return False  # wrong vertex/edge count for a tree
    # connected?
    adj = {v: [] for v in verts}
    for eid in eids:
        u, v = g.edges[eid]
        adj[u].append(v)
        adj[v].append(u)
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if seen != verts:
        return False
    if require_rainbow:
        cols = [colouring.colour_of[eid] for eid in eids]
        if len(set(cols)) != len(cols):
            return False
    return True


def check_walk_witness(g: Graph, w: WalkWitness, colouring: EdgeColouring | None = None,
                       require_rainbow: bool = False) -> bool:
    """Re-validate an S-subdivided closed walk, including the repeat rules."""
    k = len(w.anchors)
    if k < 1 or len(w.paths) != k:
        return False
    anchor_set = set(w.anchors)
    internals_seen = set()
    edge_ids = []
    for i, path in enumerate(w.paths):
        a, b = w.anchors[i], w.anchors[(i + 1) % k]
        if a == b:
            if path != (a,):
                return False
            continue
        if len(path) < 3 or path[0] != a or path[-1] != b:
            return False  # non-trivial paths have length >= 2
        if len(set(path)) != len(path):
            return False
        for x, y in zip(path, path[1:]):
            if not g.has_edge(x, y):
                return False
            edge_ids.append(g.edge_id(x, y))
        inner = set(path[1:-1])
        if inner & anchor_set or inner & internals_seen:
            return False
        internals_seen |= inner
    if len(set(edge_ids)) != len(edge_ids):
        return False
    if require_rainbow:
        cols = [colouring.colour_of[eid] for eid in edge_ids]
        if len(set(cols)) != len(cols):
            return False
    return True
