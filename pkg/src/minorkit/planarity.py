"""Planarity, apex, maximal planarity, connectivity, and the cone check.

Planarity itself is delegated to networkx's left-right test; the verdict
carries the combinatorial embedding (rotation system), which is
re-validated here through the Euler face count rather than trusted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from .errors import DisconnectedInputError, OrderTooSmallError, PreconditionError
from .graph import Graph, bits_of, popcount


@dataclass(frozen=True)
class PlanarityVerdict:
    planar: bool
    rotation_system: dict | None  # vertex -> clockwise neighbor list

    def __bool__(self):
        return self.planar


def _to_networkx(g: Graph) -> nx.Graph:
    ng = nx.Graph()
    ng.add_nodes_from(range(g.order))
    ng.add_edges_from(g.edges())
    return ng


def _count_faces(g: Graph, rotation: dict) -> int:
    """Trace face boundaries of an embedding: successor of half-edge
    (u, v) is (v, w) with w the neighbor after u in v's rotation."""
    nxt = {}
    for v, ring in rotation.items():
        for i, u in enumerate(ring):
            nxt[(u, v)] = (v, ring[(i + 1) % len(ring)])
    faces = 0
    seen = set()
    for he in nxt:
        if he in seen:
            continue
        faces += 1
        cur = he
        while cur not in seen:
            seen.add(cur)
            cur = nxt[cur]
    return faces


def euler_checks(g: Graph, rotation: dict) -> bool:
    """v - e + f = 1 + (#components), counting the outer face once.

    The trace walks every component's own outer boundary, so the shared
    outer face appears once per component with edges; the count is
    merged before the formula is applied.
    """
    comps = len(g.components())
    edge_comps = sum(1 for c in g.components() if popcount(c.bits) > 1)
    if g.edge_count == 0:
        faces = 1
    else:
        faces = _count_faces(g, rotation) - edge_comps + 1
    return g.order - g.edge_count + faces == 1 + comps


def is_planar(g: Graph) -> PlanarityVerdict:
    ok, embedding = nx.check_planarity(_to_networkx(g))
    if not ok:
        return PlanarityVerdict(False, None)
    rotation = {
        v: list(embedding.neighbors_cw_order(v)) if g.rows[v] else []
        for v in range(g.order)
    }
    assert euler_checks(g, rotation), "embedding fails the Euler face count"
    return PlanarityVerdict(True, rotation)


def is_apex(g: Graph):
    """Some vertex whose deletion leaves a planar graph, or None."""
    if g.order == 0:
        return None
    if is_planar(g).planar:
        return 0
    for v in range(g.order):
        if is_planar(g.delete_vertex(v)).planar:
            return v
    return None


def is_maximal_planar(g: Graph) -> bool:
    """Planar with the full 3n-6 edge budget (every face a triangle)."""
    if g.order < 3:
        raise OrderTooSmallError("maximal planarity needs order >= 3")
    return g.edge_count == 3 * g.order - 6 and is_planar(g).planar


_CUT_ENUM_LIMIT = 5  # exhaustive vertex-cut enumeration stops here


def _connected_after_removal(g: Graph, removed_mask: int) -> bool:
    rest = g.full_mask() & ~removed_mask
    if rest == 0:
        return True
    seed = (rest & -rest).bit_length() - 1
    return g.component_of(seed, rest) == rest


def _local_connectivity(g: Graph, s: int, t: int) -> int:
    """Max number of internally disjoint s-t paths (s,t non-adjacent),
    by unit-capacity augmenting paths on the vertex-split digraph."""
    n = g.order
    # node 2v = v_in, 2v+1 = v_out; capacity 1 on in->out except s, t
    cap = {}

    def add(a, b, c):
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)

    for v in range(n):
        add(2 * v, 2 * v + 1, n if v in (s, t) else 1)
    for u, v in g.edges():
        add(2 * u + 1, 2 * v, n)
        add(2 * v + 1, 2 * u, n)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        # BFS for an augmenting path
        parent = {source: None}
        queue = [source]
        while queue and sink not in parent:
            a = queue.pop(0)
            for (x, y), c in cap.items():
                if x == a and c > 0 and y not in parent:
                    parent[y] = a
                    queue.append(y)
        if sink not in parent:
            return flow
        node = sink
        while parent[node] is not None:
            prev = parent[node]
            cap[(prev, node)] -= 1
            cap[(node, prev)] += 1
            node = prev
        flow += 1


def connectivity(g: Graph) -> int:
    """Minimum vertex-cut size; order-1 for complete graphs.

    Cuts up to size 5 are found by exhaustive enumeration; anything
    higher falls back to max-flow local connectivity over all
    non-adjacent pairs.
    """
    if not g.is_connected():
        raise DisconnectedInputError("connectivity of a disconnected graph")
    n = g.order
    if g.edge_count == n * (n - 1) // 2:
        return n - 1
    for size in range(1, min(_CUT_ENUM_LIMIT, n - 1) + 1):
        for combo in itertools.combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if not _connected_after_removal(g, mask):
                return size
    best = n - 1
    for s in range(n):
        for t in range(s + 1, n):
            if not g.has_edge(s, t):
                best = min(best, _local_connectivity(g, s, t))
    return best


def lemma_cone_check(g: Graph, v: int) -> bool:
    """For a graph of size 4n-10 whose deletion of v is planar, v must
    be adjacent to every other vertex.  Returns that assertion's value;
    False would indicate a bug (or broken preconditions)."""
    n = g.order
    if g.edge_count != 4 * n - 10:
        raise PreconditionError(f"size {g.edge_count} != 4n-10 = {4 * n - 10}")
    if not is_planar(g.delete_vertex(v)).planar:
        raise PreconditionError(f"deleting vertex {v} does not leave a planar graph")
    return g.degree(v) == n - 1
