"""Immutable bitmask graph type and the structural operations on it.

Vertices are the integers 0..order-1.  Each adjacency row is a Python int
used as a bitmask, so a whole neighborhood test is one AND.  The capacity
is capped at 64 vertices: one machine word per row, which comfortably
covers everything this toolkit works on (nothing exceeds order 26).

All operations return fresh values; nothing mutates a Graph after
construction, so graphs can be shared freely between workers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce

from .errors import (
    CapacityExceededError,
    EmptyGraphError,
    LoopEdgeError,
    NotACliqueError,
    NotAnEdgeError,
    OrderTooLargeError,
    TrivialPartitionError,
    VertexIndexError,
)

MAX_ORDER = 64


def bits_of(mask: int):
    """Iterate the set bit positions of a mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of some host graph, stored as a bitmask."""

    bits: int

    @classmethod
    def from_iterable(cls, vertices) -> "VertexSet":
        bits = 0
        for v in vertices:
            bits |= 1 << v
        return cls(bits)

    def members(self):
        return list(bits_of(self.bits))

    def __len__(self) -> int:
        return popcount(self.bits)

    def __contains__(self, v: int) -> bool:
        return bool(self.bits >> v & 1)

    def __iter__(self):
        return bits_of(self.bits)


class Graph:
    """Immutable simple graph on 0..order-1 with bitmask adjacency rows."""

    __slots__ = ("order", "rows", "_hash")

    def __init__(self, order: int, rows):
        if order > MAX_ORDER:
            raise CapacityExceededError(f"order {order} exceeds {MAX_ORDER}")
        rows = tuple(rows)
        assert len(rows) == order
        full = (1 << order) - 1
        for v, row in enumerate(rows):
            assert row >> v & 1 == 0, "loop"
            assert row & ~full == 0, "bits beyond order"
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    # -- construction ---------------------------------------------------

    @classmethod
    def from_edges(cls, order: int, edges) -> "Graph":
        if order > MAX_ORDER:
            raise CapacityExceededError(f"order {order} exceeds {MAX_ORDER}")
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise LoopEdgeError(f"loop edge ({u}, {v})")
            if not (0 <= u < order and 0 <= v < order):
                raise VertexIndexError(f"edge ({u}, {v}) out of range for order {order}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, rows)

    # -- basic queries --------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.order == other.order
            and self.rows == other.rows
        )

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.order, self.rows)))
        return self._hash

    def __repr__(self):
        return f"Graph(order={self.order}, edges={self.edges()})"

    @property
    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def edges(self):
        return [
            (u, v)
            for u in range(self.order)
            for v in bits_of(self.rows[u])
            if u < v
        ]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return popcount(self.rows[v])

    def degree_sequence(self):
        """Sorted non-decreasing degree tuple."""
        return tuple(sorted(popcount(r) for r in self.rows))

    def min_degree(self) -> int:
        if self.order == 0:
            raise EmptyGraphError("min degree of the empty graph is undefined")
        return min(popcount(r) for r in self.rows)

    def neighbors(self, v: int):
        self._check_vertex(v)
        return list(bits_of(self.rows[v]))

    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def neighborhood_of_set(self, mask: int) -> int:
        """Union of rows over a vertex mask, minus the mask itself."""
        out = 0
        for v in bits_of(mask):
            out |= self.rows[v]
        return out & ~mask

    def _check_vertex(self, v: int):
        if not (0 <= v < self.order):
            raise VertexIndexError(f"vertex {v} out of range for order {self.order}")

    # -- minor operations ----------------------------------------------

    def contract_edge(self, u: int, v: int) -> "Graph":
        """Contract edge uv: the merged vertex keeps the smaller index.

        Indices above the removed endpoint shift down by one, so vertex
        labels of the result are 0..order-2 with no gaps.
        """
        if not self.has_edge(u, v):
            raise NotAnEdgeError(f"({u}, {v}) is not an edge")
        new_index = self.contraction_map(u, v)
        edges = set()
        for a, b in self.edges():
            na, nb = new_index[a], new_index[b]
            if na != nb:
                edges.add((min(na, nb), max(na, nb)))
        return Graph.from_edges(self.order - 1, edges)

    def contraction_map(self, u: int, v: int):
        """Old-index -> new-index map for contract_edge(u, v)."""
        keep, gone = (u, v) if u < v else (v, u)
        out = []
        for w in range(self.order):
            if w < gone:
                out.append(w)
            elif w == gone:
                out.append(keep)
            else:
                out.append(w - 1)
        return out

    def delete_vertex(self, v: int) -> "Graph":
        """G - v with indices above v shifted down."""
        self._check_vertex(v)
        rows = []
        for w in range(self.order):
            if w == v:
                continue
            row = self.rows[w]
            low = row & ((1 << v) - 1)
            high = row >> (v + 1)
            rows.append(low | high << v)
        return Graph(self.order - 1, rows)

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise NotAnEdgeError(f"({u}, {v}) is not an edge")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.order, rows)

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise LoopEdgeError(f"loop edge ({u}, {v})")
        self._check_vertex(u)
        self._check_vertex(v)
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.order, rows)

    def induced(self, subset):
        """Induced subgraph on a VertexSet or mask.

        Returns (graph, index_map) where index_map[i] is the host vertex
        that became vertex i of the subgraph.
        """
        mask = subset.bits if isinstance(subset, VertexSet) else subset
        if mask & ~self.full_mask():
            raise VertexIndexError("subset contains vertices beyond order")
        index_map = list(bits_of(mask))
        pos = {v: i for i, v in enumerate(index_map)}
        rows = []
        for v in index_map:
            row = 0
            for w in bits_of(self.rows[v] & mask):
                row |= 1 << pos[w]
            rows.append(row)
        return Graph(len(index_map), rows), index_map

    def complement(self) -> "Graph":
        full = self.full_mask()
        return Graph(
            self.order,
            [full & ~r & ~(1 << v) for v, r in enumerate(self.rows)],
        )

    def relabel(self, perm) -> "Graph":
        """Apply permutation: new vertex perm[v] plays old vertex v."""
        rows = [0] * self.order
        for v in range(self.order):
            row = 0
            for w in bits_of(self.rows[v]):
                row |= 1 << perm[w]
            rows[perm[v]] = row
        return Graph(self.order, rows)

    # -- connectivity structure ----------------------------------------

    def component_of(self, seed: int, within: int | None = None) -> int:
        """Mask of the component containing seed, restricted to `within`."""
        if within is None:
            within = self.full_mask()
        frontier = 1 << seed & within
        seen = frontier
        while frontier:
            nxt = 0
            for v in bits_of(frontier):
                nxt |= self.rows[v]
            frontier = nxt & within & ~seen
            seen |= frontier
        return seen

    def components(self):
        """Connected components as VertexSets, by least vertex."""
        left = self.full_mask()
        out = []
        while left:
            seed = (left & -left).bit_length() - 1
            comp = self.component_of(seed)
            out.append(VertexSet(comp))
            left &= ~comp
        return out

    def is_connected(self) -> bool:
        if self.order == 0:
            return True
        return self.component_of(0) == self.full_mask()

    def blocks(self):
        """Maximal 2-connected pieces and bridges, as vertex sets.

        Standard DFS lowpoint block decomposition; a bridge shows up as a
        2-vertex block.  Isolated vertices yield singleton sets.
        """
        n = self.order
        visited = [False] * n
        depth = [0] * n
        low = [0] * n
        out = []
        edge_stack = []

        for root in range(n):
            if visited[root]:
                continue
            if self.rows[root] == 0:
                visited[root] = True
                out.append(VertexSet(1 << root))
                continue
            # iterative DFS to stay clear of recursion limits
            stack = [(root, -1, iter(self.neighbors(root)))]
            visited[root] = True
            depth[root] = low[root] = 0
            while stack:
                v, parent, it = stack[-1]
                advanced = False
                for w in it:
                    if not visited[w]:
                        edge_stack.append((v, w))
                        visited[w] = True
                        depth[w] = low[w] = depth[v] + 1
                        stack.append((w, v, iter(self.neighbors(w))))
                        advanced = True
                        break
                    elif w != parent and depth[w] < depth[v]:
                        edge_stack.append((v, w))
                        low[v] = min(low[v], depth[w])
                if advanced:
                    continue
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if low[v] >= depth[pv]:
                        mask = 0
                        while edge_stack:
                            a, b = edge_stack[-1]
                            if depth[a] >= depth[v] or (a, b) == (pv, v):
                                edge_stack.pop()
                                mask |= 1 << a | 1 << b
                                if (a, b) == (pv, v):
                                    break
                            else:
                                break
                        if mask:
                            out.append(VertexSet(mask))
        return out

    # -- degree/partition bookkeeping ----------------------------------

    def nhl_partition(self, v: int):
        """Split G around v into neighborhood N, non-neighbors H, crossing L.

        Returns (n_graph, h_graph, l_count, identities) where identities
        are the two degree-sum checks
        sum_{u in N}(deg(u)-1) = 2|E(N)| + |L| and
        sum_{w in H} deg(w)    = 2|E(H)| + |L|.
        """
        self._check_vertex(v)
        n_mask = self.rows[v]
        if n_mask == 0:
            raise VertexIndexError(f"vertex {v} has no neighbors")
        h_mask = self.full_mask() & ~n_mask & ~(1 << v)
        if h_mask == 0:
            raise TrivialPartitionError("no non-neighbors: H is empty")
        n_graph, n_map = self.induced(n_mask)
        h_graph, _ = self.induced(h_mask)
        l_count = 0
        for u in bits_of(n_mask):
            l_count += popcount(self.rows[u] & h_mask)
        ident_n = sum(self.degree(u) - 1 for u in bits_of(n_mask))
        ident_h = sum(self.degree(w) for w in bits_of(h_mask))
        assert ident_n == 2 * n_graph.edge_count + l_count
        assert ident_h == 2 * h_graph.edge_count + l_count
        return n_graph, h_graph, l_count, [ident_n, ident_h]


# -- binary constructions ----------------------------------------------


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every cross edge."""
    n1, n2 = g1.order, g2.order
    if n1 + n2 > MAX_ORDER:
        raise CapacityExceededError(f"joined order {n1 + n2} exceeds {MAX_ORDER}")
    other1 = ((1 << n2) - 1) << n1
    other2 = (1 << n1) - 1
    rows = [r | other1 for r in g1.rows]
    rows += [r << n1 | other2 for r in g2.rows]
    return Graph(n1 + n2, rows)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    n1, n2 = g1.order, g2.order
    if n1 + n2 > MAX_ORDER:
        raise CapacityExceededError(f"union order {n1 + n2} exceeds {MAX_ORDER}")
    rows = list(g1.rows) + [r << n1 for r in g2.rows]
    return Graph(n1 + n2, rows)


def is_clique(g: Graph, vertices) -> bool:
    vs = list(vertices)
    return all(g.has_edge(u, v) for u, v in itertools.combinations(vs, 2))


def clique_sum(g1: Graph, g2: Graph, x, y) -> Graph:
    """Glue g1 and g2 by identifying the cliques x (in g1) and y (in g2).

    x[i] is identified with y[i].  The result keeps g1's labels; the
    non-identified vertices of g2 follow in their g2 order.
    """
    x, y = list(x), list(y)
    if len(x) != len(y):
        raise NotACliqueError("clique lists differ in length")
    if len(set(x)) != len(x) or len(set(y)) != len(y):
        raise NotACliqueError("repeated vertex in clique list")
    if not is_clique(g1, x):
        raise NotACliqueError(f"{x} does not induce a complete subgraph of g1")
    if not is_clique(g2, y):
        raise NotACliqueError(f"{y} does not induce a complete subgraph of g2")
    p = len(x)
    order = g1.order + g2.order - p
    if order > MAX_ORDER:
        raise CapacityExceededError(f"glued order {order} exceeds {MAX_ORDER}")
    # map g2 vertices into the result
    g2_map = {}
    nxt = g1.order
    y_to_x = dict(zip(y, x))
    for v in range(g2.order):
        if v in y_to_x:
            g2_map[v] = y_to_x[v]
        else:
            g2_map[v] = nxt
            nxt += 1
    edges = g1.edges()
    edges += [(g2_map[u], g2_map[v]) for u, v in g2.edges()]
    return Graph.from_edges(order, edges)


# -- isomorphism and canonical forms -----------------------------------

ISO_MAX_ORDER = 10


def _perm_extend(g1: Graph, g2: Graph, by_degree2, mapping, used_mask):
    v = len(mapping)
    if v == g1.order:
        return True
    for w in by_degree2[g1.degree(v)]:
        if used_mask >> w & 1:
            continue
        ok = True
        row1 = g1.rows[v]
        for u in range(v):
            if (row1 >> u & 1) != (g2.rows[w] >> mapping[u] & 1):
                ok = False
                break
        if ok:
            mapping.append(w)
            if _perm_extend(g1, g2, by_degree2, mapping, used_mask | 1 << w):
                return True
            mapping.pop()
    return False


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Permutation-search isomorphism test, order <= 10 by contract."""
    if max(g1.order, g2.order) > ISO_MAX_ORDER:
        raise OrderTooLargeError(f"isomorphism contract is order <= {ISO_MAX_ORDER}")
    if g1.order != g2.order:
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    by_degree2 = {}
    for w in range(g2.order):
        by_degree2.setdefault(g2.degree(w), []).append(w)
    return _perm_extend(g1, g2, by_degree2, [], 0)


def canonical_form(g: Graph):
    """Canonical edge list, stable across relabelings.

    Minimizes the adjacency bit string over all vertex orderings that
    list degrees in non-increasing order (an isomorphism-invariant
    restriction, so the minimum is a true canonical form).  Branch and
    bound on the growing row prefix keeps this fast for order <= 10.
    """
    if g.order > ISO_MAX_ORDER:
        raise OrderTooLargeError(f"canonical form contract is order <= {ISO_MAX_ORDER}")
    n = g.order
    if n == 0:
        return (0, ())
    degrees = [g.degree(v) for v in range(n)]
    target = sorted(degrees, reverse=True)
    best = None  # list of row-prefix tuples, one per position

    def rows_key(order_sel):
        key = []
        for i, v in enumerate(order_sel):
            bits = 0
            for j in range(i):
                if g.rows[v] >> order_sel[j] & 1:
                    bits |= 1 << j
            key.append(bits)
        return key

    def extend(order_sel, key, used):
        nonlocal best
        i = len(order_sel)
        if i == n:
            if best is None or key < best:
                best = list(key)
            return
        want = target[i]
        for v in range(n):
            if used >> v & 1 or degrees[v] != want:
                continue
            bits = 0
            for j in range(i):
                if g.rows[v] >> order_sel[j] & 1:
                    bits |= 1 << j
            new_key = key + [bits]
            if best is not None and new_key > best[: i + 1]:
                continue
            order_sel.append(v)
            extend(order_sel, new_key, used | 1 << v)
            order_sel.pop()

    extend([], [], 0)
    edges = []
    for i, bits in enumerate(best):
        for j in bits_of(bits):
            edges.append((j, i))
    return (n, tuple(sorted(edges)))


def from_canonical(canon) -> Graph:
    order, edges = canon
    return Graph.from_edges(order, edges)
