"""Named graph constructors and constraint-driven small catalogs.

Also hosts the exhaustive small-order enumerators: all isomorphism
classes up to order 7 (orderly extension over canonical forms), the
order-5 constraint catalogs, and the filtered enumeration of connected
6-regular graphs whose every open neighborhood is 3-regular.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapacityExceededError
from .graph import (
    Graph,
    bits_of,
    canonical_form,
    from_canonical,
    is_isomorphic,
    join,
)
from .planarity import is_planar


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_minus(n: int) -> Graph:
    """K_n with one edge removed."""
    return complete(n).delete_edge(n - 2, n - 1)


def complete_multipartite(parts) -> Graph:
    parts = list(parts)
    n = sum(parts)
    if n > 64:
        raise CapacityExceededError(f"order {n} exceeds 64")
    labels = []
    for i, p in enumerate(parts):
        labels += [i] * p
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(n), 2)
        if labels[u] != labels[v]
    ]
    return Graph.from_edges(n, edges)


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def wheel(n: int) -> Graph:
    """Hub vertex 0 joined to a rim cycle 1..n."""
    return join(complete(1), cycle(n))


def octahedron() -> Graph:
    return complete_multipartite([2, 2, 2])


def double_wheel(k: int) -> Graph:
    """C_k joined with two non-adjacent apexes: a 4-connected maximal
    planar graph on k+2 vertices, for k >= 4."""
    assert k >= 4
    two = Graph.from_edges(2, [])
    return join(cycle(k), two)


def random_stacked_triangulation(order: int, seed) -> Graph:
    """Random maximal planar graph built by repeatedly placing a new
    vertex inside a random triangular face of a K4 seed.  Always maximal
    planar (3n-6 edges); not 4-connected in general."""
    import random as _random

    assert order >= 4
    rng = _random.Random(repr(seed))
    edges = list(itertools.combinations(range(4), 2))
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    for v in range(4, order):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        edges += [(a, v), (b, v), (c, v)]
        faces += [(a, b, v), (a, c, v), (b, c, v)]
    return Graph.from_edges(order, edges)


def shuffled(g: Graph, seed) -> Graph:
    """Relabel by a seeded random permutation."""
    import random as _random

    rng = _random.Random(repr(seed))
    perm = list(range(g.order))
    rng.shuffle(perm)
    return g.relabel(perm)


# Vertex labeling fixed once; tests pin the recorded properties
# (12 vertices, 30 edges, 5-regular, maximal planar, 5-connected).
# That it is the unique 5-regular planar graph of order 12 is an assumed
# catalog property, not re-verified here.
_ICOSAHEDRON_EDGES = [
    (0, 1), (0, 5), (0, 7), (0, 8), (0, 11), (1, 2), (1, 5), (1, 6),
    (1, 8), (2, 3), (2, 6), (2, 8), (2, 9), (3, 4), (3, 6), (3, 9),
    (3, 10), (4, 5), (4, 6), (4, 10), (4, 11), (5, 6), (5, 11), (7, 8),
    (7, 9), (7, 10), (7, 11), (8, 9), (9, 10), (10, 11),
]


def icosahedron() -> Graph:
    return Graph.from_edges(12, _ICOSAHEDRON_EDGES)


_PETERSEN_EDGES = [
    (0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7), (3, 4),
    (3, 8), (4, 9), (5, 7), (5, 8), (6, 8), (6, 9), (7, 9),
]


def petersen() -> Graph:
    return Graph.from_edges(10, _PETERSEN_EDGES)


def petersen_complement() -> Graph:
    return petersen().complement()


def prism() -> Graph:
    """Triangular prism (two triangles plus a matching)."""
    return Graph.from_edges(
        6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
    )


NAMED = {
    "icosahedron": icosahedron,
    "petersen": petersen,
    "petersen-complement": petersen_complement,
    "octahedron": octahedron,
    "prism": prism,
    "k3,3,3": lambda: complete_multipartite([3, 3, 3]),
    "k2,2,2,3": lambda: complete_multipartite([2, 2, 2, 3]),
    "k3,3": lambda: complete_multipartite([3, 3]),
}
for _n in range(1, 9):
    NAMED[f"k{_n}"] = (lambda n: lambda: complete(n))(_n)
    if _n >= 3:
        NAMED[f"k{_n}-"] = (lambda n: lambda: complete_minus(n))(_n)


def by_name(name: str) -> Graph:
    key = name.lower()
    if key not in NAMED:
        raise KeyError(f"unknown named graph {name!r}")
    return NAMED[key]()


def neighborhood_3_regular_everywhere(g: Graph) -> bool:
    """Every vertex's open neighborhood induces a 3-regular graph."""
    for v in range(g.order):
        sub, _ = g.induced(g.rows[v])
        if sub.order == 0 or any(sub.degree(u) != 3 for u in range(sub.order)):
            return False
    return True


# -- exhaustive enumeration --------------------------------------------


def enumerate_all(order: int):
    """One Graph per isomorphism class of the given order (order <= 7).

    Orderly extension: each class of order n-1 is extended by one new
    vertex attached to every neighbor subset, deduplicated by canonical
    form.
    """
    assert 0 <= order <= 7
    current = {canonical_form(Graph.from_edges(0, []))}
    for n in range(1, order + 1):
        nxt = set()
        for canon in current:
            g = from_canonical(canon)
            for subset in range(1 << (n - 1)):
                extended = Graph(
                    n,
                    [g.rows[v] | ((subset >> v & 1) << (n - 1)) for v in range(n - 1)]
                    + [subset],
                )
                nxt.add(canonical_form(extended))
        current = nxt
    return [from_canonical(c) for c in sorted(current)]


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    degree_sequence: tuple
    size: int
    planar: bool


def _entry(name: str, g: Graph) -> CatalogEntry:
    return CatalogEntry(name, g, g.degree_sequence(), g.edge_count, is_planar(g).planar)


def enumerate_order5(size_min, size_max, min_degree, exact_degree2_count=None):
    """All order-5 isomorphism classes matching the constraints, one
    CatalogEntry per class, in canonical order."""
    seen = {}
    for bits in range(1 << 10):
        edges = [
            e for i, e in enumerate(itertools.combinations(range(5), 2)) if bits >> i & 1
        ]
        g = Graph.from_edges(5, edges)
        if not size_min <= g.edge_count <= size_max:
            continue
        if g.min_degree() < min_degree:
            continue
        if exact_degree2_count is not None:
            if sum(1 for d in g.degree_sequence() if d == 2) != exact_degree2_count:
                continue
        seen.setdefault(canonical_form(g), g)
    out = []
    for i, canon in enumerate(sorted(seen)):
        g = seen[canon]
        out.append(_entry(f"order5-{g.edge_count}e-{i}", g))
    return out


def six_regular_neighborhood_3_regular(order: int):
    """Connected 6-regular graphs of the given order (9 or 10) whose
    every open neighborhood is 3-regular, one per isomorphism class.

    Exhaustive up to isomorphism: vertex 0's neighborhood is fixed to
    {1..6} (always arrangeable by relabeling), which pins the rest of
    the degree budget; all completions are enumerated and filtered.
    """
    assert order in (9, 10)
    results = []

    def keep(g: Graph):
        if not g.is_connected():
            return
        if any(g.degree(v) != 6 for v in range(g.order)):
            return
        if not neighborhood_3_regular_everywhere(g):
            return
        if not any(is_isomorphic(g, h) for h in results):
            results.append(g)

    if order == 9:
        # complement is 2-regular: disjoint cycles covering 9 vertices
        for parts in ([9], [6, 3], [5, 4], [3, 3, 3]):
            edges = []
            base = 0
            for p in parts:
                edges += [(base + i, base + (i + 1) % p) for i in range(p)]
                base += p
            keep(Graph.from_edges(9, edges).complement())
        return results

    # order 10: N(0) = {1..6} induces a 3-regular graph; the remaining
    # budget forces a triangle on {7,8,9} with 4 edges each into {1..6},
    # and each of {1..6} sends exactly 2 edges to {7,8,9}.
    cores = []
    seen_cores = set()
    pairs = list(itertools.combinations(range(1, 7), 2))
    for bits in range(1 << len(pairs)):
        edges = [e for i, e in enumerate(pairs) if bits >> i & 1]
        if len(edges) != 9:
            continue
        deg = {v: 0 for v in range(1, 7)}
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if all(d == 3 for d in deg.values()):
            cores.append(edges)
    for core in cores:
        for picks in itertools.product(itertools.combinations(range(1, 7), 4), repeat=3):
            colsum = {v: 0 for v in range(1, 7)}
            for pick in picks:
                for v in pick:
                    colsum[v] += 1
            if any(c != 2 for c in colsum.values()):
                continue
            edges = [(0, v) for v in range(1, 7)]
            edges += core
            edges += [(7, 8), (7, 9), (8, 9)]
            for hub, pick in zip((7, 8, 9), picks):
                edges += [(hub, v) for v in pick]
            keep(Graph.from_edges(10, edges))
    return results
