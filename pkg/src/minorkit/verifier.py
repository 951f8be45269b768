"""Executable replay of the order-12 minimum-degree-6 case analysis.

Instances are classified by size and degree sequence, the explicit
contraction recipes are attempted where they apply, and everything else
delegates to the general search; every answer is a machine-checked
branch-set certificate plus a trace of which branch handled it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import (
    HypothesisViolatedError,
    InfeasibleConstraintsError,
    InternalFailureError,
    PreconditionError,
)
from .formats import graph6_encode
from .graph import Graph, VertexSet, bits_of, disjoint_union, join, popcount
from .minor import MinorCertificate, find_k6, verify_certificate
from .named import complete, icosahedron
from .planarity import is_apex

_K6 = complete(6)

SIZE_CASES = ("E36", "E37-a", "E37-b", "E38", "E39plus")


@dataclass
class CaseTrace:
    size_case: str
    degree_sequence: tuple
    base_vertex: int | None = None
    n_edges: int | None = None
    h_edges: int | None = None
    l_count: int | None = None
    identities: list = field(default_factory=list)
    branches: list = field(default_factory=list)
    recipe: str | None = None


@dataclass
class LemmaReport:
    lemma_id: str
    hypotheses: list  # (name, bool) pairs
    certificate: MinorCertificate | None


def _require_order12_mindeg6(g: Graph):
    if g.order != 12:
        raise PreconditionError(f"order {g.order}, expected 12")
    if g.min_degree() < 6:
        raise PreconditionError(f"minimum degree {g.min_degree()}, expected >= 6")


def classify_case(g: Graph) -> CaseTrace:
    """Size/degree-sequence classification with neighborhood statistics
    at the designated base vertex (minimum degree, smallest index)."""
    _require_order12_mindeg6(g)
    m = g.edge_count
    seq = g.degree_sequence()
    if m >= 39:
        case = "E39plus"
    elif m == 38:
        case = "E38"
    elif m == 37:
        case = "E37-a" if seq == (6,) * 11 + (8,) else "E37-b"
    else:
        case = "E36"
    trace = CaseTrace(size_case=case, degree_sequence=seq)
    base = min(range(12), key=lambda v: (g.degree(v), v))
    n_graph, h_graph, l_count, identities = g.nhl_partition(base)
    trace.base_vertex = base
    trace.n_edges = n_graph.edge_count
    trace.h_edges = h_graph.edge_count
    trace.l_count = l_count
    trace.identities = identities
    return trace


def _star_recipe(g: Graph, v: int):
    """Base star plus singleton non-neighbors; valid whenever the
    non-neighbors induce a complete graph."""
    n_mask = g.rows[v]
    h_mask = g.full_mask() & ~n_mask & ~(1 << v)
    sets = [VertexSet(n_mask | 1 << v)] + [VertexSet(1 << w) for w in bits_of(h_mask)]
    return MinorCertificate(tuple(sets))


def _pivot_recipes(g: Graph, v: int):
    """Non-neighbors induce K5 minus an edge (a, b): pull a into a
    branch set with a common neighbor of a and b inside N(v)."""
    n_mask = g.rows[v]
    h_mask = g.full_mask() & ~n_mask & ~(1 << v)
    h_vertices = list(bits_of(h_mask))
    missing = [
        (a, b)
        for i, a in enumerate(h_vertices)
        for b in h_vertices[i + 1 :]
        if not g.has_edge(a, b)
    ]
    if len(missing) != 1:
        return
    a, b = missing[0]
    for end1, end2 in ((a, b), (b, a)):
        for w in bits_of(g.rows[end1] & g.rows[end2] & n_mask):
            sets = [VertexSet(1 << w | 1 << end1)]
            sets.append(VertexSet((n_mask & ~(1 << w)) | 1 << v))
            sets += [
                VertexSet(1 << u) for u in h_vertices if u != end1
            ]
            yield MinorCertificate(tuple(sets)), w


def check_main(g: Graph):
    """Certify the K6 minor of an order-12, minimum-degree-6 graph.

    Where an explicit contraction recipe applies it is tried first and
    its certificate emitted; all remaining branches delegate to the
    search engine.  Returns (certificate, trace); a search miss raises
    InternalFailureError carrying the graph6 string for quarantine.
    """
    trace = classify_case(g)
    if trace.size_case != "E39plus":
        for v in sorted(range(12), key=lambda u: (g.degree(u), u)):
            if g.degree(v) != 6:
                continue
            h_mask = g.full_mask() & ~g.rows[v] & ~(1 << v)
            h_graph, _ = g.induced(h_mask)
            if h_graph.edge_count == 10:
                cert = _star_recipe(g, v)
                if verify_certificate(g, _K6, cert):
                    trace.branches += [f"base-v{v}", "H-complete", "star-contraction"]
                    trace.recipe = "star-contraction"
                    return cert, trace
            elif h_graph.edge_count == 9:
                for cert, w in _pivot_recipes(g, v):
                    if verify_certificate(g, _K6, cert):
                        trace.branches += [
                            f"base-v{v}",
                            "H-nearly-complete",
                            f"pivot-via-v{w}",
                        ]
                        trace.recipe = "missing-edge-pivot"
                        return cert, trace
        trace.branches.append("no-recipe-applied")
    else:
        trace.branches.append("size-bound")
    result = find_k6(g)
    trace.recipe = "delegated-to-search"
    trace.branches.append("delegated-to-search")
    if result.certificate is None or not verify_certificate(g, _K6, result.certificate):
        raise InternalFailureError(
            "no K6 certificate for a qualifying order-12 graph",
            graph6=graph6_encode(g),
        )
    return result.certificate, trace


# -- lemma predicates ---------------------------------------------------


def _lemma_common(g: Graph, lemma_id, order, size, max_deg5):
    deg5 = sum(1 for d in g.degree_sequence() if d == 5)
    hypotheses = [
        (f"order-{order}", g.order == order),
        (f"size-{size}", g.edge_count == size),
        ("min-degree-5", g.order > 0 and g.min_degree() >= 5),
        ("not-apex", is_apex(g) is None),
        (f"at-most-{max_deg5}-degree-5", deg5 <= max_deg5),
    ]
    failed = [name for name, ok in hypotheses if not ok]
    if failed:
        raise HypothesisViolatedError(failed, LemmaReport(lemma_id, hypotheses, None))
    result = find_k6(g)
    if result.certificate is None or not verify_certificate(g, _K6, result.certificate):
        raise InternalFailureError(
            f"{lemma_id}: hypotheses hold but no K6 certificate",
            graph6=graph6_encode(g),
        )
    return LemmaReport(lemma_id, hypotheses, result.certificate)


def lemma_11(m: Graph) -> LemmaReport:
    """Order 11, size 34, min degree 5, non-apex, at most four vertices
    of degree 5: always a K6 minor."""
    return _lemma_common(m, "order11", 11, 34, 4)


def lemma_10(m: Graph) -> LemmaReport:
    """Order 10, size 30, min degree 5, non-apex, at most five vertices
    of degree 5: always a K6 minor."""
    return _lemma_common(m, "order10", 10, 30, 5)


def jorgensen_small(g: Graph) -> MinorCertificate:
    """Order <= 11 with minimum degree >= 6: always a K6 minor."""
    if g.order > 11:
        raise PreconditionError(f"order {g.order} exceeds 11")
    if g.order == 0 or g.min_degree() < 6:
        raise PreconditionError("minimum degree below 6")
    result = find_k6(g)
    if result.certificate is None or not verify_certificate(g, _K6, result.certificate):
        raise InternalFailureError(
            "small dense graph without K6 certificate", graph6=graph6_encode(g)
        )
    return result.certificate


def order26_example() -> Graph:
    """Two cones over the icosahedron joined by a single bridge edge
    between icosahedral (degree 6) vertices: order 26, 85 edges,
    minimum degree 6, non-apex, and K6-minor-free."""
    cone = join(complete(1), icosahedron())  # apex is vertex 0
    g = disjoint_union(cone, cone)
    return g.add_edge(1, 14)


# -- constrained random corpus ------------------------------------------


def sample_constrained(order, min_degree, size_range, seed, count):
    """Reproducible stream of simple graphs with the given order, degree
    floor, and size window.

    Random initial graph, then degree-repair moves keeping the edge
    count, then degree-preserving double edge swaps for mixing; every
    emitted graph is re-validated.
    """
    size_min, size_max = size_range
    max_edges = order * (order - 1) // 2
    if (
        min_degree > max(order - 1, 0)
        or min_degree * order > 2 * size_max
        or size_min > max_edges
        or size_min > size_max
    ):
        raise InfeasibleConstraintsError(
            f"no simple graph of order {order}, min degree {min_degree}, "
            f"size in {size_range}"
        )
    rng = random.Random(repr(seed))  # repr: tuple seeds stay deterministic
    out = []
    while len(out) < count:
        m = rng.randint(max(size_min, (min_degree * order + 1) // 2), size_max)
        g = _sample_one(order, min_degree, m, rng)
        if g is not None:
            assert g.order == order and g.edge_count == m
            assert g.min_degree() >= min_degree
            out.append(g)
    return out


def _sample_one(order, min_degree, m, rng):
    all_pairs = [(u, v) for u in range(order) for v in range(u + 1, order)]
    edges = set(rng.sample(all_pairs, m))
    adj = {v: set() for v in range(order)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)

    def degree(v):
        return len(adj[v])

    for _ in range(200 * order):
        deficient = [v for v in range(order) if degree(v) < min_degree]
        if not deficient:
            break
        v = rng.choice(deficient)
        candidates = [u for u in range(order) if u != v and u not in adj[v]]
        candidates.sort(key=degree)
        u = rng.choice([c for c in candidates if degree(c) == degree(candidates[0])])
        adj[v].add(u)
        adj[u].add(v)
        edges.add((min(u, v), max(u, v)))
        # remove an edge far from the degree floor to keep the size
        removable = [
            (a, b)
            for a, b in edges
            if degree(a) > min_degree and degree(b) > min_degree and (a, b) != (min(u, v), max(u, v))
        ]
        if not removable:
            removable = [
                (a, b)
                for a, b in edges
                if (degree(a) > min_degree or degree(b) > min_degree)
                and (a, b) != (min(u, v), max(u, v))
            ]
        if not removable:
            # nothing safe to drop: revert the added edge and retry
            adj[v].discard(u)
            adj[u].discard(v)
            edges.discard((min(u, v), max(u, v)))
            continue
        a, b = rng.choice(removable)
        edges.discard((a, b))
        adj[a].discard(b)
        adj[b].discard(a)
    else:
        return None
    if any(degree(v) < min_degree for v in range(order)):
        return None
    # degree-preserving double swaps for mixing
    edge_list = list(edges)
    for _ in range(2 * m):
        (a, b), (c, d) = rng.sample(edge_list, 2)
        if len({a, b, c, d}) < 4:
            continue
        if d in adj[a] or b in adj[c]:
            continue
        adj[a].discard(b)
        adj[b].discard(a)
        adj[c].discard(d)
        adj[d].discard(c)
        adj[a].add(d)
        adj[d].add(a)
        adj[c].add(b)
        adj[b].add(c)
        edges.discard((min(a, b), max(a, b)))
        edges.discard((min(c, d), max(c, d)))
        edges.add((min(a, d), max(a, d)))
        edges.add((min(c, b), max(c, b)))
        edge_list = list(edges)
    return Graph.from_edges(order, edges)


def theorem_corpus(count, seed, sizes=(36, 37, 38)):
    """Stratified order-12 minimum-degree-6 corpus for the main check."""
    out = []
    for i in range(count):
        size = sizes[i % len(sizes)]
        out += sample_constrained(12, 6, (size, size), (seed, i), 1)
    return out


def run_theorem_corpus(count, seed):
    """check_main over a stratified corpus; returns a summary dict."""
    summary = {
        "total": 0,
        "certified": 0,
        "branch_counts": {},
        "failures": [],
        "traces": [],
    }
    for g in theorem_corpus(count, seed):
        summary["total"] += 1
        try:
            cert, trace = check_main(g)
        except InternalFailureError as exc:
            summary["failures"].append(exc.graph6)
            continue
        assert verify_certificate(g, _K6, cert)
        summary["certified"] += 1
        key = (trace.size_case, trace.recipe)
        summary["branch_counts"][key] = summary["branch_counts"].get(key, 0) + 1
        summary["traces"].append(trace)
    return summary
