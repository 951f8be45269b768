"""Certificate-producing H-minor containment engine.

Wraps the branch-set kernel with certificates, stats, a node budget, an
independent verifier, the parametric edge bound, and an exhaustive
small-order oracle that shares no code with the search.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import kernels
from .errors import (
    ArityMismatchError,
    MinorkitError,
    OrderTooLargeError,
    PreconditionError,
)
from .graph import Graph, VertexSet, bits_of, canonical_form, from_canonical, popcount


@dataclass(frozen=True)
class MinorCertificate:
    """Disjoint connected branch sets realizing a target inside a host."""

    branch_sets: tuple

    @classmethod
    def from_masks(cls, masks):
        return cls(tuple(VertexSet(m) for m in masks))

    def __len__(self):
        return len(self.branch_sets)


@dataclass
class SearchStats:
    nodes: int = 0
    prunes: dict = field(default_factory=dict)
    elapsed: float = 0.0


@dataclass
class MinorResult:
    certificate: MinorCertificate | None
    stats: SearchStats
    budget_exhausted: bool = False

    @property
    def found(self) -> bool:
        return self.certificate is not None


def _is_complete(h: Graph) -> bool:
    return h.edge_count == h.order * (h.order - 1) // 2


def _decision_order(g: Graph):
    """Vertices by descending degree, ties by index; fixed, so runs with
    identical inputs take identical paths."""
    return sorted(range(g.order), key=lambda v: (-g.degree(v), v))


def _run_kernel(g: Graph, h: Graph, budget: int) -> MinorResult:
    k = h.order
    req = [h.rows[i] for i in range(k)]
    order = _decision_order(g)
    t0 = time.perf_counter()
    status, masks, nodes, prunes = kernels.search(
        tuple(g.rows), g.order, k, tuple(req), _is_complete(h), tuple(order), budget
    )
    stats = SearchStats(
        nodes=nodes,
        prunes=dict(zip(kernels.PRUNE_NAMES, prunes)),
        elapsed=time.perf_counter() - t0,
    )
    if status == kernels.STATUS_FOUND:
        return MinorResult(MinorCertificate.from_masks(masks), stats)
    return MinorResult(None, stats, budget_exhausted=status == kernels.STATUS_EXHAUSTED)


def find_minor(g: Graph, h: Graph, deterministic: bool = True, budget: int = 0):
    """Search for an h-minor of g.

    Returns a MinorResult: certificate (verified sound by construction,
    checkable with verify_certificate), stats, and a distinct
    budget_exhausted flag so a timeout is never mistaken for absence.
    The deterministic flag is accepted for interface stability; the
    engine is single-threaded and deterministic in both modes.
    """
    del deterministic
    if h.order == 0:
        return MinorResult(MinorCertificate(()), SearchStats())
    if h.order > g.order or h.edge_count > g.edge_count:
        return MinorResult(None, SearchStats())
    return _run_kernel(g, h, budget)


def _k6_reduce(g: Graph) -> Graph:
    """Delete degree<=1 vertices and suppress degree-2 vertices.

    Preserves K6-minor presence exactly (K6 has minimum degree 5), so an
    absent answer on the reduction is an absent answer for g.
    """
    while True:
        if g.order == 0:
            return g
        v = min(range(g.order), key=g.degree)
        d = g.degree(v)
        if d > 2:
            return g
        if d == 2:
            a, b = g.neighbors(v)
            if not g.has_edge(a, b):
                g = g.add_edge(a, b)
        g = g.delete_vertex(v)


_K6 = Graph.from_edges(6, [(i, j) for i in range(6) for j in range(i + 1, 6)])


def find_k6(g: Graph, deterministic: bool = True, budget: int = 0) -> MinorResult:
    """find_minor specialized to K6, with low-degree preprocessing.

    The reduction only speeds up the absent case; when the reduced graph
    has a K6 minor the certificate is recovered by searching g itself
    (cheap, since a minor is known to exist).
    """
    reduced = _k6_reduce(g)
    if reduced.order < 6 or reduced.edge_count < 15:
        return MinorResult(None, SearchStats())
    if reduced.order != g.order:
        probe = find_minor(reduced, _K6, deterministic, budget)
        if not probe.found:
            return probe
    return find_minor(g, _K6, deterministic, budget)


def verify_certificate(g: Graph, h: Graph, cert: MinorCertificate) -> bool:
    """Independent certificate checker.

    Deliberately avoids the kernel's bitmask machinery: branch sets are
    handled as plain Python sets with list-based BFS.
    """
    if len(cert.branch_sets) != h.order:
        raise ArityMismatchError(
            f"{len(cert.branch_sets)} branch sets for target order {h.order}"
        )
    sets = [set(bs.members()) for bs in cert.branch_sets]
    adjacency = {v: set(g.neighbors(v)) for v in range(g.order)}
    seen = set()
    for s in sets:
        if not s or s & seen:
            return False
        if any(v >= g.order or v < 0 for v in s):
            return False
        seen |= s
        # connectivity by BFS inside the set
        start = next(iter(s))
        frontier = [start]
        comp = {start}
        while frontier:
            v = frontier.pop()
            for w in adjacency[v]:
                if w in s and w not in comp:
                    comp.add(w)
                    frontier.append(w)
        if comp != s:
            return False
    for i, j in h.edges():
        if not any(w in sets[j] for v in sets[i] for w in adjacency[v]):
            return False
    return True


def mader_edge_bound(t: int, n: int) -> int:
    """Maximum size of a K_t-minor-free graph of order n, for 2<=t<=7."""
    if not 2 <= t <= 7:
        raise PreconditionError(f"t={t} outside 2..7")
    if n < t - 1:
        raise PreconditionError(f"order {n} below t-1={t - 1}")
    return (t - 2) * n - (t - 1) * (t - 2) // 2


def size_forces_kt(g: Graph, t: int) -> bool:
    """True when the edge count alone forces a K_t minor."""
    return g.edge_count > mader_edge_bound(t, g.order)


def find_k6_blockwise(g: Graph, deterministic: bool = True, budget: int = 0):
    """find_k6 restricted to 2-connected blocks.

    K6 is 2-connected, so any K6 minor lives inside one block; searching
    blocks separately turns e.g. an order-26 two-block host into two
    order-13 questions.  Certificates are mapped back to g's labels.
    """
    total = SearchStats()
    exhausted = False
    for block in g.blocks():
        if popcount(block.bits) < 6:
            continue
        sub, index_map = g.induced(block)
        res = find_k6(sub, deterministic, budget)
        total.nodes += res.stats.nodes
        total.elapsed += res.stats.elapsed
        for name, cnt in res.stats.prunes.items():
            total.prunes[name] = total.prunes.get(name, 0) + cnt
        if res.found:
            masks = []
            for bs in res.certificate.branch_sets:
                mask = 0
                for v in bs.members():
                    mask |= 1 << index_map[v]
                masks.append(mask)
            return MinorResult(MinorCertificate.from_masks(masks), total)
        exhausted = exhausted or res.budget_exhausted
    return MinorResult(None, total, budget_exhausted=exhausted)


# -- exhaustive oracle --------------------------------------------------

ORACLE_MAX_ORDER = 8

_minor_closure_memo: dict = {}


def _minor_closure(canon):
    """All minors of a graph, as canonical forms, via exhaustive
    deletion/contraction with memoization.  Shared across calls."""
    cached = _minor_closure_memo.get(canon)
    if cached is not None:
        return cached
    g = from_canonical(canon)
    out = {canon}
    children = set()
    for v in range(g.order):
        children.add(canonical_form(g.delete_vertex(v)))
    for u, v in g.edges():
        children.add(canonical_form(g.delete_edge(u, v)))
        children.add(canonical_form(g.contract_edge(u, v)))
    for child in children:
        out |= _minor_closure(child)
    out = frozenset(out)
    _minor_closure_memo[canon] = out
    return out


def brute_force_minor(g: Graph, h: Graph) -> bool:
    """Ground-truth minor decision by exhausting operation sequences.

    Order <= 8 hosts only; the closure of canonical forms is cached, so
    sweeping many hosts against many targets stays cheap.
    """
    if g.order > ORACLE_MAX_ORDER:
        raise OrderTooLargeError(f"oracle contract is order <= {ORACLE_MAX_ORDER}")
    if h.order > g.order:
        return False
    return canonical_form(h) in _minor_closure(canonical_form(g))
