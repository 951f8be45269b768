import itertools
import random

import pytest

from minorkit.errors import ArityMismatchError, OrderTooLargeError, PreconditionError
from minorkit.graph import Graph, VertexSet
from minorkit.minor import (
    MinorCertificate,
    brute_force_minor,
    find_k6,
    find_k6_blockwise,
    find_minor,
    mader_edge_bound,
    size_forces_kt,
    verify_certificate,
)
from minorkit.named import (
    complete,
    complete_multipartite,
    cycle,
    icosahedron,
    petersen_complement,
)


def random_graph(n, rng, m=None):
    pairs = list(itertools.combinations(range(n), 2))
    if m is None:
        m = rng.randint(0, len(pairs))
    return Graph.from_edges(n, rng.sample(pairs, m))


class TestFindMinor:
    def test_k6_in_itself_identity(self):
        res = find_minor(complete(6), complete(6))
        assert res.found
        assert sorted(len(bs) for bs in res.certificate.branch_sets) == [1] * 6
        assert verify_certificate(complete(6), complete(6), res.certificate)

    def test_icosahedron_has_no_k5(self):
        assert not find_minor(icosahedron(), complete(5)).found

    def test_petersen_complement_has_k6(self):
        res = find_minor(petersen_complement(), complete(6))
        assert res.found
        assert verify_certificate(petersen_complement(), complete(6), res.certificate)

    def test_k333_has_k6(self):
        g = complete_multipartite([3, 3, 3])
        res = find_minor(g, complete(6))
        assert res.found
        assert verify_certificate(g, complete(6), res.certificate)

    def test_noncomplete_target(self):
        res = find_minor(petersen_complement(), complete_multipartite([3, 3]))
        assert res.found
        assert verify_certificate(
            petersen_complement(), complete_multipartite([3, 3]), res.certificate
        )

    def test_empty_target(self):
        res = find_minor(cycle(4), Graph.from_edges(0, []))
        assert res.found and len(res.certificate) == 0

    def test_monotone_under_edge_addition(self):
        rng = random.Random(9)
        for _ in range(30):
            g = random_graph(8, rng)
            if not find_minor(g, complete(4)).found:
                continue
            non_edges = [
                (u, v)
                for u, v in itertools.combinations(range(8), 2)
                if not g.has_edge(u, v)
            ]
            if non_edges:
                u, v = rng.choice(non_edges)
                assert find_minor(g.add_edge(u, v), complete(4)).found

    def test_deterministic_certificates(self):
        rng = random.Random(2)
        for _ in range(20):
            g = random_graph(9, rng)
            r1 = find_minor(g, complete(4))
            r2 = find_minor(g, complete(4))
            assert r1.found == r2.found
            if r1.found:
                assert r1.certificate == r2.certificate
            assert r1.stats.nodes == r2.stats.nodes


class TestFindK6:
    def test_k7(self):
        res = find_k6(complete(7))
        assert res.found
        assert verify_certificate(complete(7), complete(6), res.certificate)

    def test_cockades_are_k6_free(self):
        from minorkit.cockade import random_mp1_cockade, realize

        for i in range(20):
            g = realize(random_mp1_cockade((100, i), 5 + i % 8))
            assert not find_k6(g).found

    def test_reduction_agrees_with_plain_search(self):
        # hang low-degree gadgets off dense cores; the preprocessed
        # answer must match the unreduced search
        rng = random.Random(4)
        for i in range(30):
            core = random_graph(8, rng)
            n = core.order + 3
            edges = core.edges()
            edges += [(8, 0), (9, 8), (9, 1), (10, 2), (10, 3)]
            g = Graph.from_edges(n, edges)
            assert find_k6(g).found == find_minor(g, complete(6)).found

    def test_budget_exhaustion_flagged(self):
        res = find_k6(icosahedron().complement(), budget=2)
        if not res.found:
            assert res.budget_exhausted

    def test_budget_never_reports_absence(self):
        res = find_k6(icosahedron(), budget=1)
        assert not res.found
        assert res.budget_exhausted


class TestBlockwise:
    def test_order26_absent(self):
        from minorkit.verifier import order26_example

        assert not find_k6_blockwise(order26_example()).found

    def test_certificate_lifts_to_host_labels(self):
        edges = list(itertools.combinations(range(7), 2))
        edges += [(6, 7), (7, 8)]
        g = Graph.from_edges(9, edges)
        res = find_k6_blockwise(g)
        assert res.found
        assert verify_certificate(g, complete(6), res.certificate)


class TestVerifyCertificate:
    def test_identity_on_k6(self):
        cert = MinorCertificate(tuple(VertexSet(1 << i) for i in range(6)))
        assert verify_certificate(complete(6), complete(6), cert)

    def test_overlap_rejected(self):
        sets = [VertexSet(0b11)] + [VertexSet(1 << i) for i in range(1, 6)]
        assert not verify_certificate(complete(7), complete(6), MinorCertificate(tuple(sets)))

    def test_disconnected_branch_set_rejected(self):
        g = cycle(6)
        cert = MinorCertificate((VertexSet.from_iterable([0, 3]), VertexSet(1 << 1), VertexSet(1 << 2)))
        assert not verify_certificate(g, complete(3), cert)

    def test_missing_adjacency_rejected(self):
        g = cycle(4)
        cert = MinorCertificate((VertexSet(1), VertexSet(2), VertexSet(4), VertexSet(8)))
        assert not verify_certificate(g, complete(4), cert)

    def test_arity_mismatch(self):
        with pytest.raises(ArityMismatchError):
            verify_certificate(
                complete(6), complete(6), MinorCertificate((VertexSet(1),))
            )

    def test_star_recipe_shape(self):
        # seven-vertex branch set plus five singletons on a dense host
        g = complete(12)
        sets = [VertexSet.from_iterable(range(7))]
        sets += [VertexSet(1 << v) for v in range(7, 12)]
        assert verify_certificate(g, complete(6), MinorCertificate(tuple(sets)))


class TestMaderBound:
    def test_pinned_values(self):
        assert mader_edge_bound(6, 12) == 38
        assert mader_edge_bound(6, 5) == 10
        assert mader_edge_bound(7, 9) == 30

    def test_k2223_sits_on_the_t7_boundary(self):
        assert complete_multipartite([2, 2, 2, 3]).edge_count == mader_edge_bound(7, 9)

    def test_out_of_range(self):
        with pytest.raises(PreconditionError):
            mader_edge_bound(8, 10)
        with pytest.raises(PreconditionError):
            mader_edge_bound(6, 4)

    def test_size_forces(self):
        rng = random.Random(1)
        g39 = random_graph(12, rng, 39)
        assert size_forces_kt(g39, 6)
        assert not size_forces_kt(complete(5), 6)
        g19 = random_graph(7, rng, 19)
        assert size_forces_kt(g19, 6)

    def test_forced_graphs_really_contain_k6(self):
        rng = random.Random(8)
        for _ in range(50):
            g = random_graph(12, rng, 39)
            assert find_k6(g).found


class TestBruteForceOracle:
    def test_basics(self):
        assert brute_force_minor(complete(6), complete(6))
        assert brute_force_minor(cycle(6), complete(3))
        assert brute_force_minor(complete_multipartite([3, 3]), complete(4))
        assert not brute_force_minor(complete_multipartite([3, 3]), complete(5))

    def test_order_limit(self):
        with pytest.raises(OrderTooLargeError):
            brute_force_minor(petersen_complement(), complete(3))

    def test_agreement_with_search_random(self):
        rng = random.Random(12)
        targets = [complete(3), complete(4), complete(5), cycle(4)]
        for _ in range(60):
            g = random_graph(rng.randint(1, 7), rng)
            for h in targets:
                assert find_minor(g, h).found == brute_force_minor(g, h)
