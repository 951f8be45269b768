import pytest

from minorkit.cockade import (
    cone_apex,
    cone_leaf,
    is_mp1_cockade,
    k5_leaf,
    mp1_cone,
    mp1_glue,
    random_mp1_cockade,
    realize,
    tree_decode,
    tree_encode,
)
from minorkit.errors import (
    NotACliqueError,
    ParseError,
    PreconditionError,
    UnreachableOrderError,
)
from minorkit.graph import is_isomorphic
from minorkit.minor import find_k6
from minorkit.named import (
    complete,
    complete_multipartite,
    cycle,
    double_wheel,
    icosahedron,
    octahedron,
)


class TestCone:
    def test_octahedron(self):
        g = mp1_cone(octahedron())
        assert g.order == 7 and g.edge_count == 18 == 4 * 7 - 10

    def test_icosahedron(self):
        g = mp1_cone(icosahedron())
        assert g.order == 13 and g.edge_count == 42 == 4 * 13 - 10

    def test_c5_rejected(self):
        with pytest.raises(PreconditionError):
            mp1_cone(cycle(5))

    def test_stacked_triangulation_rejected(self):
        # maximal planar but only 3-connected
        from minorkit.named import random_stacked_triangulation

        with pytest.raises(PreconditionError):
            mp1_cone(random_stacked_triangulation(8, 0))


class TestGlue:
    def test_two_k5(self):
        t = mp1_glue(k5_leaf(), k5_leaf(), (0, 1, 2, 3), (0, 1, 2, 3))
        g = realize(t)
        assert g.order == 6 and g.edge_count == 14

    def test_three_k5(self):
        t = mp1_glue(k5_leaf(), k5_leaf(), (0, 1, 2, 3), (0, 1, 2, 3))
        t2 = mp1_glue(t, k5_leaf(), (1, 2, 3, 4), (0, 1, 2, 3))
        g = realize(t2)
        assert g.order == 7 and g.edge_count == 18

    def test_k5_with_octahedron_cone(self):
        t = mp1_glue(k5_leaf(), cone_leaf(octahedron()), (0, 1, 2, 3), (0, 2, 4, 6))
        g = realize(t)
        assert g.order == 8 and g.edge_count == 22

    def test_not_a_k4(self):
        with pytest.raises(NotACliqueError):
            mp1_glue(k5_leaf(), cone_leaf(octahedron()), (0, 1, 2, 3), (0, 1, 2, 3))


class TestRealize:
    def test_cone_apex_dominates(self):
        t = cone_leaf(double_wheel(6))
        g = realize(t)
        apex = cone_apex(t)
        assert g.degree(apex) == g.order - 1

    def test_edge_budget_always_4n_minus_10(self):
        for i in range(40):
            order = 5 + i % 10
            g = realize(random_mp1_cockade((7, i), order))
            assert g.order == order
            assert g.edge_count == 4 * order - 10
            assert g.min_degree() >= 4


class TestRecognizer:
    def test_k5(self):
        tree = is_mp1_cockade(complete(5))
        assert tree is not None and tree.kind == "k5"

    def test_glued_k5s(self):
        g = realize(mp1_glue(k5_leaf(), k5_leaf(), (0, 1, 2, 3), (0, 1, 2, 3)))
        tree = is_mp1_cockade(g)
        assert tree is not None and tree.kind == "sum"

    def test_cone(self):
        tree = is_mp1_cockade(mp1_cone(octahedron()))
        assert tree is not None and tree.kind == "cone"
        assert is_isomorphic(tree.planar_part, octahedron())

    def test_k2223_rejected(self):
        # 30 edges on 9 vertices exceeds 4n-10 = 26
        assert is_mp1_cockade(complete_multipartite([2, 2, 2, 3])) is None

    def test_wrong_size_rejected(self):
        assert is_mp1_cockade(complete(6)) is None

    def test_roundtrip_generated(self):
        for i in range(25):
            order = 5 + i % 6
            g = realize(random_mp1_cockade((31, i), order))
            tree = is_mp1_cockade(g)
            assert tree is not None
            assert tree.order == g.order
            assert realize(tree).edge_count == g.edge_count

    def test_large_order_exact_reconstruction(self):
        g = realize(random_mp1_cockade(99, 13))
        tree = is_mp1_cockade(g)
        assert tree is not None and tree.order == 13


class TestGenerator:
    def test_order5_is_k5_leaf(self):
        assert random_mp1_cockade(0, 5).kind == "k5"

    def test_order6_is_glue_of_k5s(self):
        t = random_mp1_cockade(0, 6)
        assert t.kind == "sum"
        assert t.left.kind == "k5" and t.right.kind == "k5"

    def test_unreachable_order(self):
        with pytest.raises(UnreachableOrderError):
            random_mp1_cockade(0, 4)

    def test_reproducible(self):
        a = random_mp1_cockade((5, 5), 11)
        b = random_mp1_cockade((5, 5), 11)
        assert tree_encode(a) == tree_encode(b)

    def test_generated_cockades_k6_free(self):
        for i in range(15):
            g = realize(random_mp1_cockade((13, i), 5 + i % 8))
            assert not find_k6(g).found


class TestSerialization:
    def test_k5(self):
        assert tree_encode(k5_leaf()) == "K5"
        assert tree_decode("K5").kind == "k5"

    def test_roundtrip(self):
        for i in range(15):
            t = random_mp1_cockade((77, i), 5 + i % 9)
            back = tree_decode(tree_encode(t))
            assert realize(back) == realize(t)

    def test_bad_input(self):
        with pytest.raises(ParseError):
            tree_decode("CONE(Bw")
        with pytest.raises(ParseError):
            tree_decode("K5K5")
        with pytest.raises(ParseError):
            tree_decode("NOPE")
