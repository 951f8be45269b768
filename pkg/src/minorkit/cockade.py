"""Construct, generate, recognize, and serialize MP1-cockades.

An MP1-cockade is K5, a cone over a 4-connected maximal planar graph,
or two smaller MP1-cockades glued along identified K4s.  Every member of
order n has exactly 4n-10 edges and no K6 minor, which makes the family
the standard stress corpus for the minor search.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import (
    DisconnectedInputError,
    NotACliqueError,
    ParseError,
    PreconditionError,
    UnreachableOrderError,
)
from .formats import graph6_decode, graph6_encode
from .graph import Graph, bits_of, clique_sum, is_clique, is_isomorphic, join
from .named import complete, double_wheel, icosahedron, octahedron
from .planarity import connectivity, is_maximal_planar

_K1 = Graph.from_edges(1, [])


@dataclass(frozen=True)
class CockadeTree:
    """Decomposition witness: K5 leaf, cone leaf, or K4 glue node."""

    kind: str  # "k5" | "cone" | "sum"
    planar_part: Graph | None = None
    left: "CockadeTree | None" = None
    right: "CockadeTree | None" = None
    left_k4: tuple | None = None
    right_k4: tuple | None = None

    @property
    def order(self) -> int:
        if self.kind == "k5":
            return 5
        if self.kind == "cone":
            return self.planar_part.order + 1
        return self.left.order + self.right.order - 4


def _check_cone_part(h: Graph):
    if not is_maximal_planar(h):
        raise PreconditionError("cone part is not maximal planar")
    if connectivity(h) < 4:
        raise PreconditionError("cone part is not 4-connected")


def mp1_cone(h: Graph) -> Graph:
    """Cone over a 4-connected maximal planar graph; order n+1, edges
    3n-6 + n = 4(n+1)-10."""
    _check_cone_part(h)
    return join(_K1, h)


def k5_leaf() -> CockadeTree:
    return CockadeTree("k5")


def cone_leaf(h: Graph) -> CockadeTree:
    _check_cone_part(h)
    return CockadeTree("cone", planar_part=h)


def mp1_glue(t1: CockadeTree, t2: CockadeTree, x, y) -> CockadeTree:
    """Glue two cockade trees along K4s x (of t1's graph) and y (of t2's)."""
    x, y = tuple(x), tuple(y)
    if len(x) != 4 or len(y) != 4:
        raise NotACliqueError("glue requires four vertices per side")
    g1, g2 = realize(t1), realize(t2)
    if not is_clique(g1, x):
        raise NotACliqueError(f"{x} is not a K4 of the left realization")
    if not is_clique(g2, y):
        raise NotACliqueError(f"{y} is not a K4 of the right realization")
    return CockadeTree("sum", left=t1, right=t2, left_k4=x, right_k4=y)


def realize(t: CockadeTree) -> Graph:
    """The cockade graph.  Deterministic labels: a sum keeps the left
    side's labels and appends the right side's non-identified vertices
    in order; a cone puts the apex last."""
    if t.kind == "k5":
        return complete(5)
    if t.kind == "cone":
        return join(t.planar_part, _K1)
    g = clique_sum(realize(t.left), realize(t.right), t.left_k4, t.right_k4)
    n = g.order
    assert g.edge_count == 4 * n - 10
    return g


def cone_apex(t: CockadeTree) -> int:
    assert t.kind == "cone"
    return t.planar_part.order


# -- recognition --------------------------------------------------------


def _k4_separators(g: Graph):
    """K4 subgraphs whose removal disconnects the rest, lexicographic."""
    for combo in itertools.combinations(range(g.order), 4):
        if not is_clique(g, combo):
            continue
        mask = 0
        for v in combo:
            mask |= 1 << v
        rest = g.full_mask() & ~mask
        if rest == 0:
            continue
        seed = (rest & -rest).bit_length() - 1
        if g.component_of(seed, rest) != rest:
            yield combo, mask, rest


def is_mp1_cockade(g: Graph):
    """Witness CockadeTree whose realization matches g, or None.

    Leaf tests first (K5; a dominating vertex over a 4-connected maximal
    planar deletion), then every disconnecting K4, first success wins.
    The witness is validated against g before being returned: by
    isomorphism at order <= 10, by exact vertex-mapped reconstruction
    above that.
    """
    tree, mapping = _recognize(g)
    if tree is None:
        return None
    realized = realize(tree)
    relabeled = realized.relabel(mapping)
    if relabeled == g:
        return tree
    if g.order <= 10:
        return tree if is_isomorphic(realized, g) else None
    return None


def _recognize(g: Graph):
    """Returns (tree, mapping) with mapping[i] = g-vertex played by
    vertex i of realize(tree), or (None, None)."""
    n = g.order
    if n < 5 or g.edge_count != 4 * n - 10:
        return None, None
    if n == 5:
        return k5_leaf(), [0, 1, 2, 3, 4]
    for v in range(n):
        if g.degree(v) == n - 1:
            rest = g.delete_vertex(v)
            try:
                if is_maximal_planar(rest) and connectivity(rest) >= 4:
                    mapping = [w if w < v else w + 1 for w in range(n - 1)] + [v]
                    return cone_leaf(rest), mapping
            except DisconnectedInputError:
                pass
    for combo, mask, rest in _k4_separators(g):
        seed = (rest & -rest).bit_length() - 1
        comp = g.component_of(seed, rest)
        side1 = comp | mask
        side2 = (rest & ~comp) | mask
        g1, map1 = g.induced(side1)
        g2, map2 = g.induced(side2)
        t1, sub1 = _recognize(g1)
        if t1 is None:
            continue
        t2, sub2 = _recognize(g2)
        if t2 is None:
            continue
        # compose maps: realization vertex -> local graph vertex -> g vertex
        m1 = [map1[sub1[i]] for i in range(g1.order)]
        m2 = [map2[sub2[i]] for i in range(g2.order)]
        inv1 = {gv: i for i, gv in enumerate(m1)}
        inv2 = {gv: i for i, gv in enumerate(m2)}
        x = tuple(inv1[v] for v in combo)
        y = tuple(inv2[v] for v in combo)
        try:
            tree = mp1_glue(t1, t2, x, y)
        except NotACliqueError:
            continue
        # labels of the glued realization: left labels then right leftovers
        mapping = list(m1)
        for j in range(g2.order):
            if j not in y:
                mapping.append(m2[j])
        return tree, mapping
    return None, None


# -- generation ---------------------------------------------------------


def _leaf_for_order(order: int, rng: random.Random) -> CockadeTree | None:
    if order == 5:
        return k5_leaf()
    if order < 7:
        return None
    choices = []
    if order == 7:
        choices.append(lambda: cone_leaf(octahedron()))
    if order == 13:
        choices.append(lambda: cone_leaf(icosahedron()))
    if order >= 7:
        choices.append(lambda: cone_leaf(double_wheel(order - 3)))
    return rng.choice(choices)()


def random_mp1_cockade(seed, target_order: int) -> CockadeTree:
    """Reproducible random cockade tree with the exact realized order.

    Leaf parts come from a fixed catalog (octahedron, icosahedron,
    double wheels), so the draw is not uniform over the family; glue K4s
    are drawn uniformly from each side's K4 subgraphs.
    """
    if target_order < 5:
        raise UnreachableOrderError(f"no MP1-cockade of order {target_order}")
    rng = random.Random(repr(seed))  # repr: tuple seeds stay deterministic

    def build(order: int) -> CockadeTree:
        leaf_ok = order == 5 or order >= 7
        can_split = order >= 6
        if leaf_ok and (not can_split or rng.random() < 0.5):
            return _leaf_for_order(order, rng)
        # split order+4 = a + b with both sides >= 5 and buildable
        sizes = [a for a in range(5, order) if order + 4 - a >= 5]
        a = rng.choice(sizes)
        t1, t2 = build(a), build(order + 4 - a)
        g1, g2 = realize(t1), realize(t2)
        x = rng.choice(_all_k4s(g1))
        y = rng.choice(_all_k4s(g2))
        return mp1_glue(t1, t2, x, y)

    tree = build(target_order)
    assert tree.order == target_order
    return tree


def _all_k4s(g: Graph):
    return [c for c in itertools.combinations(range(g.order), 4) if is_clique(g, c)]


# -- serialization ------------------------------------------------------


def tree_encode(t: CockadeTree) -> str:
    if t.kind == "k5":
        return "K5"
    if t.kind == "cone":
        return f"CONE({graph6_encode(t.planar_part)})"
    x = ",".join(str(v) for v in t.left_k4)
    y = ",".join(str(v) for v in t.right_k4)
    return f"SUM({tree_encode(t.left)},{tree_encode(t.right)},[{x}],[{y}])"


def tree_decode(text: str) -> CockadeTree:
    tree, rest = _parse_tree(text.strip())
    if rest:
        raise ParseError(f"trailing cockade text {rest!r}")
    return tree


def _parse_tree(text: str):
    if text.startswith("K5"):
        return k5_leaf(), text[2:]
    if text.startswith("CONE("):
        end = text.find(")", 5)
        if end < 0:
            raise ParseError("unclosed CONE")
        return cone_leaf(graph6_decode(text[5:end])), text[end + 1 :]
    if text.startswith("SUM("):
        t1, rest = _parse_tree(text[4:])
        if not rest.startswith(","):
            raise ParseError("expected ',' after first SUM argument")
        t2, rest = _parse_tree(rest[1:])
        if not rest.startswith(",["):
            raise ParseError("expected K4 lists in SUM")
        close = rest.index("]")
        x = tuple(int(v) for v in rest[2:close].split(","))
        rest = rest[close + 1 :]
        if not rest.startswith(",["):
            raise ParseError("expected second K4 list in SUM")
        close = rest.index("]")
        y = tuple(int(v) for v in rest[2:close].split(","))
        rest = rest[close + 1 :]
        if not rest.startswith(")"):
            raise ParseError("unclosed SUM")
        return mp1_glue(t1, t2, x, y), rest[1:]
    raise ParseError(f"unrecognized cockade text {text!r}")
