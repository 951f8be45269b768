"""minorkit: branch-set K6/H-minor search and extremal-family tooling
for small graphs."""

from .cockade import (
    CockadeTree,
    is_mp1_cockade,
    mp1_cone,
    mp1_glue,
    random_mp1_cockade,
    realize,
    tree_decode,
    tree_encode,
)
from .errors import MinorkitError
from .formats import (
    certificate_decode,
    certificate_encode,
    edge_list_decode,
    edge_list_encode,
    graph6_decode,
    graph6_encode,
)
from .graph import (
    Graph,
    VertexSet,
    canonical_form,
    clique_sum,
    disjoint_union,
    is_isomorphic,
    join,
)
from .minor import (
    MinorCertificate,
    MinorResult,
    SearchStats,
    brute_force_minor,
    find_k6,
    find_k6_blockwise,
    find_minor,
    mader_edge_bound,
    size_forces_kt,
    verify_certificate,
)
from .named import (
    CatalogEntry,
    complete,
    complete_minus,
    complete_multipartite,
    enumerate_order5,
    icosahedron,
    neighborhood_3_regular_everywhere,
    petersen_complement,
)
from .planarity import (
    PlanarityVerdict,
    connectivity,
    is_apex,
    is_maximal_planar,
    is_planar,
    lemma_cone_check,
)
from .verifier import (
    CaseTrace,
    LemmaReport,
    check_main,
    classify_case,
    jorgensen_small,
    lemma_10,
    lemma_11,
    order26_example,
    sample_constrained,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
