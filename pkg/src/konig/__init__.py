"""Constructive edge coloring and factorization of bipartite multigraphs,
and the matching results for nonnegative square matrices."""

from .coloring import (
    AlternatingPath,
    EdgeColoring,
    color_edges,
    find_alternating_path,
    insert_and_recolor,
    verify_coloring,
)
from .errors import KonigError
from .factorization import (
    Factor,
    Factorization,
    RegularizationEmbedding,
    SplitEmbedding,
    color_via_regularization,
    factor_of_degree,
    merge_factor,
    one_factorization,
    perfect_matching,
    power_of_two_factorization,
    regularize,
    split_cycles_factorization,
    split_degree,
    verify_factorization,
)
from .graph import (
    BipartiteMultigraph,
    GeneralGraph,
    Side,
    VertexId,
    as_bipartite,
    build_bipartite,
    components,
    two_coloring,
)
from .matrix import (
    ExactMatrix,
    PermutationDecomposition,
    count_nonzero_members_bruteforce,
    decompose_into_permutations,
    graph_from_matrix,
    nonzero_member,
    normalize_rational,
    support_decomposition,
)

__version__ = "0.1.0"
