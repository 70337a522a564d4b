"""Exact chromatic symmetric functions of weighted graphs, tree
invariants, and desk-scale distinctness verification."""

from .canon import TreeCertificate, are_isomorphic, canonical_certificate, small_graph_certificate
from .csf import (
    CsfResult,
    coefficient,
    corollary_difference,
    csf_deletion_contraction,
    csf_forest,
    csf_power_sum,
    csf_tree,
    csf_weighted,
    forest_level_value,
    inclusion_exclusion_rhs,
    level_sum,
    subtree_derivative,
)
from .enumeration import FREE_TREE_COUNTS, classify, enumerate_trees, enumerate_unicyclic
from .errors import CapacityError, ConsistencyError, CsfkitError, GraphParseError, NotATreeError
from .formats import format_edge_list, format_graph6, load_graph, parse_edge_list, parse_graph6
from .graphs import (
    Graph,
    Tree,
    TwigSequence,
    VertexWeighting,
    contract_edges,
    enumerate_subtrees,
    path_sequence,
    tree_distance_pairs,
    trunk,
    twig_sequence,
)
from .invariants import (
    BivariatePolynomial,
    f_polynomial_direct,
    f_polynomial_from_csf,
    generalized_degree_sequence,
    identity_matrix,
    matrix_multiply,
    omega_check,
    sigma,
    sign_binomial_matrix,
    stats_from_subtree_polynomial,
    subtree_polynomial,
)
from .partitions import merge_parts, partitions, z_of
from .psym import PPolynomial, p_of_partition, scalar_product
from .verify import (
    VerificationReport,
    compute_report,
    csf_hash,
    find_collisions,
    selftest,
    verify_distinct,
    write_reports,
)

__version__ = "0.1.0"

__all__ = [
    "BivariatePolynomial",
    "CapacityError",
    "ConsistencyError",
    "CsfResult",
    "CsfkitError",
    "FREE_TREE_COUNTS",
    "Graph",
    "GraphParseError",
    "NotATreeError",
    "PPolynomial",
    "Tree",
    "TreeCertificate",
    "TwigSequence",
    "VerificationReport",
    "VertexWeighting",
    "are_isomorphic",
    "canonical_certificate",
    "classify",
    "coefficient",
    "compute_report",
    "contract_edges",
    "corollary_difference",
    "csf_deletion_contraction",
    "csf_forest",
    "csf_hash",
    "csf_power_sum",
    "csf_tree",
    "csf_weighted",
    "enumerate_subtrees",
    "enumerate_trees",
    "enumerate_unicyclic",
    "f_polynomial_direct",
    "f_polynomial_from_csf",
    "find_collisions",
    "forest_level_value",
    "format_edge_list",
    "format_graph6",
    "generalized_degree_sequence",
    "identity_matrix",
    "inclusion_exclusion_rhs",
    "level_sum",
    "load_graph",
    "matrix_multiply",
    "merge_parts",
    "omega_check",
    "p_of_partition",
    "parse_edge_list",
    "parse_graph6",
    "partitions",
    "path_sequence",
    "scalar_product",
    "selftest",
    "sigma",
    "sign_binomial_matrix",
    "small_graph_certificate",
    "stats_from_subtree_polynomial",
    "subtree_derivative",
    "subtree_polynomial",
    "tree_distance_pairs",
    "trunk",
    "twig_sequence",
    "verify_distinct",
    "write_reports",
    "z_of",
]
