"""Matching-removal gap analysis on small graphs."""

from ._matchgap import (
    Error,
    Graph,
    __version__,
    check_L_eq_2l,
    check_pairwise_bound,
    check_perfect_matching_bound,
    connected_components,
    extremal_structure_check,
    gap_profile,
    inflate,
    inflation_L_l,
    is_bridgeless,
    maximum_matching,
    nu,
    odd_cycle_stats,
    parse_edgelist,
    pendant_reduction,
    random_cubic_bridgeless,
    random_gnp,
    reduction_check,
    three_edge_colorable,
    triangles,
    v1_set,
    write_edgelist,
)

__all__ = [
    "Error",
    "Graph",
    "__version__",
    "check_L_eq_2l",
    "check_pairwise_bound",
    "check_perfect_matching_bound",
    "connected_components",
    "extremal_structure_check",
    "gap_profile",
    "inflate",
    "inflation_L_l",
    "is_bridgeless",
    "maximum_matching",
    "nu",
    "odd_cycle_stats",
    "parse_edgelist",
    "pendant_reduction",
    "random_cubic_bridgeless",
    "random_gnp",
    "reduction_check",
    "three_edge_colorable",
    "triangles",
    "v1_set",
    "write_edgelist",
]
