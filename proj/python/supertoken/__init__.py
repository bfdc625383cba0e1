"""Supertoken graphs: constructions, distances, and metric dimension.

Everything is implemented in the C++ extension; this package re-exports it.
Big integers arrive as Python ints and exact rationals as
``fractions.Fraction``.
"""

from ._core import (
    DEFAULT_DIM_SEARCH_CAP,
    DEFAULT_VERTEX_CAP,
    AlphabetGraph,
    Assignment,
    CheckRecord,
    DimBoundReport,
    FeasibilityResult,
    Graph,
    MatchingInstance,
    MetricDimensionResult,
    SingularMatrixError,
    SizeCapError,
    SupertokenDistance,
    SupertokenGraph,
    TokenConfig,
    TokenGraph,
    all_connected_graphs,
    antipodal_witnesses,
    binomial,
    build_gdc,
    build_gdc_plus,
    build_matching_instance,
    build_supertoken,
    build_token_graph,
    canonical_landmarks,
    check_inequality_kn,
    config_index,
    count_bounded_sequences,
    degree_regular_dim_bound,
    diam_complete,
    dist_complete,
    distance_degree_sequence,
    distance_determinant,
    ecc_complete,
    enumerate_configs,
    extremal_distances,
    feasibility,
    gdc_diameter,
    gdc_distance,
    gdc_eccentricity,
    graph_from_text,
    graph_to_text,
    inverse_complete_distance,
    is_edge_preserving_bijection,
    is_resolving,
    lower_bound_dim,
    metric_dimension,
    parse_word,
    position_via_matrix,
    position_vectors,
    rad_complete,
    random_tree,
    run_verify_suite,
    solve_assignment,
    supertoken_diameter,
    supertoken_distance,
    supertoken_eccentricity,
    supertoken_order,
    supertoken_radius,
    tree_det_formula,
    unicyclic_odd_det_formula,
    verify_suite_names,
    verify_supertoken_dim_bound,
    word_index,
    word_label,
)

__version__ = "1.0.0"

__all__ = [name for name in dir() if not name.startswith("_")]
