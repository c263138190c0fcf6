"""Exact distance-matrix determinants for graphs whose blocks are at most bicyclic."""

from .blocks import (
    Block,
    BlockInventory,
    Cycle,
    Edge,
    Theta,
    Unsupported,
    UnsupportedBlockError,
    biconnected_components,
    classify_block,
    classify_graph,
    inventory,
    theta_params,
)
from .formulas import (
    FormulaResult,
    cactus_det,
    compose_ghh,
    cycle_detcof,
    det_cof_closed,
    edge_detcof,
    theta_detcof,
    theta_path_det,
    theta_prime_det,
    unicyclic_det,
)
from .graphs import (
    BlockRequest,
    DisconnectedGraphError,
    EdgeListParseError,
    Graph,
    GraphError,
    attach_path,
    build_theta,
    cycle_graph,
    distance_matrix,
    format_edge_list,
    is_connected,
    labeled_theta,
    labeled_theta_shifted,
    parse_edge_list,
    path_graph,
    random_block_graph,
)
from .linalg import DetCof, SingularMatrixError, bareiss_det, cof_sum, cof_sum_minors, rat_inverse
from .verify import (
    CampaignSummary,
    VerifyReport,
    congruence_check_theta,
    congruence_check_theta_prime,
    cycle_inverse_identity,
    det_cof_oracle,
    fuzz_campaign,
    scalar_identity_checks,
    verify_graph,
)

__version__ = "0.1.0"

__all__ = [
    "Block",
    "BlockInventory",
    "BlockRequest",
    "CampaignSummary",
    "Cycle",
    "DetCof",
    "DisconnectedGraphError",
    "Edge",
    "EdgeListParseError",
    "FormulaResult",
    "Graph",
    "GraphError",
    "SingularMatrixError",
    "Theta",
    "Unsupported",
    "UnsupportedBlockError",
    "VerifyReport",
    "attach_path",
    "bareiss_det",
    "biconnected_components",
    "build_theta",
    "cactus_det",
    "classify_block",
    "classify_graph",
    "cof_sum",
    "cof_sum_minors",
    "compose_ghh",
    "congruence_check_theta",
    "congruence_check_theta_prime",
    "cycle_detcof",
    "cycle_graph",
    "cycle_inverse_identity",
    "det_cof_closed",
    "det_cof_oracle",
    "distance_matrix",
    "edge_detcof",
    "format_edge_list",
    "fuzz_campaign",
    "inventory",
    "is_connected",
    "labeled_theta",
    "labeled_theta_shifted",
    "parse_edge_list",
    "path_graph",
    "random_block_graph",
    "rat_inverse",
    "scalar_identity_checks",
    "theta_detcof",
    "theta_params",
    "theta_path_det",
    "theta_prime_det",
    "unicyclic_det",
    "verify_graph",
]
