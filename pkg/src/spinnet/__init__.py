"""Single-excitation dynamics on spin networks with isotropic Heisenberg coupling.

Builds graphs and their exact integer coupling matrices, evolves single
excitations, detects perfect state transfer, decomposes all-to-all
propagators into the quantum-search reflection, and simulates the
link-switching routing protocol.
"""

from .closed_form import (
    ExtremalReport,
    GroverReport,
    TimeFamily,
    expected_grover_phase,
    grover_decomposition,
    grover_target,
    kn_extrema,
    kn_minus_extrema,
    kn_minus_propagator_entry,
    kn_propagator_entry,
    phase_matches,
)
from .errors import (
    BrokenChain,
    EdgeListError,
    EigensolverDiverged,
    InvalidVertex,
    NotVertexDisjoint,
    SelfLoop,
    SpinNetError,
    TooLarge,
    TrivialCase,
    UnsupportedOrder,
)
from .evolution import (
    FidelityCurve,
    Propagator,
    fidelity,
    fidelity_curve,
    full_space_propagator_oracle,
    propagator,
)
from .graphs import (
    Graph,
    adjacency_matrix,
    complete_graph,
    complete_minus_matching,
    cycle_graph,
    degree_matrix,
    empty_graph,
    graph_from_edge_list,
    graph_from_file,
    laplacian,
    parse_edge_list,
    path_graph,
    xyz_hamiltonian,
)
from .linalg import (
    EigenDecomposition,
    matrix_exponential_series,
    symmetric_eigendecomposition,
)
from .pst import PstFinding, pst_scan, verify_matching_pst
from .routing import (
    RoutingReport,
    RoutingSchedule,
    TourOpCount,
    schedule_from_json,
    schedule_to_json,
    simulate_route,
    tour_op_count,
)

__version__ = "0.1.0"

__all__ = [
    "BrokenChain",
    "EdgeListError",
    "EigenDecomposition",
    "EigensolverDiverged",
    "ExtremalReport",
    "FidelityCurve",
    "Graph",
    "GroverReport",
    "InvalidVertex",
    "NotVertexDisjoint",
    "Propagator",
    "PstFinding",
    "RoutingReport",
    "RoutingSchedule",
    "SelfLoop",
    "SpinNetError",
    "TimeFamily",
    "TooLarge",
    "TourOpCount",
    "TrivialCase",
    "UnsupportedOrder",
    "adjacency_matrix",
    "complete_graph",
    "complete_minus_matching",
    "cycle_graph",
    "degree_matrix",
    "empty_graph",
    "expected_grover_phase",
    "fidelity",
    "fidelity_curve",
    "full_space_propagator_oracle",
    "graph_from_edge_list",
    "graph_from_file",
    "grover_decomposition",
    "grover_target",
    "kn_extrema",
    "kn_minus_extrema",
    "kn_minus_propagator_entry",
    "kn_propagator_entry",
    "laplacian",
    "matrix_exponential_series",
    "parse_edge_list",
    "path_graph",
    "phase_matches",
    "propagator",
    "pst_scan",
    "schedule_from_json",
    "schedule_to_json",
    "simulate_route",
    "symmetric_eigendecomposition",
    "tour_op_count",
    "verify_matching_pst",
    "xyz_hamiltonian",
]
