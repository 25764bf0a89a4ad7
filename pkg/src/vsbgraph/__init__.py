"""Strong biconnectivity testing and sparse spanning-subgraph extraction
for directed graphs, plus a seeded instance generator and benchmark
harness."""

from .connectivity import (
    ConnectivityReport,
    Witness,
    articulation_points,
    is_k_vsb,
    is_strongly_biconnected,
    is_strongly_connected,
    reachability_from,
)
from .digraph import (
    Digraph,
    EdgeSubset,
    UndirectedGraph,
    parse_edge_list,
    serialize_edge_list,
)
from .errors import (
    DuplicateEdgeError,
    EdgeAbsentError,
    EdgeListSyntaxError,
    EmptyResultError,
    GraphError,
    NotKVsbError,
    OutOfRangeError,
    SaturatedError,
    SelfLoopError,
    TooFewVerticesError,
    TooLargeError,
    TooManyEdgesError,
)
from .extraction import (
    ExtractionResult,
    ExtractionStats,
    compute_2vsb_spanning,
    minimal_k_vsb,
    two_phase_3vsb,
)
from .generator import (
    GeneratedInstance,
    InstanceSpec,
    generate,
    grow_until_3vsb,
    random_digraph,
)
from .harness import (
    ExperimentPlan,
    ExperimentRow,
    emit_table,
    format_duration,
    run_experiment,
)
from .oracle import oracle_is_minimal, oracle_k_vsb, oracle_strongly_connected

__version__ = "0.1.0"

__all__ = [
    "ConnectivityReport",
    "Digraph",
    "DuplicateEdgeError",
    "EdgeAbsentError",
    "EdgeListSyntaxError",
    "EdgeSubset",
    "EmptyResultError",
    "ExperimentPlan",
    "ExperimentRow",
    "ExtractionResult",
    "ExtractionStats",
    "GeneratedInstance",
    "GraphError",
    "InstanceSpec",
    "NotKVsbError",
    "OutOfRangeError",
    "SaturatedError",
    "SelfLoopError",
    "TooFewVerticesError",
    "TooLargeError",
    "TooManyEdgesError",
    "UndirectedGraph",
    "Witness",
    "articulation_points",
    "compute_2vsb_spanning",
    "emit_table",
    "format_duration",
    "generate",
    "grow_until_3vsb",
    "is_k_vsb",
    "is_strongly_biconnected",
    "is_strongly_connected",
    "minimal_k_vsb",
    "oracle_is_minimal",
    "oracle_k_vsb",
    "oracle_strongly_connected",
    "parse_edge_list",
    "random_digraph",
    "reachability_from",
    "run_experiment",
    "serialize_edge_list",
    "two_phase_3vsb",
]
