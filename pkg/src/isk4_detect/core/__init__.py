"""Core recognition primitives for isk4_detect."""

from .certificates import (
    Antenna,
    Cable,
    CertificatePayload,
    Claw,
    Isk4Certificate,
    Isk4Decomposition,
    Isk4Kind,
    RadarWitness,
    decompose_isk4,
    find_isk4_within,
    isk4_kind,
    validate_antenna,
    validate_cable,
    validate_claw,
    validate_radar,
    verify_isk4,
)
from .detector import (
    DetectionResult,
    DetectionStats,
    Isk4Detector,
    RadarSearch,
    antenna_or_cable,
    connection_to_leg,
    derived_graph,
    detect_isk4,
    detect_radar,
    enumerate_claws,
    find_connection,
    find_k4,
    find_twin_wheel,
    handle_antenna,
    handle_cable,
    handle_three_adjacent,
)
from .errors import (
    CertificateExtractionError,
    DetectorInvariantError,
    GraphError,
    GraphFormatError,
    Isk4Error,
    MinimalityViolation,
    OracleBudgetExceeded,
    PreconditionError,
)
from .extraction import Connection, Extraction
from .graph import Graph, MaskedGraph, Path, build_graph, masked, neighborhood, shortest_path
from .outcomes import (
    AntennaFound,
    CableFound,
    Isk4Found,
    Isk4Free,
    NoRadar,
    TripleNeighbor,
    VertexExcluded,
)
from .steiner import (
    Connector,
    ConnectorShape,
    NotMinimalEvidence,
    classify_connector,
    min_connector,
)

__all__ = [
    "Antenna",
    "AntennaFound",
    "Cable",
    "CableFound",
    "CertificateExtractionError",
    "CertificatePayload",
    "Claw",
    "Connection",
    "Connector",
    "ConnectorShape",
    "DetectionResult",
    "DetectionStats",
    "DetectorInvariantError",
    "Extraction",
    "Graph",
    "GraphError",
    "GraphFormatError",
    "Isk4Certificate",
    "Isk4Decomposition",
    "Isk4Detector",
    "Isk4Error",
    "Isk4Found",
    "Isk4Free",
    "Isk4Kind",
    "MaskedGraph",
    "MinimalityViolation",
    "NoRadar",
    "NotMinimalEvidence",
    "OracleBudgetExceeded",
    "Path",
    "PreconditionError",
    "RadarSearch",
    "RadarWitness",
    "TripleNeighbor",
    "VertexExcluded",
    "antenna_or_cable",
    "build_graph",
    "classify_connector",
    "connection_to_leg",
    "decompose_isk4",
    "derived_graph",
    "detect_isk4",
    "detect_radar",
    "enumerate_claws",
    "find_connection",
    "find_isk4_within",
    "find_k4",
    "find_twin_wheel",
    "handle_antenna",
    "handle_cable",
    "handle_three_adjacent",
    "isk4_kind",
    "masked",
    "min_connector",
    "neighborhood",
    "shortest_path",
    "validate_antenna",
    "validate_cable",
    "validate_claw",
    "validate_radar",
    "verify_isk4",
]
