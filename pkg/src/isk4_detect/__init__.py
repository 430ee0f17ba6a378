"""Public interface for the isk4_detect package."""

from .backends import DimacsBackend, EdgeListBackend, FormatFactory, load_graph, write_edge_list
from .core import (
    Antenna,
    Cable,
    CertificatePayload,
    Claw,
    DetectionResult,
    DetectionStats,
    Graph,
    Isk4Certificate,
    Isk4Detector,
    Isk4Error,
    Isk4Found,
    Isk4Free,
    MaskedGraph,
    NoRadar,
    Path,
    VertexExcluded,
    build_graph,
    detect_isk4,
    detect_radar,
    verify_isk4,
)
from .generators import GenSpec, SplitMix64, generate, line_graph
from .oracle import OracleBudget, oracle_detect, radar_exists
from .utils.logging_config import configure_logging, get_logger

__all__ = [
    "Antenna",
    "Cable",
    "CertificatePayload",
    "Claw",
    "DetectionResult",
    "DetectionStats",
    "DimacsBackend",
    "EdgeListBackend",
    "FormatFactory",
    "GenSpec",
    "Graph",
    "Isk4Certificate",
    "Isk4Detector",
    "Isk4Error",
    "Isk4Found",
    "Isk4Free",
    "MaskedGraph",
    "NoRadar",
    "OracleBudget",
    "Path",
    "SplitMix64",
    "VertexExcluded",
    "build_graph",
    "configure_logging",
    "detect_isk4",
    "detect_radar",
    "generate",
    "get_logger",
    "line_graph",
    "load_graph",
    "oracle_detect",
    "radar_exists",
    "verify_isk4",
    "write_edge_list",
]

__version__ = "0.1.0"
