"""Exception hierarchy shared by every isk4_detect subpackage."""

from __future__ import annotations


class Isk4Error(Exception):
    """Base error for isk4_detect."""


class GraphError(Isk4Error, ValueError):
    """Raised when a graph cannot be constructed from the supplied edges."""


class PreconditionError(Isk4Error, ValueError):
    """Raised when an operation is called outside its documented precondition."""


class DetectorInvariantError(Isk4Error, RuntimeError):
    """Internal breach of an invariant the recognition proofs guarantee."""


class MinimalityViolation(DetectorInvariantError):
    """A connector or path turned out shorter than the search that produced it allows."""


class CertificateExtractionError(DetectorInvariantError):
    """An ISK4 extraction produced a vertex set that does not verify."""

    def __init__(self, message: str, vertices: frozenset[int] | None = None) -> None:
        super().__init__(message)
        self.vertices = vertices


class OracleBudgetExceeded(Isk4Error):
    """Raised when a brute-force oracle is asked to exceed its budget."""


class GraphFormatError(Isk4Error, ValueError):
    """Raised when a graph file does not follow its format strictly."""

    def __init__(self, message: str, line: int | None = None) -> None:
        location = f"line {line}: " if line is not None else ""
        super().__init__(f"{location}{message}")
        self.line = line
