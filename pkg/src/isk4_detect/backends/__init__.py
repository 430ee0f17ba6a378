"""Graph file formats and their selection."""

from __future__ import annotations

from pathlib import Path
from typing import Protocol, runtime_checkable

from ..core.graph import Graph


@runtime_checkable
class GraphFormatBackend(Protocol):
    """Protocol describing graph file-format backends."""

    name: str
    suffixes: tuple[str, ...]

    def parse(self, text: str) -> Graph:
        """Parse ``text`` strictly, raising ``GraphFormatError`` with a line number on failure."""

    def dump(self, g: Graph) -> str:
        """Serialize ``g``; read-only formats raise ``GraphFormatError``."""


class FormatFactory:
    """Factory for retrieving format backends by name or by file suffix."""

    @staticmethod
    def available() -> tuple[str, ...]:
        return ("edgelist", "dimacs")

    @staticmethod
    def get_backend_by_name(name: str) -> GraphFormatBackend:
        from .dimacs_backend import DimacsBackend
        from .edgelist_backend import EdgeListBackend

        name_normalized = name.lower()
        if name_normalized == "edgelist":
            return EdgeListBackend()
        if name_normalized == "dimacs":
            return DimacsBackend()
        raise ValueError(f"Unknown graph format '{name}'")

    @staticmethod
    def get_backend_for_path(path: str | Path) -> GraphFormatBackend:
        """DIMACS for ``.dimacs``/``.col`` files, the edge-list format otherwise."""
        from .dimacs_backend import DimacsBackend
        from .edgelist_backend import EdgeListBackend

        suffix = Path(path).suffix.lower()
        if suffix in DimacsBackend.suffixes:
            return DimacsBackend()
        return EdgeListBackend()


def load_graph(path: str | Path, format: str | None = None) -> Graph:
    """Read and parse ``path``; ``format`` overrides suffix detection."""
    backend = (
        FormatFactory.get_backend_by_name(format)
        if format is not None
        else FormatFactory.get_backend_for_path(path)
    )
    return backend.parse(Path(path).read_text(encoding="utf-8"))


from .dimacs_backend import DimacsBackend
from .edgelist_backend import EdgeListBackend, write_edge_list

__all__ = [
    "DimacsBackend",
    "EdgeListBackend",
    "FormatFactory",
    "GraphFormatBackend",
    "load_graph",
    "write_edge_list",
]
