"""Read-only DIMACS graphs: ``p edge n m`` and ``e u v`` lines with 1-based ids."""

from __future__ import annotations

from ..core.errors import GraphFormatError
from ..core.graph import Graph, build_graph
from .edgelist_backend import _content_lines, _parse_int, check_edge

PROBLEM_KINDS = ("edge", "col")


class DimacsBackend:
    name = "dimacs"
    suffixes: tuple[str, ...] = (".dimacs", ".col")

    def parse(self, text: str) -> Graph:
        n: int | None = None
        m = 0
        edges: list[tuple[int, int]] = []
        for number, tokens in _content_lines(text, "c"):
            kind = tokens[0]
            if kind == "p":
                if n is not None:
                    raise GraphFormatError("second problem line", line=number)
                if len(tokens) != 4 or tokens[1] not in PROBLEM_KINDS:
                    raise GraphFormatError("problem line must be 'p edge n m'", line=number)
                n = _parse_int(tokens[2], number, "vertex count")
                m = _parse_int(tokens[3], number, "edge count")
            elif kind == "e":
                if n is None:
                    raise GraphFormatError("edge line before the problem line", line=number)
                if len(tokens) != 3:
                    raise GraphFormatError("edge line must be 'e u v'", line=number)
                a = _parse_int(tokens[1], number, "endpoint")
                b = _parse_int(tokens[2], number, "endpoint")
                if a == 0 or b == 0:
                    raise GraphFormatError("DIMACS vertex ids start at 1", line=number)
                check_edge(n, a - 1, b - 1, number)
                edges.append((a - 1, b - 1))
            else:
                raise GraphFormatError(f"unknown line type {kind!r}", line=number)
        if n is None:
            raise GraphFormatError("missing 'p edge n m' line")
        if len(edges) != m:
            raise GraphFormatError(f"problem line declares {m} edges but {len(edges)} were given")
        return build_graph(n, edges)

    def dump(self, g: Graph) -> str:
        raise GraphFormatError("the DIMACS backend is read-only")
