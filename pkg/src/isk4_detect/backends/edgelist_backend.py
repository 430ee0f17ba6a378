"""The plain edge-list format: ``n m`` then ``m`` lines ``u v`` with 0-based ids."""

from __future__ import annotations

from typing import Iterator

from ..core.errors import GraphError, GraphFormatError
from ..core.graph import Graph, build_graph


def _content_lines(text: str, comment: str) -> Iterator[tuple[int, list[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith(comment):
            continue
        yield number, stripped.split()


def _parse_int(token: str, number: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise GraphFormatError(f"{what} {token!r} is not an integer", line=number) from None
    if value < 0:
        raise GraphFormatError(f"{what} {value} is negative", line=number)
    return value


def check_edge(n: int, a: int, b: int, number: int) -> None:
    if a >= n or b >= n:
        raise GraphFormatError(f"edge ({a}, {b}) has an endpoint >= n={n}", line=number)
    if a == b:
        raise GraphFormatError(f"self-loop at vertex {a}", line=number)


class EdgeListBackend:
    name = "edgelist"
    suffixes: tuple[str, ...] = (".txt", ".edges", ".el")

    def parse(self, text: str) -> Graph:
        lines = _content_lines(text, "#")
        header = next(lines, None)
        if header is None:
            raise GraphFormatError("missing 'n m' header")
        number, tokens = header
        if len(tokens) != 2:
            raise GraphFormatError(f"header must be 'n m', got {' '.join(tokens)!r}", line=number)
        n = _parse_int(tokens[0], number, "vertex count")
        m = _parse_int(tokens[1], number, "edge count")

        edges: list[tuple[int, int]] = []
        for number, tokens in lines:
            if len(tokens) != 2:
                raise GraphFormatError(
                    f"edge line must be 'u v', got {' '.join(tokens)!r}", line=number
                )
            if len(edges) == m:
                raise GraphFormatError(f"more than the {m} declared edges", line=number)
            a = _parse_int(tokens[0], number, "endpoint")
            b = _parse_int(tokens[1], number, "endpoint")
            check_edge(n, a, b, number)
            edges.append((a, b))
        if len(edges) != m:
            raise GraphFormatError(f"header declares {m} edges but {len(edges)} were given")
        try:
            return build_graph(n, edges)
        except GraphError as exc:  # pragma: no cover - endpoints are checked per line
            raise GraphFormatError(str(exc)) from exc

    def dump(self, g: Graph) -> str:
        return write_edge_list(g)


def write_edge_list(g: Graph) -> str:
    """``n m`` then the edges ``a b`` with ``a < b`` in lexicographic order, one per line."""
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{a} {b}" for a, b in edges)
    return "\n".join(lines) + "\n"
