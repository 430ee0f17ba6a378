"""Small named graphs shared by the test modules."""

from __future__ import annotations

from itertools import combinations
from pathlib import Path
from typing import Callable

from isk4_detect import Graph, build_graph

GraphWriter = Callable[..., Path]


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def net() -> Graph:
    """Triangle 0-1-2 with pendant vertices 3-0, 4-1, 5-2."""
    return build_graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])


def spider() -> Graph:
    """Center 0 with legs 0-1-2, 0-3-4, 0-5-6."""
    return build_graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def small_twin_wheel() -> Graph:
    """Cycle 0-1-2-3 plus hub 4 adjacent to 0, 1, 2."""
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2)])


def k4_one_subdivision() -> Graph:
    """K4 on 0..3 with the edge 0-1 replaced by 0-4-1."""
    return build_graph(5, [(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def k4_fully_subdivided() -> Graph:
    """K4 on 0..3 with every edge subdivided once (vertices 4..9)."""
    edges = []
    for extra, (a, b) in enumerate(combinations(range(4), 2), start=4):
        edges.extend([(a, extra), (extra, b)])
    return build_graph(10, edges)


def double_chains() -> Graph:
    """Four degree-3 vertices whose chains pair up 0-1 and 2-3 twice each."""
    return build_graph(6, [(0, 1), (0, 4), (4, 1), (0, 2), (1, 3), (2, 3), (2, 5), (5, 3)])


def claw_with_cable() -> Graph:
    """Claw 0;1,2,3 with the path 1-4-2-5-3 behind it."""
    return build_graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (4, 2), (2, 5), (5, 3)])


def claw_with_antenna() -> Graph:
    """Claw 0;1,2,3 with the antenna centered at 4: legs 1, 2 and 3-5."""
    return build_graph(6, [(0, 1), (0, 2), (0, 3), (4, 1), (4, 2), (4, 5), (5, 3)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def claw_with_long_antenna() -> Graph:
    """Claw 0;1,2,3 with the antenna centered at 7: legs 1-4, 2-5 and 3-6."""
    return build_graph(
        8, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6), (4, 7), (5, 7), (6, 7)]
    )


def with_edges(g: Graph, *edges: tuple[int, int]) -> Graph:
    n = max([g.n - 1, *(v for e in edges for v in e)]) + 1
    return build_graph(n, g.edges() + list(edges))


def attach(g: Graph, v: int, *targets: int) -> Graph:
    """``g`` plus the edges from ``v`` to every target."""
    return with_edges(g, *((v, t) for t in targets))
