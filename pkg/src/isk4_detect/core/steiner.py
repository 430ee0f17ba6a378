"""Minimum connected induced subgraph spanning three terminals, and its shape."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Union

from ..utils.logging_config import get_logger
from .certificates import Antenna, Cable, radar_cycle
from .errors import MinimalityViolation, PreconditionError
from .graph import (
    GraphLike,
    Path,
    VertexSet,
    bfs_distances,
    bfs_parents,
    induced_edge_count,
    is_connected_set,
    tree_path,
)

logger = get_logger(__name__)


class ConnectorShape(str, Enum):
    PATH = "path"
    CLAW_TREE = "claw_tree"
    LINE_CLAW_TREE = "line_claw_tree"


@dataclass(frozen=True)
class Connector:
    """Connected induced subgraph containing the terminals.

    ``hub`` is empty for a path, the claw center for a claw tree, and the triangle for the
    line graph of a claw tree.
    """

    vertices: VertexSet
    shape: ConnectorShape
    terminals: tuple[int, int, int]
    hub: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class NotMinimalEvidence:
    reason: str


ClassifyResult = Union[Connector, NotMinimalEvidence]


def _walk_within(g: GraphLike, members: VertexSet, root: int) -> dict[int, int | None]:
    parents: dict[int, int | None] = {root: None}
    queue: deque[int] = deque([root])
    while queue:
        v = queue.popleft()
        for w in sorted(g.neighbors(v) & members):
            if w not in parents:
                parents[w] = v
                queue.append(w)
    return parents


def classify_connector(
    g: GraphLike, vertices: Iterable[int], x: int, y: int, z: int
) -> ClassifyResult:
    """Recognise a path, a tree with one claw, or a triangle with three pendant paths."""
    members = frozenset(vertices)
    terminals = (x, y, z)
    if not set(terminals) <= members or not is_connected_set(g, members):
        return NotMinimalEvidence("vertex set is disconnected or misses a terminal")
    degrees = {v: len(g.neighbors(v) & members) for v in members}
    leaves = {v for v, d in degrees.items() if d <= 1}
    if not leaves <= set(terminals):
        return NotMinimalEvidence(f"non-terminal leaves {sorted(leaves - set(terminals))}")
    edges = induced_edge_count(g, members)

    if edges == len(members) - 1:
        high = sorted(v for v, d in degrees.items() if d >= 3)
        if not high:
            return Connector(members, ConnectorShape.PATH, terminals)
        if len(high) == 1 and degrees[high[0]] == 3:
            return Connector(members, ConnectorShape.CLAW_TREE, terminals, (high[0],))
        return NotMinimalEvidence(f"tree with branch vertices {high}")

    if edges == len(members):
        cycle = radar_cycle(g, members)
        if cycle is None or len(cycle) != 3:
            return NotMinimalEvidence("the only cycle is not a triangle")
        for v in members:
            if v in cycle:
                if degrees[v] > 3 or (degrees[v] == 2 and v not in terminals):
                    return NotMinimalEvidence(f"triangle vertex {v} carries no leg")
            elif degrees[v] > 2:
                return NotMinimalEvidence(f"pendant vertex {v} branches")
        for t in terminals:
            if t not in cycle and degrees[t] != 1:
                return NotMinimalEvidence(f"terminal {t} is interior to a leg")
        return Connector(members, ConnectorShape.LINE_CLAW_TREE, terminals, tuple(sorted(cycle)))

    return NotMinimalEvidence(f"{edges} edges on {len(members)} vertices")


def steiner_median(g: GraphLike, x: int, y: int, z: int) -> int | None:
    """Vertex minimising the distance sum to the terminals (smallest id on ties)."""
    dx, dy, dz = (bfs_distances(g, t) for t in (x, y, z))
    if y not in dx or z not in dx:
        return None
    return min(dx, key=lambda v: (dx[v] + dy[v] + dz[v], v))


def min_connector(g: GraphLike, x: int, y: int, z: int) -> Connector | None:
    """Minimum-vertex connected induced subgraph of ``g`` containing ``x``, ``y`` and ``z``.

    For three terminals an optimal Steiner tree has at most one branch vertex, so the union of
    breadth-first tree paths from the median is already optimal. Returns ``None`` when the
    terminals lie in different components.
    """
    if len({x, y, z}) != 3:
        raise PreconditionError(f"terminals must be distinct, got {(x, y, z)}")
    for t in (x, y, z):
        if not g.is_alive(t):
            raise PreconditionError(f"terminal {t} is not alive in the view")
    median = steiner_median(g, x, y, z)
    if median is None:
        return None
    parents = bfs_parents(g, median)
    chosen: set[int] = set()
    for t in (x, y, z):
        chosen.update(tree_path(parents, t).vertices)

    terminals = {x, y, z}
    pruned = True
    while pruned:
        pruned = False
        for v in sorted(chosen - terminals):
            if len(g.neighbors(v) & chosen) <= 1:
                chosen.discard(v)
                pruned = True

    result = classify_connector(g, chosen, x, y, z)
    if isinstance(result, NotMinimalEvidence):
        raise MinimalityViolation(f"connector around median {median}: {result.reason}")
    logger.debug(
        "connector_built",
        median=median,
        size=len(result.vertices),
        shape=result.shape.value,
    )
    return result


def connector_to_antenna(g: GraphLike, connector: Connector) -> Antenna:
    """Legs of a claw-tree connector, ordered like its terminals."""
    if connector.shape is not ConnectorShape.CLAW_TREE:
        raise PreconditionError(f"connector shape {connector.shape.value} is not a claw tree")
    (center,) = connector.hub
    parents = _walk_within(g, connector.vertices, center)
    legs = []
    for t in connector.terminals:
        to_terminal = tree_path(parents, t)
        legs.append(Path(tuple(reversed(to_terminal.vertices[1:]))))
    return Antenna(center, (legs[0], legs[1], legs[2]))


def connector_to_cable(g: GraphLike, connector: Connector) -> Cable:
    """The path connector oriented from its first end terminal (in terminal order)."""
    if connector.shape is not ConnectorShape.PATH:
        raise PreconditionError(f"connector shape {connector.shape.value} is not a path")
    members = connector.vertices
    ends = [t for t in connector.terminals if len(g.neighbors(t) & members) == 1]
    (mid,) = [t for t in connector.terminals if t not in ends]
    parents = _walk_within(g, members, ends[0])
    return Cable(tree_path(parents, ends[1]), mid)
