"""Immutable simple graphs, vertex-masked views and restricted path queries."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

from .errors import GraphError, PreconditionError

VertexSet = frozenset[int]
Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Adjacency is stored as one frozenset per vertex, so ``adjacent`` is a constant-time
    membership test. Instances are immutable and safe to share between threads and processes.
    """

    n: int
    adjacency: tuple[frozenset[int], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        neighbors: list[set[int]] = [set() for _ in range(n)]
        for edge in edges:
            if len(edge) != 2:
                raise GraphError(f"edge {tuple(edge)!r} must have exactly two endpoints")
            a, b = int(edge[0]), int(edge[1])
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge ({a}, {b}) has an endpoint outside 0..{n - 1}")
            if a == b:
                raise GraphError(f"self-loop at vertex {a}")
            neighbors[a].add(b)
            neighbors[b].add(a)
        return cls(n, tuple(frozenset(vs) for vs in neighbors))

    # -- view interface shared with MaskedGraph -------------------------------------------

    @property
    def order(self) -> int:
        return self.n

    @property
    def base(self) -> "Graph":
        return self

    @property
    def removed(self) -> VertexSet:
        return frozenset()

    def is_alive(self, v: int) -> bool:
        return 0 <= v < self.n

    def vertices(self) -> Iterator[int]:
        return iter(range(self.n))

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def adjacent(self, a: int, b: int) -> bool:
        return b in self.adjacency[a]

    def masked(self, removed: Iterable[int]) -> "MaskedGraph":
        return MaskedGraph(self, frozenset(removed))

    # -- graph-only helpers ---------------------------------------------------------------

    @property
    def m(self) -> int:
        return sum(len(vs) for vs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[Edge]:
        """Edges as ascending ``(a, b)`` pairs with ``a < b``, sorted lexicographically."""
        return [(a, b) for a in range(self.n) for b in sorted(self.adjacency[a]) if a < b]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class MaskedGraph:
    """The induced subgraph of ``base`` on the vertices not in ``removed``.

    Vertices keep their base ids; nothing is relabelled, so every answer indexes into the
    original input.
    """

    base: Graph
    removed: VertexSet = field(default_factory=frozenset)

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def order(self) -> int:
        return self.base.n - len(self.removed)

    def is_alive(self, v: int) -> bool:
        return 0 <= v < self.base.n and v not in self.removed

    def vertices(self) -> Iterator[int]:
        return (v for v in range(self.base.n) if v not in self.removed)

    def neighbors(self, v: int) -> frozenset[int]:
        if not self.removed:
            return self.base.adjacency[v]
        return self.base.adjacency[v] - self.removed

    def adjacent(self, a: int, b: int) -> bool:
        return self.is_alive(a) and self.is_alive(b) and b in self.base.adjacency[a]

    def masked(self, removed: Iterable[int]) -> "MaskedGraph":
        return MaskedGraph(self.base, self.removed | frozenset(removed))


GraphLike = Union[Graph, MaskedGraph]


@dataclass(frozen=True)
class Path:
    """A sequence of distinct vertices, consecutive ones adjacent.

    Paths returned by :func:`shortest_path` are also chordless in the view they were found in.
    """

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise ValueError("a path has at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError(f"path vertices must be distinct: {self.vertices}")

    @classmethod
    def of(cls, *vertices: int) -> "Path":
        return cls(tuple(vertices))

    @property
    def first(self) -> int:
        return self.vertices[0]

    @property
    def last(self) -> int:
        return self.vertices[-1]

    @property
    def ends(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def length(self) -> int:
        """Number of edges."""
        return len(self.vertices) - 1

    @property
    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def index(self, v: int) -> int:
        return self.vertices.index(v)

    def subpath(self, a: int, b: int) -> "Path":
        """The subpath from ``a`` to ``b``, oriented from ``a``."""
        i, j = self.index(a), self.index(b)
        if i <= j:
            return Path(self.vertices[i : j + 1])
        return Path(tuple(reversed(self.vertices[j : i + 1])))

    def reversed(self) -> "Path":
        return Path(tuple(reversed(self.vertices)))

    def as_set(self) -> VertexSet:
        return frozenset(self.vertices)

    def is_chordless_in(self, g: GraphLike) -> bool:
        vs = self.vertices
        for i, a in enumerate(vs):
            if not g.is_alive(a):
                return False
            if i + 1 < len(vs) and not g.adjacent(a, vs[i + 1]):
                return False
            for b in vs[i + 2 :]:
                if g.adjacent(a, b):
                    return False
        return True

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.vertices


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a :class:`Graph`, deduplicating edges. Self-loops and bad endpoints are rejected."""
    return Graph.from_edges(n, edge_list)


def masked(g: GraphLike, removed: Iterable[int]) -> MaskedGraph:
    return g.masked(removed)


def neighborhood(g: GraphLike, s: Iterable[int], closed: bool = False) -> VertexSet:
    """``N(S)`` without ``S`` or, with ``closed``, ``N[S] = N(S) ∪ S``, restricted to ``g``."""
    members = frozenset(v for v in s if g.is_alive(v))
    out: set[int] = set()
    for v in members:
        out.update(g.neighbors(v))
    if closed:
        return frozenset(out | members)
    return frozenset(out - members)


def _require_alive(g: GraphLike, *vs: int) -> None:
    for v in vs:
        if not g.is_alive(v):
            raise PreconditionError(f"vertex {v} is not alive in the view")


def bfs_parents(g: GraphLike, source: int) -> dict[int, int | None]:
    """Breadth-first search tree from ``source``, expanding neighbours in ascending id.

    Parent pointers are fixed at first discovery, which makes every derived path deterministic.
    """
    _require_alive(g, source)
    parents: dict[int, int | None] = {source: None}
    queue: deque[int] = deque([source])
    while queue:
        v = queue.popleft()
        for w in sorted(g.neighbors(v)):
            if w not in parents:
                parents[w] = v
                queue.append(w)
    return parents


def bfs_distances(g: GraphLike, source: int) -> dict[int, int]:
    _require_alive(g, source)
    dist = {source: 0}
    queue: deque[int] = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def tree_path(parents: dict[int, int | None], target: int) -> Path:
    """Walk parent pointers back from ``target`` to the root; the path starts at the root."""
    walk = [target]
    parent = parents[target]
    while parent is not None:
        walk.append(parent)
        parent = parents[parent]
    walk.reverse()
    return Path(tuple(walk))


def shortest_path(g: GraphLike, s: int, t: int) -> Path | None:
    """A shortest (hence chordless) ``s``–``t`` path in ``g``, or ``None`` when disconnected."""
    _require_alive(g, s, t)
    if s == t:
        return Path((s,))
    parents: dict[int, int | None] = {s: None}
    queue: deque[int] = deque([s])
    while queue:
        v = queue.popleft()
        for w in sorted(g.neighbors(v)):
            if w in parents:
                continue
            parents[w] = v
            if w == t:
                return tree_path(parents, t)
            queue.append(w)
    return None


def component(g: GraphLike, source: int) -> VertexSet:
    _require_alive(g, source)
    seen = {source}
    stack = [source]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def connected(g: GraphLike, s: int, t: int) -> bool:
    return t in component(g, s)


def all_connected(g: GraphLike, vertices: Sequence[int]) -> bool:
    """True when every vertex in ``vertices`` lies in one component of ``g``."""
    if not vertices:
        return True
    comp = component(g, vertices[0])
    return all(v in comp for v in vertices[1:])


def induced_edge_count(g: GraphLike, s: Iterable[int]) -> int:
    members = frozenset(s)
    return sum(len(g.neighbors(v) & members) for v in members) // 2


def is_connected_set(g: GraphLike, s: Iterable[int]) -> bool:
    """True when the subgraph induced on ``s`` is connected (the empty set counts as connected)."""
    members = frozenset(s)
    if not members:
        return True
    start = min(members)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v) & members:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(members)


def induced_subgraph(g: GraphLike, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Relabelled copy of the subgraph induced on ``s``; returns the graph and old ids by new id."""
    order = tuple(sorted(v for v in frozenset(s) if g.is_alive(v)))
    position = {v: i for i, v in enumerate(order)}
    edges = [
        (position[a], position[b])
        for a in order
        for b in g.neighbors(a)
        if b in position and a < b
    ]
    return Graph.from_edges(len(order), edges), order
