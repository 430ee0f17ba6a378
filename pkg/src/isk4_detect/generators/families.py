"""Seeded instance families for differential testing and benchmarks."""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Literal

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.graph import Edge, Graph, build_graph
from ..utils.logging_config import get_logger
from .random import SplitMix64

logger = get_logger(__name__)

Family = Literal[
    "gnp",
    "cubic_line",
    "planted_isk4",
    "forest",
    "complete_bipartite_2n",
    "twin_wheel",
    "subdivided_k4",
]

FAMILIES: tuple[str, ...] = (
    "gnp",
    "cubic_line",
    "planted_isk4",
    "forest",
    "complete_bipartite_2n",
    "twin_wheel",
    "subdivided_k4",
)

K4_EDGES: tuple[Edge, ...] = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
MAX_SUBDIVISIONS_PER_EDGE = 3
MAX_PAIRING_ATTEMPTS = 10_000


class GenSpec(BaseModel):
    """Everything needed to reproduce one instance bit for bit.

    ``n`` is the vertex count of the produced graph, except for ``cubic_line`` where it is the
    vertex count of the underlying cubic graph (the line graph has ``3n/2`` vertices).
    ``p`` is the edge probability for ``gnp`` and ``planted_isk4`` and the probability of
    starting a new tree for ``forest``; the other families ignore it.
    """

    model_config = ConfigDict(frozen=True)

    family: Family
    n: int = Field(ge=0, le=1_000_000)
    p: float = Field(default=0.3, ge=0.0, le=1.0)
    seed: int = Field(default=0, ge=0, lt=1 << 64)

    @model_validator(mode="after")
    def _family_parameters(self) -> "GenSpec":
        n = self.n
        if self.family == "cubic_line" and (n < 4 or n % 2):
            raise ValueError("cubic_line needs an even cubic order n >= 4")
        if self.family == "twin_wheel" and n < 5:
            raise ValueError("twin_wheel needs n >= 5 (a cycle of length >= 4 plus the hub)")
        if self.family == "subdivided_k4" and not 4 <= n <= 4 + 6 * MAX_SUBDIVISIONS_PER_EDGE:
            raise ValueError(
                f"subdivided_k4 needs 4 <= n <= {4 + 6 * MAX_SUBDIVISIONS_PER_EDGE}"
            )
        if self.family == "planted_isk4" and n < 4:
            raise ValueError("planted_isk4 needs n >= 4")
        if self.family == "complete_bipartite_2n" and n < 2:
            raise ValueError("complete_bipartite_2n needs n >= 2")
        return self


def _relabel(n: int, edges: list[Edge], rng: SplitMix64) -> Graph:
    perm = rng.permutation(n)
    return build_graph(n, [(perm[a], perm[b]) for a, b in edges])


def gnp(n: int, p: float, rng: SplitMix64) -> Graph:
    """Erdős–Rényi: each pair ``a < b``, in lexicographic order, kept with probability ``p``."""
    return build_graph(n, [(a, b) for a, b in combinations(range(n), 2) if rng.random() < p])


def random_forest(n: int, p: float, rng: SplitMix64) -> Graph:
    """Recursive random forest: vertex ``v`` opens a new tree with probability ``p``, otherwise
    it hangs under a uniform earlier vertex. Labels are then shuffled."""
    edges = [(rng.randrange(v), v) for v in range(1, n) if rng.random() >= p]
    return _relabel(n, edges, rng)


def complete_bipartite_2n(n: int) -> Graph:
    """``K(2, n-2)`` with sides ``{0, 1}`` and ``{2, ..., n-1}``."""
    return build_graph(n, [(a, b) for a in (0, 1) for b in range(2, n)])


def twin_wheel(n: int, rng: SplitMix64) -> Graph:
    """A chordless cycle on ``n-1`` vertices plus a hub seeing three consecutive ones."""
    k = n - 1
    cycle = [(i, (i + 1) % k) for i in range(k)]
    spokes = [(k, 0), (k, 1), (k, 2)]
    return _relabel(n, cycle + spokes, rng)


def subdivision_counts(extra: int, rng: SplitMix64) -> list[int]:
    """Spread ``extra`` subdivision vertices over the six K4 edges, at most three per edge."""
    counts = [0] * len(K4_EDGES)
    for _ in range(extra):
        open_edges = [i for i, c in enumerate(counts) if c < MAX_SUBDIVISIONS_PER_EDGE]
        counts[open_edges[rng.randrange(len(open_edges))]] += 1
    return counts


def subdivided_k4_edges(counts: list[int]) -> tuple[int, list[Edge]]:
    """K4 on ``0..3`` with edge ``i`` of :data:`K4_EDGES` replaced by a path through
    ``counts[i]`` fresh vertices. Returns the vertex count and the edges."""
    n = 4
    edges: list[Edge] = []
    for (a, b), count in zip(K4_EDGES, counts):
        chain = [a] + list(range(n, n + count)) + [b]
        n += count
        edges.extend(zip(chain, chain[1:]))
    return n, edges


def subdivided_k4(n: int, rng: SplitMix64) -> Graph:
    size, edges = subdivided_k4_edges(subdivision_counts(n - 4, rng))
    return _relabel(size, edges, rng)


def planted_isk4(n: int, p: float, rng: SplitMix64) -> Graph:
    """A subdivided K4 on the first vertices, then host vertices around it.

    Host vertices are joined among themselves with probability ``p``; each also sees at most one
    plant vertex, so no added edge has both ends in the plant and the plant stays induced.
    """
    budget = min(n - 4, 6 * MAX_SUBDIVISIONS_PER_EDGE)
    size, edges = subdivided_k4_edges(subdivision_counts(rng.randrange(budget + 1), rng))
    hosts = range(size, n)
    edges.extend((a, b) for a, b in combinations(hosts, 2) if rng.random() < p)
    for v in hosts:
        if rng.random() < p:
            edges.append((rng.randrange(size), v))
    return _relabel(n, edges, rng)


def random_cubic_graph(n: int, rng: SplitMix64) -> Graph:
    """Uniform simple cubic graph from the pairing model, retrying whole pairings that contain a
    loop or a repeated edge."""
    if n < 4 or n % 2:
        raise ValueError(f"a cubic graph needs an even order n >= 4, got {n}")
    for _ in range(MAX_PAIRING_ATTEMPTS):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        edges: set[Edge] = set()
        for a, b in zip(stubs[::2], stubs[1::2]):
            edge = (min(a, b), max(a, b))
            if a == b or edge in edges:
                break
            edges.add(edge)
        else:
            return build_graph(n, sorted(edges))
    raise RuntimeError(f"no simple pairing after {MAX_PAIRING_ATTEMPTS} attempts for n={n}")


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of ``g`` in lexicographic order; two are adjacent when they share
    an endpoint."""
    edges = g.edges()
    position = {edge: i for i, edge in enumerate(edges)}
    base = nx.Graph()
    base.add_nodes_from(range(g.n))
    base.add_edges_from(edges)
    pairs = (
        sorted((position[_ordered(e)], position[_ordered(f)]))
        for e, f in nx.line_graph(base).edges()
    )
    return build_graph(len(edges), sorted((a, b) for a, b in pairs))


def _ordered(edge: tuple[int, int]) -> Edge:
    a, b = edge
    return (a, b) if a < b else (b, a)


def cubic_line(n: int, rng: SplitMix64) -> Graph:
    return line_graph(random_cubic_graph(n, rng))


_BUILDERS: dict[str, Callable[[GenSpec, SplitMix64], Graph]] = {
    "gnp": lambda spec, rng: gnp(spec.n, spec.p, rng),
    "cubic_line": lambda spec, rng: cubic_line(spec.n, rng),
    "planted_isk4": lambda spec, rng: planted_isk4(spec.n, spec.p, rng),
    "forest": lambda spec, rng: random_forest(spec.n, spec.p, rng),
    "complete_bipartite_2n": lambda spec, rng: complete_bipartite_2n(spec.n),
    "twin_wheel": lambda spec, rng: twin_wheel(spec.n, rng),
    "subdivided_k4": lambda spec, rng: subdivided_k4(spec.n, rng),
}


def generate(spec: GenSpec) -> Graph:
    """Build the instance described by ``spec``; equal specs give identical graphs."""
    g = _BUILDERS[spec.family](spec, SplitMix64(spec.seed))
    logger.debug("instance_generated", family=spec.family, n=g.n, m=g.m, seed=spec.seed)
    return g
