"""Seeded graph generators."""

from .families import (
    FAMILIES,
    GenSpec,
    complete_bipartite_2n,
    cubic_line,
    generate,
    gnp,
    line_graph,
    planted_isk4,
    random_cubic_graph,
    random_forest,
    subdivided_k4,
    twin_wheel,
)
from .random import SplitMix64

__all__ = [
    "FAMILIES",
    "GenSpec",
    "SplitMix64",
    "complete_bipartite_2n",
    "cubic_line",
    "generate",
    "gnp",
    "line_graph",
    "planted_isk4",
    "random_cubic_graph",
    "random_forest",
    "subdivided_k4",
    "twin_wheel",
]
