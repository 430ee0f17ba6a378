"""Exponential-time ground truth for small graphs.

Every search enumerates vertex subsets by size and then lexicographically, so answers are
deterministic and the first hit is a smallest witness.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..core.certificates import (
    Claw,
    Isk4Certificate,
    RadarWitness,
    find_isk4_within,
    validate_radar,
    verify_isk4,
)
from ..core.detector import derived_graph
from ..core.errors import OracleBudgetExceeded, PreconditionError
from ..core.graph import GraphLike, VertexSet, component, is_connected_set
from ..core.outcomes import Isk4Found, Isk4Free, Verdict


class OracleBudget(BaseModel):
    """Caps that make the oracle refuse oversize inputs instead of running for hours."""

    model_config = ConfigDict(frozen=True)

    max_n: int = Field(default=16, ge=0, le=64)
    max_subsets: int = Field(default=1 << 20, ge=1)

    def check(self, order: int) -> None:
        if order > self.max_n:
            raise OracleBudgetExceeded(
                f"graph has {order} vertices, the oracle budget allows {self.max_n}"
            )


DEFAULT_BUDGET = OracleBudget()


def two_core(g: GraphLike, keep: Iterable[int] = ()) -> VertexSet:
    """Vertices surviving repeated removal of degree < 2 vertices, never removing ``keep``."""
    kept = frozenset(keep)
    alive = set(g.vertices())
    degree = {v: len(g.neighbors(v)) for v in alive}
    stack = [v for v in alive if degree[v] < 2 and v not in kept]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g.neighbors(v):
            if w in alive:
                degree[w] -= 1
                if degree[w] < 2 and w not in kept:
                    stack.append(w)
    return frozenset(alive)


def oracle_detect(g: GraphLike, budget: OracleBudget = DEFAULT_BUDGET) -> Verdict:
    """ISK4 existence by exhaustion over the 2-core of ``g``."""
    budget.check(g.order)
    found = find_isk4_within(g, two_core(g), max_subsets=budget.max_subsets)
    if found is None:
        return Isk4Free()
    return Isk4Found(found)


def _count(examined: int, budget: OracleBudget, what: str) -> int:
    examined += 1
    if examined > budget.max_subsets:
        raise OracleBudgetExceeded(f"{what} exceeded {budget.max_subsets} subsets")
    return examined


def _terminal_pool(g: GraphLike, x: int, y: int, z: int) -> Optional[list[int]]:
    for t in (x, y, z):
        if not g.is_alive(t):
            raise PreconditionError(f"terminal {t} is not alive in the view")
    reach = component(g, x)
    if y not in reach or z not in reach:
        return None
    return sorted(reach - {x, y, z})


def find_radar(
    g: GraphLike,
    x: int,
    y: int,
    z: int,
    budget: OracleBudget = DEFAULT_BUDGET,
    must_contain: Iterable[int] = (),
) -> Optional[RadarWitness]:
    """Smallest (x,y,z)-radar in ``g`` containing ``must_contain``, or ``None``."""
    if g.adjacent(x, y) or g.adjacent(x, z) or g.adjacent(y, z):
        raise PreconditionError("radar terminals must be pairwise non-adjacent")
    budget.check(g.order)
    required = frozenset(must_contain)
    pool = _terminal_pool(g, x, y, z)
    if pool is None or not all(g.is_alive(v) for v in required):
        return None
    if not required <= frozenset(pool) | {x, y, z}:
        return None
    base = frozenset((x, y, z)) | required
    # non-terminal radar vertices have degree >= 2 inside the radar
    free = [v for v in pool if v not in required and len(g.neighbors(v)) >= 2]
    examined = 0
    for size in range(len(free) + 1):
        for extra in combinations(free, size):
            examined = _count(examined, budget, "radar search")
            members = base | frozenset(extra)
            witness = RadarWitness(members, (x, y, z))
            if validate_radar(g, witness):
                return witness
    return None


def radar_exists(
    g: GraphLike,
    x: int,
    y: int,
    z: int,
    budget: OracleBudget = DEFAULT_BUDGET,
    must_contain: Iterable[int] = (),
) -> bool:
    return find_radar(g, x, y, z, budget, must_contain) is not None


def radar_rooted_isk4(
    g: GraphLike, claw: Claw, budget: OracleBudget = DEFAULT_BUDGET
) -> Optional[Isk4Certificate]:
    """A radar of the claw's derived graph closed up by the claw center, when one exists."""
    witness = find_radar(derived_graph(g, claw), *claw.terminals, budget=budget)
    if witness is None:
        return None
    members = witness.vertices | {claw.u}
    if not verify_isk4(g.base, members):
        return None
    return Isk4Certificate(members)


def min_connector_oracle(
    g: GraphLike, x: int, y: int, z: int, budget: OracleBudget = DEFAULT_BUDGET
) -> Optional[int]:
    """Fewest vertices of a connected induced subgraph containing the three terminals."""
    budget.check(g.order)
    pool = _terminal_pool(g, x, y, z)
    if pool is None:
        return None
    terminals = frozenset((x, y, z))
    examined = 0
    for size in range(len(pool) + 1):
        for extra in combinations(pool, size):
            examined = _count(examined, budget, "connector search")
            if is_connected_set(g, terminals | frozenset(extra)):
                return size + 3
    return None
