"""Independent validators for every structure the detector emits or consumes.

Nothing here trusts the detector: each check recomputes the induced subgraph from the base
graph and decides the property from scratch.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Any, Iterable, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .errors import OracleBudgetExceeded
from .graph import GraphLike, Path, VertexSet, induced_edge_count, is_connected_set


@dataclass(frozen=True)
class Claw:
    """Center ``u`` with three pairwise non-adjacent leaves ``x < y < z``."""

    u: int
    x: int
    y: int
    z: int

    @property
    def terminals(self) -> tuple[int, int, int]:
        return self.x, self.y, self.z

    def as_tuple(self) -> tuple[int, int, int, int]:
        return self.u, self.x, self.y, self.z


@dataclass(frozen=True)
class Isk4Certificate:
    """A vertex set whose induced subgraph is a subdivision of K4."""

    vertices: VertexSet

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "Isk4Certificate":
        return cls(frozenset(vertices))

    def sorted(self) -> list[int]:
        return sorted(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


class Isk4Kind(str, Enum):
    K4 = "k4"
    TWIN_WHEEL = "twin_wheel"
    HAS_CLAW = "has_claw"


@dataclass(frozen=True)
class Isk4Decomposition:
    """Branch vertices of an ISK4 and the six branch paths joining them pairwise."""

    branch: tuple[int, int, int, int]
    paths: tuple[Path, ...]


@dataclass(frozen=True)
class Antenna:
    """Center ``c`` joined to three disjoint legs.

    ``legs[i]`` runs from the i-th terminal to the leg end adjacent to the center.
    """

    center: int
    legs: tuple[Path, Path, Path]

    @property
    def terminals(self) -> tuple[int, int, int]:
        return self.legs[0].first, self.legs[1].first, self.legs[2].first

    @property
    def leg_ends(self) -> tuple[int, int, int]:
        return self.legs[0].last, self.legs[1].last, self.legs[2].last

    @property
    def vertices(self) -> VertexSet:
        out = {self.center}
        for leg in self.legs:
            out.update(leg.vertices)
        return frozenset(out)

    def extended_leg(self, i: int) -> tuple[int, ...]:
        """``P_t ∪ {c}`` as a vertex sequence from the terminal to the center."""
        return self.legs[i].vertices + (self.center,)


@dataclass(frozen=True)
class Cable:
    """A chordless path between two terminals passing through the third (``mid``)."""

    path: Path
    mid: int

    @property
    def terminals(self) -> tuple[int, int, int]:
        return self.path.first, self.mid, self.path.last

    @property
    def vertices(self) -> VertexSet:
        return self.path.as_set()

    def halves(self) -> tuple[Path, Path]:
        """The halves ``P_x`` and ``P_z``, each from an end terminal up to the mid's neighbor."""
        i = self.path.index(self.mid)
        vs = self.path.vertices
        return Path(vs[:i]), Path(tuple(reversed(vs[i + 1 :])))


@dataclass(frozen=True)
class RadarWitness:
    vertices: VertexSet
    terminals: tuple[int, int, int]


# -- ISK4 ------------------------------------------------------------------------------


def _induced_degrees(g: GraphLike, members: VertexSet) -> dict[int, int]:
    return {v: len(g.neighbors(v) & members) for v in members}


def decompose_isk4(g: GraphLike, s: Iterable[int]) -> Optional[Isk4Decomposition]:
    """Split the induced subgraph on ``s`` into branch vertices and branch paths.

    Maximal degree-2 chains are contracted between branch vertices; a chain returning to its
    start or two chains joining the same pair of branch vertices reject the set.
    """
    members = frozenset(s)
    if len(members) < 4 or not all(g.is_alive(v) for v in members):
        return None
    degrees = _induced_degrees(g, members)
    branch = sorted(v for v, d in degrees.items() if d == 3)
    if len(branch) != 4 or any(d not in (2, 3) for d in degrees.values()):
        return None
    if not is_connected_set(g, members):
        return None

    branch_set = frozenset(branch)
    chains: dict[tuple[int, int], Path] = {}
    for b in branch:
        for first in sorted(g.neighbors(b) & members):
            walk = [b, first]
            while walk[-1] not in branch_set:
                prev, cur = walk[-2], walk[-1]
                (nxt,) = (g.neighbors(cur) & members) - {prev}
                walk.append(nxt)
            end = walk[-1]
            if end == b:
                return None
            key = (min(b, end), max(b, end))
            chain = Path(tuple(walk)) if b < end else Path(tuple(reversed(walk)))
            existing = chains.get(key)
            if existing is None:
                chains[key] = chain
            elif existing != chain:
                return None
    if len(chains) != 6:
        return None
    ordered = tuple(chains[key] for key in sorted(chains))
    return Isk4Decomposition(branch=(branch[0], branch[1], branch[2], branch[3]), paths=ordered)


def verify_isk4(g: GraphLike, s: Iterable[int]) -> bool:
    """True iff the subgraph induced on ``s`` is a subdivision of K4. Never raises."""
    try:
        members = frozenset(int(v) for v in s)
    except (TypeError, ValueError):
        return False
    return decompose_isk4(g, members) is not None


def isk4_kind(g: GraphLike, s: Iterable[int]) -> Isk4Kind:
    """Classify a verified ISK4 as K4, a twin wheel, or one that contains a claw."""
    members = frozenset(s)
    decomposition = decompose_isk4(g, members)
    if decomposition is None:
        raise ValueError("vertex set does not induce a subdivision of K4")
    if len(members) == 4:
        return Isk4Kind.K4
    for hub in decomposition.branch:
        rim = members - {hub}
        spokes = g.neighbors(hub) & members
        rim_degrees = _induced_degrees(g, rim)
        if len(rim) >= 4 and all(d == 2 for d in rim_degrees.values()) and is_connected_set(g, rim):
            if any(len(g.neighbors(spoke) & spokes) == 2 for spoke in spokes):
                return Isk4Kind.TWIN_WHEEL
    if find_claw_within(g, members) is not None:
        return Isk4Kind.HAS_CLAW
    raise ValueError("ISK4 is neither K4, a twin wheel, nor claw-containing")


def find_isk4_within(
    g: GraphLike,
    s: Iterable[int],
    *,
    max_subsets: int | None = None,
) -> Optional[Isk4Certificate]:
    """Smallest ISK4 inside ``s``, enumerating subsets by size and then lexicographically.

    Exponential; only meant for small vertex sets. Raises :class:`OracleBudgetExceeded` once
    more than ``max_subsets`` subsets have been examined.
    """
    pool = sorted(frozenset(s))
    examined = 0
    for size in range(4, len(pool) + 1):
        for combo in combinations(pool, size):
            examined += 1
            if max_subsets is not None and examined > max_subsets:
                raise OracleBudgetExceeded(
                    f"ISK4 search over {len(pool)} vertices exceeded {max_subsets} subsets"
                )
            if decompose_isk4(g, combo) is not None:
                return Isk4Certificate(frozenset(combo))
    return None


def find_claw_within(g: GraphLike, s: Iterable[int]) -> Optional[Claw]:
    """First claw of the induced subgraph on ``s``, centers ascending."""
    members = frozenset(s)
    for u in sorted(members):
        leaves = sorted(g.neighbors(u) & members)
        for x, y, z in combinations(leaves, 3):
            if not (g.adjacent(x, y) or g.adjacent(x, z) or g.adjacent(y, z)):
                return Claw(u, x, y, z)
    return None


# -- claw ------------------------------------------------------------------------------


def validate_claw(g: GraphLike, u: int, x: int, y: int, z: int) -> bool:
    if len({u, x, y, z}) != 4 or not all(g.is_alive(v) for v in (u, x, y, z)):
        return False
    if not (g.adjacent(u, x) and g.adjacent(u, y) and g.adjacent(u, z)):
        return False
    return not (g.adjacent(x, y) or g.adjacent(x, z) or g.adjacent(y, z))


# -- antenna and cable -----------------------------------------------------------------


def _antenna_structure_ok(g: GraphLike, a: Antenna) -> bool:
    legs = a.legs
    if not g.is_alive(a.center):
        return False
    seen: set[int] = set()
    for leg in legs:
        if seen & leg.as_set() or a.center in leg:
            return False
        seen.update(leg.vertices)
        if not leg.is_chordless_in(g):
            return False
    if all(leg.length == 0 for leg in legs):
        return False
    for i, j in combinations(range(3), 2):
        if any(g.neighbors(v) & legs[j].as_set() for v in legs[i]):
            return False
    center_neighbors = g.neighbors(a.center) & frozenset(seen)
    return center_neighbors == frozenset(a.leg_ends)


def antenna_attachment_ok(a: Antenna, attachments: VertexSet) -> bool:
    """Whether a vertex with neighbors ``attachments`` inside ``a`` may sit outside it."""
    if len(attachments) <= 1:
        return True
    if len(attachments) != 2:
        return False
    for i in range(3):
        extended = a.extended_leg(i)
        if attachments <= frozenset(extended):
            p, q = (extended.index(v) for v in attachments)
            return abs(p - q) <= 2
    return False


def cable_attachment_ok(c: Cable, attachments: VertexSet) -> bool:
    if len(attachments) <= 1:
        return True
    vs = c.path.vertices
    i = c.path.index(c.mid)
    if len(attachments) == 2:
        for side in (vs[: i + 1], vs[i:]):
            if attachments <= frozenset(side):
                p, q = (vs.index(v) for v in attachments)
                return abs(p - q) <= 2
        return False
    if len(attachments) == 3:
        return attachments == frozenset((vs[i - 1], vs[i], vs[i + 1]))
    return False


def validate_antenna(g: GraphLike, a: Antenna) -> bool:
    """Structure plus attachment of every live vertex outside the antenna."""
    if not _antenna_structure_ok(g, a):
        return False
    body = a.vertices
    return all(
        antenna_attachment_ok(a, g.neighbors(v) & body) for v in g.vertices() if v not in body
    )


def validate_cable(g: GraphLike, c: Cable) -> bool:
    path = c.path
    if c.mid not in path.interior or not path.is_chordless_in(g):
        return False
    terminals = c.terminals
    if any(g.adjacent(a, b) for a, b in combinations(terminals, 2)):
        return False
    body = c.vertices
    return all(
        cable_attachment_ok(c, g.neighbors(v) & body) for v in g.vertices() if v not in body
    )


# -- radar -----------------------------------------------------------------------------


def radar_cycle(g: GraphLike, members: VertexSet) -> Optional[VertexSet]:
    """The cycle left after repeatedly stripping leaves from a unicyclic induced subgraph."""
    degrees = _induced_degrees(g, members)
    remaining = set(members)
    leaves = [v for v, d in degrees.items() if d <= 1]
    while leaves:
        v = leaves.pop()
        if v not in remaining:
            continue
        remaining.discard(v)
        for w in g.neighbors(v) & remaining:
            degrees[w] -= 1
            if degrees[w] == 1:
                leaves.append(w)
    if len(remaining) < 3:
        return None
    return frozenset(remaining)


def validate_radar(g: GraphLike, w: RadarWitness) -> bool:
    """Cycle plus three disjoint pendant paths ending at the terminals, nothing else."""
    members = w.vertices
    terminals = frozenset(w.terminals)
    if len(terminals) != 3 or not terminals <= members:
        return False
    if not all(g.is_alive(v) for v in members):
        return False
    if not is_connected_set(g, members) or induced_edge_count(g, members) != len(members):
        return False
    cycle = radar_cycle(g, members)
    if cycle is None:
        return False
    degrees = _induced_degrees(g, members)
    for v in members:
        d = degrees[v]
        if v in cycle:
            if d > 3 or (v in terminals and d != 2):
                return False
        else:
            if d > 2:
                return False
            if d == 1 and v not in terminals:
                return False
            if d == 2 and v in terminals:
                return False
    return True


# -- certificate JSON ------------------------------------------------------------------


class CertificatePayload(BaseModel):
    """The certificate JSON contract.

    ``{"verdict":"isk4","vertices":[...]}`` or ``{"verdict":"isk4-free"}``.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    verdict: Literal["isk4", "isk4-free"]
    vertices: Optional[list[int]] = Field(default=None)

    @field_validator("vertices")
    @classmethod
    def _ascending(cls, value: Optional[list[int]]) -> Optional[list[int]]:
        if value is None:
            return value
        if any(v < 0 for v in value):
            raise ValueError("vertex ids must be nonnegative")
        return sorted(set(value))

    @model_validator(mode="after")
    def _vertices_match_verdict(self) -> "CertificatePayload":
        if self.verdict == "isk4" and not self.vertices:
            raise ValueError("an isk4 verdict carries a nonempty vertex list")
        if self.verdict == "isk4-free" and self.vertices is not None:
            raise ValueError("an isk4-free verdict carries no vertices")
        return self

    @classmethod
    def from_vertices(cls, vertices: Iterable[int]) -> "CertificatePayload":
        return cls(verdict="isk4", vertices=sorted(vertices))

    @classmethod
    def isk4_free(cls) -> "CertificatePayload":
        return cls(verdict="isk4-free")

    @classmethod
    def from_json(cls, text: str) -> "CertificatePayload":
        return cls.model_validate_json(text)

    def to_json(self) -> str:
        data: dict[str, Any] = {"verdict": self.verdict}
        if self.vertices is not None:
            data["vertices"] = self.vertices
        return json.dumps(data, separators=(",", ":"))
