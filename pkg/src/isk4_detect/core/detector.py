"""ISK4 recognition: a K4 check, a twin-wheel check, then one radar search per claw.

The radar search works in the derived graph ``G' = G \\ (N[u] \\ {x,y,z})`` of a claw
``(u; x, y, z)``. It first builds a minimum connector of the terminals, which is either an
ISK4 with ``u``, a triple neighbor, an antenna, or a cable, and then hands the structure to
the matching handler. Handlers end the search or name a vertex that lies in no radar; the
search deletes that vertex and starts over.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator, Literal, Optional, Sequence

from ..utils.logging_config import get_logger
from .certificates import (
    Antenna,
    Cable,
    Claw,
    Isk4Certificate,
    antenna_attachment_ok,
    cable_attachment_ok,
    validate_claw,
    verify_isk4,
)
from .errors import (
    CertificateExtractionError,
    DetectorInvariantError,
    MinimalityViolation,
    PreconditionError,
)
from .extraction import (
    Connection,
    Extraction,
    antenna_attachment_isk4,
    antenna_connection_isk4,
    antenna_path_isk4,
    cable_attachment_isk4,
    cable_connection_isk4,
    cable_two_neighbors_isk4,
    split_antenna_attachment_isk4,
)
from .graph import (
    Graph,
    GraphLike,
    MaskedGraph,
    Path,
    VertexSet,
    all_connected,
    connected,
    neighborhood,
    shortest_path,
)
from .outcomes import (
    AntennaFound,
    CableFound,
    HandlerOutcome,
    Isk4Found,
    Isk4Free,
    NoRadar,
    RadarOutcome,
    StructureOutcome,
    TripleNeighbor,
    Verdict,
    VertexExcluded,
)
from .steiner import ConnectorShape, connector_to_antenna, connector_to_cable, min_connector

logger = get_logger(__name__)

Stage = Literal["trivial", "k4", "twin_wheel", "radar"]

TERMINAL_PAIRS = ((0, 1), (0, 2), (1, 2))


@dataclass
class DetectionStats:
    """Counters collected during one :meth:`Isk4Detector.detect` call."""

    claws_examined: int = 0
    radar_iterations: int = 0
    vertices_excluded: int = 0
    path_queries: int = 0

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


@dataclass(frozen=True)
class DetectionResult:
    verdict: Verdict
    stats: DetectionStats
    stage: Stage
    claw: Optional[Claw] = None

    @property
    def found(self) -> bool:
        return isinstance(self.verdict, Isk4Found)

    @property
    def certificate(self) -> Optional[Isk4Certificate]:
        if isinstance(self.verdict, Isk4Found):
            return self.verdict.certificate
        return None


@dataclass(frozen=True)
class RadarSearch:
    """Outcome of one claw's radar search and the vertices it deleted, in order."""

    outcome: RadarOutcome
    excluded: tuple[int, ...] = field(default_factory=tuple)


# -- graph-level searches --------------------------------------------------------------


def derived_graph(g: GraphLike, claw: Claw) -> MaskedGraph:
    """``G \\ (N[u] \\ {x, y, z})``."""
    closed = g.neighbors(claw.u) | {claw.u}
    return g.masked(closed - frozenset(claw.terminals))


def find_k4(g: GraphLike) -> Optional[VertexSet]:
    """Lexicographically first 4-clique."""
    for a in g.vertices():
        na = g.neighbors(a)
        for b in sorted(w for w in na if w > a):
            nab = na & g.neighbors(b)
            for c in sorted(w for w in nab if w > b):
                for d in sorted(w for w in nab & g.neighbors(c) if w > c):
                    return frozenset((a, b, c, d))
    return None


def iter_diamonds(g: GraphLike) -> Iterator[tuple[int, int, int, int]]:
    """Tuples ``(a, b, c, d)`` inducing K4 minus the edge ``ad``, with ``b < c`` and ``a < d``."""
    for b in g.vertices():
        for c in sorted(w for w in g.neighbors(b) if w > b):
            common = sorted(g.neighbors(b) & g.neighbors(c))
            for a, d in combinations(common, 2):
                if not g.adjacent(a, d):
                    yield a, b, c, d


def find_twin_wheel(g: GraphLike) -> Optional[Isk4Certificate]:
    """First diamond whose tips stay connected once the rest of both hubs' closed neighborhoods go.

    The path closes a chordless cycle through ``b``; ``c`` is then adjacent to exactly the
    three consecutive cycle vertices ``a``, ``b``, ``d``.
    """
    for a, b, c, d in iter_diamonds(g):
        view = g.masked((neighborhood(g, (b, c), closed=True)) - {a, d})
        path = shortest_path(view, a, d)
        if path is not None:
            return Isk4Certificate(frozenset({a, b, c}) | path.as_set())
    return None


def iter_claws(g: GraphLike) -> Iterator[Claw]:
    for u in g.vertices():
        leaves = sorted(g.neighbors(u))
        for x, y, z in combinations(leaves, 3):
            if not (g.adjacent(x, y) or g.adjacent(x, z) or g.adjacent(y, z)):
                yield Claw(u, x, y, z)


def enumerate_claws(g: GraphLike) -> list[Claw]:
    """All claws, centers ascending, then leaves ``x < y < z`` ascending."""
    return list(iter_claws(g))


def _connection(
    g: GraphLike,
    segment: Sequence[int],
    legs: Sequence[VertexSet],
    pair: tuple[int, int],
    hub: Optional[int],
) -> Connection:
    closed = [neighborhood(g, leg, closed=True) for leg in legs]
    others = [r for r in range(len(legs)) if r not in pair]
    for end, leg in zip((segment[0], segment[-1]), pair):
        if end in legs[leg] or any(end in closed[r] for r in range(len(legs)) if r != leg):
            raise MinimalityViolation(f"connection end {end} lies on a leg or sees two legs")

    def count(v: int, leg: int) -> int:
        around = set(legs[leg])
        if hub is not None:
            around.add(hub)
        return len(g.neighbors(v) & around)

    return Connection(
        path=Path(tuple(segment)),
        pair=pair,
        independent=not any(v in closed[r] for r in others for v in segment),
        end_counts=(count(segment[0], pair[0]), count(segment[-1], pair[1])),
        hub_hits=tuple(v for v in segment if hub is not None and g.adjacent(v, hub)),
    )


def find_connection(
    g: GraphLike,
    path: Path,
    legs: Sequence[VertexSet],
    a: int,
    b: int,
    hub: Optional[int] = None,
) -> Connection:
    """Minimal stretch of ``path`` joining the neighborhoods of legs ``a`` and ``b``.

    The stretch ends at the first vertex of ``path`` in ``N[leg b]`` and starts at the last
    vertex before it in ``N[leg a]``. While it meets the closed neighborhood of another leg
    ``r`` it is cut at ``N[leg r]`` from either end; of the two pieces the one with fewer hub
    neighbors is kept, the piece from the ``a`` end on a tie.
    """
    closed = [neighborhood(g, leg, closed=True) for leg in legs]
    vs = path.vertices
    j = next((k for k, v in enumerate(vs) if v in closed[b]), None)
    starts = [k for k in range(j or 0) if vs[k] in closed[a]]
    if j is None or not starts:
        raise PreconditionError(f"path does not pass from leg {a} to leg {b}")

    segment = vs[starts[-1] : j + 1]
    pair = (a, b)
    while True:
        r = next(
            (r for r in range(len(legs)) if r not in pair and any(v in closed[r] for v in segment)),
            None,
        )
        if r is None:
            break
        hits = [k for k, v in enumerate(segment) if v in closed[r]]
        if hits[0] == 0 or hits[-1] == len(segment) - 1:
            raise MinimalityViolation(f"connection end sees legs {pair} and {r}")
        pieces = [
            (segment[: hits[0] + 1], (pair[0], r)),
            (tuple(reversed(segment[hits[-1] :])), (pair[1], r)),
        ]
        segment, pair = min(pieces, key=lambda p: _hub_degree(g, p[0], hub))
    return _connection(g, segment, legs, pair, hub)


def connection_to_leg(
    g: GraphLike,
    path: Path,
    legs: Sequence[VertexSet],
    r: int,
    hub: Optional[int] = None,
) -> Connection:
    """Independent connection at leg ``r`` cut from a path that starts and ends on other legs.

    One candidate enters ``N[leg r]`` for the first time, the other leaves it for the last
    time; together they hold every hub neighbor of ``path`` at most once, except a shared end.
    The one with fewer hub neighbors wins.
    """
    closed = [neighborhood(g, leg, closed=True) for leg in legs]
    vs = path.vertices
    sides = {
        k: s for k, v in enumerate(vs) for s in range(len(legs)) if s != r and v in closed[s]
    }
    at_r = [k for k, v in enumerate(vs) if v in closed[r]]
    before = [k for k in sides if at_r and k < at_r[0]]
    after = [k for k in sides if at_r and k > at_r[-1]]
    if not before or not after:
        raise PreconditionError(f"path does not cross the neighborhood of leg {r}")
    i, j = max(before), min(after)
    entering = _connection(g, vs[i : at_r[0] + 1], legs, (sides[i], r), hub)
    leaving = _connection(g, tuple(reversed(vs[at_r[-1] : j + 1])), legs, (sides[j], r), hub)
    return min((entering, leaving), key=lambda c: len(c.hub_hits))


def _hub_degree(g: GraphLike, segment: Sequence[int], hub: Optional[int]) -> int:
    if hub is None:
        return 0
    return sum(1 for v in segment if g.adjacent(v, hub))


def _first_bad_attachment(
    g: GraphLike,
    body: VertexSet,
    allowed: Callable[[VertexSet], bool],
) -> Optional[int]:
    for v in g.vertices():
        if v not in body and not allowed(g.neighbors(v) & body):
            return v
    return None


# -- detector --------------------------------------------------------------------------


class Isk4Detector:
    """Runs the recognition pipeline and keeps counters for the last :meth:`detect` call.

    With ``verify`` every certificate is re-checked with :func:`verify_isk4` before it is
    returned.
    """

    def __init__(self, *, verify: bool = True) -> None:
        self.verify = verify
        self.stats = DetectionStats()

    # -- top level ---------------------------------------------------------------------

    def detect(self, g: Graph) -> DetectionResult:
        self.stats = DetectionStats()
        if g.n < 4 or g.m < 6:
            return DetectionResult(Isk4Free(), self.stats, "trivial")

        clique = find_k4(g)
        if clique is not None:
            found = self._found(g, clique, "k4")
            return DetectionResult(found, self.stats, "k4")

        wheel = find_twin_wheel(g)
        if wheel is not None:
            found = self._found(g, wheel.vertices, "twin_wheel")
            return DetectionResult(found, self.stats, "twin_wheel")

        for claw in iter_claws(g):
            self.stats.claws_examined += 1
            outcome = self.detect_radar(g, claw)
            if isinstance(outcome, Isk4Found):
                logger.debug("isk4_found", claw=claw.as_tuple(), size=len(outcome.certificate))
                return DetectionResult(outcome, self.stats, "radar", claw)
        return DetectionResult(Isk4Free(), self.stats, "radar")

    def detect_radar(self, g: GraphLike, claw: Claw) -> RadarOutcome:
        return self.search_radar(g, claw).outcome

    def search_radar(self, g: GraphLike, claw: Claw) -> RadarSearch:
        """The radar search of one claw, deleting excluded vertices until a handler concludes."""
        if not validate_claw(g, *claw.as_tuple()):
            raise PreconditionError(
                f"{claw.as_tuple()} does not induce a claw centered at {claw.u}"
            )
        logger.debug("radar_search_started", claw=claw.as_tuple())
        excluded: list[int] = []
        for _ in range(g.n + 1):
            self.stats.radar_iterations += 1
            view = g.masked(excluded)
            structure = self.antenna_or_cable(view, claw)
            result: HandlerOutcome | StructureOutcome
            if isinstance(structure, TripleNeighbor):
                result = self.handle_three_adjacent(view, claw, structure.vertex)
            elif isinstance(structure, AntennaFound):
                result = self.handle_antenna(view, claw, structure.antenna)
            elif isinstance(structure, CableFound):
                result = self.handle_cable(view, claw, structure.cable)
            else:
                result = structure
            if isinstance(result, VertexExcluded):
                excluded.append(result.vertex)
                self.stats.vertices_excluded += 1
                logger.debug("vertex_excluded", claw=claw.as_tuple(), vertex=result.vertex)
                continue
            if isinstance(result, (Isk4Found, NoRadar)):
                return RadarSearch(result, tuple(excluded))
            raise DetectorInvariantError(f"unexpected handler outcome {result!r}")
        raise DetectorInvariantError(f"radar search for {claw.as_tuple()} did not terminate")

    # -- structure -----------------------------------------------------------------------

    def antenna_or_cable(self, g: GraphLike, claw: Claw) -> StructureOutcome:
        gp = derived_graph(g, claw)
        terminals = claw.terminals
        if not all_connected(gp, terminals):
            return NoRadar()
        connector = min_connector(gp, *terminals)
        if connector is None:
            return NoRadar()

        if connector.shape is ConnectorShape.LINE_CLAW_TREE:
            return self._found(g, connector.vertices | {claw.u}, "line_claw_tree")

        for v in sorted(connector.vertices):
            if all(gp.adjacent(v, t) for t in terminals):
                return TripleNeighbor(v)

        if connector.shape is ConnectorShape.CLAW_TREE:
            antenna = connector_to_antenna(gp, connector)
            bad = _first_bad_attachment(
                gp, antenna.vertices, lambda seen: antenna_attachment_ok(antenna, seen)
            )
            if bad is not None:
                return self._build(g, antenna_attachment_isk4(gp, claw.u, antenna, bad))
            return AntennaFound(antenna)

        cable = connector_to_cable(gp, connector)
        bad = _first_bad_attachment(
            gp, cable.vertices, lambda seen: cable_attachment_ok(cable, seen)
        )
        if bad is not None:
            return self._build(g, cable_attachment_isk4(gp, claw.u, cable, bad))
        return CableFound(cable)

    # -- handlers ------------------------------------------------------------------------

    def handle_three_adjacent(self, g: GraphLike, claw: Claw, v: int) -> Isk4Found | VertexExcluded:
        """Either an ISK4 through ``v`` or the conclusion that ``v`` lies in no radar."""
        gp = derived_graph(g, claw)
        terminals = claw.terminals
        if not gp.is_alive(v) or not all(gp.adjacent(v, t) for t in terminals):
            raise PreconditionError(f"vertex {v} is not adjacent to all of {terminals}")
        for t in terminals:
            p, q = (s for s in terminals if s != t)
            blocked = neighborhood(gp, (t, v), closed=True) - {p, q}
            path = self._path(gp.masked(blocked), p, q)
            if path is not None:
                return self._found(g, {claw.u, t, v} | path.as_set(), "three_adjacent")
        return VertexExcluded(v)

    def handle_antenna(self, g: GraphLike, claw: Claw, antenna: Antenna) -> HandlerOutcome:
        """Look for a terminal-to-terminal path with at most two neighbors of the center."""
        gp = derived_graph(g, claw)
        c = antenna.center
        terminals = antenna.terminals
        around = sorted(gp.neighbors(c))
        closed_c = frozenset(around) | {c}
        for i, v in enumerate(around):
            for t in around[i:]:
                view = gp.masked(closed_c - {v, t})
                for a, b in TERMINAL_PAIRS:
                    s, e = terminals[a], terminals[b]
                    if not (view.is_alive(s) and view.is_alive(e)):
                        continue
                    path = self._path(view, s, e)
                    if path is not None:
                        return self._antenna_path(g, claw, antenna, path, (a, b))

        without_center = gp.masked({c})
        for a, b in TERMINAL_PAIRS:
            if not connected(without_center, terminals[a], terminals[b]):
                return NoRadar()
        return VertexExcluded(c)

    def handle_cable(self, g: GraphLike, claw: Claw, cable: Cable) -> HandlerOutcome:
        gp = derived_graph(g, claw)
        mid = cable.mid
        start, end = cable.path.ends
        around = gp.neighbors(mid)
        closed_mid = around | {mid}

        # no neighbor of the mid terminal
        path = self._path(gp.masked(closed_mid), start, end)
        if path is not None:
            halves = [half.as_set() for half in cable.halves()]
            connection = find_connection(gp, path, halves, 0, 1, hub=mid)
            return self._build(g, cable_connection_isk4(gp, claw.u, cable, connection))

        # exactly one neighbor: the shortest such path turns the cable into an antenna
        best: Optional[Path] = None
        for t in sorted(around):
            candidate = self._path(gp.masked(closed_mid - {t}), start, end)
            if candidate is not None and (best is None or candidate.length < best.length):
                best = candidate
        if best is not None:
            return self._cable_to_antenna(g, claw, cable, best)

        # exactly two neighbors
        for t, w in combinations(sorted(around), 2):
            path = self._path(gp.masked(closed_mid - {t, w}), start, end)
            if path is not None:
                return self._build(g, cable_two_neighbors_isk4(gp, claw.u, mid, path))
        return NoRadar()

    # -- helpers -------------------------------------------------------------------------

    def _antenna_path(
        self, g: GraphLike, claw: Claw, antenna: Antenna, path: Path, pair: tuple[int, int]
    ) -> Isk4Found:
        """ISK4 from a terminal path between legs ``pair`` with at most two center neighbors.

        Two center neighbors on a path missing ``N[third leg]`` close the ISK4 directly.
        Otherwise an independent connection with at most one center neighbor is cut from it.
        """
        gp = derived_graph(g, claw)
        c = antenna.center
        legs = [leg.as_set() for leg in antenna.legs]
        a, b = pair
        (r,) = {0, 1, 2} - {a, b}
        centered = [v for v in path if gp.adjacent(v, c)]
        third = neighborhood(gp, legs[r], closed=True)
        if len(centered) == 2 and not any(v in third for v in path):
            return self._build(g, antenna_path_isk4(claw.u, antenna, path, a, b))

        connection = find_connection(gp, path, legs, a, b, hub=c)
        if len(connection.hub_hits) > 1:
            connection = connection_to_leg(gp, path, legs, r, hub=c)
        return self._build(g, antenna_connection_isk4(gp, claw.u, antenna, connection))

    def _cable_to_antenna(
        self, g: GraphLike, claw: Claw, cable: Cable, path: Path
    ) -> HandlerOutcome:
        gp = derived_graph(g, claw)
        mid = cable.mid
        centered = [v for v in path if gp.adjacent(v, mid)]
        if len(centered) != 1:
            raise MinimalityViolation(
                f"path {path.vertices} holds {len(centered)} neighbors of {mid}"
            )
        (center,) = centered
        i = path.index(center)
        by_terminal = {
            path.first: Path(path.vertices[:i]),
            path.last: Path(tuple(reversed(path.vertices[i + 1 :]))),
            mid: Path((mid,)),
        }
        x, y, z = claw.terminals
        antenna = Antenna(center, (by_terminal[x], by_terminal[y], by_terminal[z]))
        bad = _first_bad_attachment(
            gp, antenna.vertices, lambda seen: antenna_attachment_ok(antenna, seen)
        )
        if bad is not None:
            return self._build(
                g, split_antenna_attachment_isk4(gp, claw.u, mid, path, center, bad)
            )
        logger.debug("cable_became_antenna", claw=claw.as_tuple(), center=center)
        return self.handle_antenna(g, claw, antenna)

    def _path(self, view: GraphLike, s: int, t: int) -> Optional[Path]:
        self.stats.path_queries += 1
        return shortest_path(view, s, t)

    def _build(self, g: GraphLike, extraction: Extraction) -> Isk4Found:
        return self._found(g, extraction.vertices, extraction.case)

    def _found(self, g: GraphLike, vertices: Iterable[int], source: str) -> Isk4Found:
        members = frozenset(vertices)
        if self.verify and not verify_isk4(g.base, members):
            raise CertificateExtractionError(
                f"{source} produced a set that is not an ISK4", members
            )
        logger.debug("certificate_found", source=source, vertices=sorted(members))
        return Isk4Found(Isk4Certificate(members))


# -- functional wrappers ---------------------------------------------------------------


def detect_isk4(g: Graph) -> Verdict:
    return Isk4Detector().detect(g).verdict


def detect_radar(g: GraphLike, claw: Claw) -> RadarOutcome:
    return Isk4Detector().detect_radar(g, claw)


def antenna_or_cable(g: GraphLike, claw: Claw) -> StructureOutcome:
    return Isk4Detector().antenna_or_cable(g, claw)


def handle_three_adjacent(g: GraphLike, claw: Claw, v: int) -> Isk4Found | VertexExcluded:
    return Isk4Detector().handle_three_adjacent(g, claw, v)


def handle_antenna(g: GraphLike, claw: Claw, antenna: Antenna) -> HandlerOutcome:
    return Isk4Detector().handle_antenna(g, claw, antenna)


def handle_cable(g: GraphLike, claw: Claw, cable: Cable) -> HandlerOutcome:
    return Isk4Detector().handle_cable(g, claw, cable)
