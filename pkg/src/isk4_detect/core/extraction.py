"""Explicit ISK4s for every way a bad attachment or a bridging path can meet a structure.

Each builder takes the claw center ``u``, the antenna or cable it found in ``G'`` and the
vertex or path that breaks it, works out which configuration it faces, and returns the vertex
set of the ISK4 that configuration contains together with a case label. Configurations that
a minimum connector or a shortest path rules out raise :class:`MinimalityViolation`.

Notation: ``E_t`` is a leg followed by the antenna center (``Antenna.extended_leg``), and
``F_t`` is a cable half followed by the mid terminal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .certificates import Antenna, Cable
from .errors import DetectorInvariantError, MinimalityViolation
from .graph import GraphLike, Path, VertexSet


Part = Union[int, Iterable[int]]


@dataclass(frozen=True)
class Connection:
    """Subpath whose first vertex sees leg ``pair[0]`` and last vertex sees leg ``pair[1]``.

    Its interior misses the closed neighborhoods of both legs. ``independent`` records that it
    also misses the closed neighborhood of every other leg, ``end_counts`` how many vertices of
    its own leg plus the hub each end sees, and ``hub_hits`` its vertices adjacent to the hub.
    """

    path: Path
    pair: tuple[int, int]
    independent: bool
    end_counts: tuple[int, int]
    hub_hits: tuple[int, ...] = ()

    @property
    def ends(self) -> tuple[int, int]:
        return self.path.ends


@dataclass(frozen=True)
class Extraction:
    """Vertex set of an ISK4 and the configuration that produced it."""

    case: str
    vertices: VertexSet

    @classmethod
    def of(cls, case: str, *parts: Part) -> "Extraction":
        out: set[int] = set()
        for part in parts:
            if isinstance(part, int):
                out.add(part)
            else:
                out.update(part)
        return cls(case, frozenset(out))


def _positions(sequence: Sequence[int], members: VertexSet) -> list[int]:
    return [i for i, v in enumerate(sequence) if v in members]


def _spread(sequence: Sequence[int], members: VertexSet) -> int:
    at = _positions(sequence, members)
    return at[-1] - at[0] if at else 0


def _tail_from_last(sequence: Sequence[int], members: VertexSet) -> tuple[int, ...]:
    """The suffix of ``sequence`` starting at its last vertex in ``members``."""
    return tuple(sequence[_positions(sequence, members)[-1] :])


# -- bad attachments -------------------------------------------------------------------


def antenna_attachment_isk4(g: GraphLike, u: int, antenna: Antenna, v: int) -> Extraction:
    """ISK4 through ``v``, an outside vertex whose neighbors on the antenna are not allowed."""
    c = antenna.center
    seen = g.neighbors(v) & antenna.vertices
    legs = [leg.as_set() for leg in antenna.legs]
    on_leg = [seen & leg for leg in legs]
    hit = [i for i in range(3) if on_leg[i]]
    sees_center = c in seen

    if len(hit) == 3:
        if seen - {c} != frozenset(antenna.leg_ends):
            raise MinimalityViolation(f"vertex {v} shortcuts the antenna at {c}")
        if sees_center:
            return Extraction.of("antenna_leg_ends_and_center", u, v, c, legs[0], legs[1])
        r = next((i for i in range(3) if antenna.legs[i].length > 0), None)
        if r is None:
            raise DetectorInvariantError(f"center {c} is adjacent to all three terminals")
        a, b = (i for i in range(3) if i != r)
        end = antenna.leg_ends[r]
        return Extraction.of("antenna_leg_ends", u, v, c, end, legs[a], legs[b])

    extended = [antenna.extended_leg(i) for i in range(3)]
    counts = [len(seen & frozenset(e)) for e in extended]
    for i in range(3):
        if counts[i] > 3:
            raise MinimalityViolation(f"vertex {v} shortcuts leg {i} of the antenna at {c}")
    for i in range(3):
        if counts[i] == 3:
            r = next(j for j in range(3) if j != i and not on_leg[j])
            return Extraction.of("antenna_three_on_leg", u, v, c, legs[i], legs[r])
    for i in range(3):
        if _spread(extended[i], seen) > 2:
            raise MinimalityViolation(f"vertex {v} shortcuts leg {i} of the antenna at {c}")

    if len(hit) == 2:
        if sees_center:
            return Extraction.of("antenna_two_legs_and_center", u, v, c, legs[hit[0]], legs[hit[1]])
        doubled = [i for i in hit if len(on_leg[i]) == 2]
        if doubled:
            a = doubled[0]
            (b,) = (i for i in hit if i != a)
            (r,) = (i for i in range(3) if i not in hit)
            tail = _tail_from_last(antenna.legs[b].vertices, on_leg[b])
            if tail[0] != antenna.terminals[b]:
                return Extraction.of("antenna_two_legs_doubled", u, v, c, legs[a], legs[r], tail)
            # v sees the terminal of leg b, which u sees too
            if antenna.legs[b].length == 0:
                return Extraction.of("antenna_two_legs_doubled_bare", u, v, c, tail[0], legs[a])
            return Extraction.of(
                "antenna_two_legs_doubled_terminal", u, v, c, tail[0], legs[a], legs[r]
            )
        return Extraction.of("antenna_two_legs", u, v, antenna.vertices)

    raise DetectorInvariantError(f"vertex {v} attaches to the antenna at {c} as allowed")


def cable_attachment_isk4(g: GraphLike, u: int, cable: Cable, v: int) -> Extraction:
    """ISK4 through ``v``, an outside vertex whose neighbors on the cable are not allowed."""
    y = cable.mid
    halves = cable.halves()
    seen = g.neighbors(v) & cable.vertices
    extended = [half.vertices + (y,) for half in halves]

    counts = [len(seen & frozenset(e)) for e in extended]
    for i in (0, 1):
        if counts[i] > 3:
            raise MinimalityViolation(f"vertex {v} shortcuts half {i} of the cable through {y}")
    for i in (0, 1):
        if counts[i] == 3:
            return Extraction.of("cable_three_on_half", u, v, y, halves[i].as_set())
    for i in (0, 1):
        if _spread(extended[i], seen) > 2:
            raise MinimalityViolation(f"vertex {v} shortcuts half {i} of the cable through {y}")

    on = [seen & half.as_set() for half in halves]
    if on[0] and on[1]:
        if y not in seen:
            for i in (0, 1):
                if len(on[i]) == 2:
                    j = 1 - i
                    tail = _tail_from_last(halves[j].vertices, on[j])
                    whole = halves[i].as_set()
                    if tail[0] == halves[j].first:
                        return Extraction.of(
                            "cable_both_halves_doubled_terminal", u, v, y, tail[0], whole
                        )
                    return Extraction.of("cable_both_halves_doubled", u, v, y, whole, tail)
            return Extraction.of("cable_both_halves", u, v, cable.vertices)
        for i in (0, 1):
            side = halves[i].vertices
            (t,) = on[i]
            if t != side[-1]:
                head = side[: side.index(t) + 1]
                return Extraction.of(
                    "cable_both_halves_and_mid", u, v, y, halves[1 - i].as_set(), head
                )

    raise DetectorInvariantError(f"vertex {v} attaches to the cable through {y} as allowed")


def split_antenna_attachment_isk4(
    g: GraphLike, u: int, mid: int, path: Path, center: int, v: int
) -> Extraction:
    """ISK4 through ``v`` for the antenna a cable yields when ``path`` sees ``mid`` once.

    ``center`` is that one neighbor of ``mid``. The antenna has the halves of ``path`` on
    either side of ``center`` as two legs and the single vertex ``mid`` as the third.
    """
    vs = path.vertices
    k = vs.index(center)
    hits = [i for i, w in enumerate(vs) if g.adjacent(v, w)]
    left = [i for i in hits if i < k]
    right = [i for i in hits if i > k]
    sees_center = k in hits

    if not g.adjacent(v, mid):
        if left and right:
            raise MinimalityViolation(f"vertex {v} shortcuts the path through {center}")
        for side in (left, right):
            near = side + [k] if sees_center else side
            if len(near) == 3:
                return Extraction.of("split_three_on_leg", u, v, vs)
            if len(near) > 3 or (near and max(near) - min(near) > 2):
                raise MinimalityViolation(f"vertex {v} shortcuts the path through {center}")
        raise DetectorInvariantError(f"vertex {v} attaches to the split cable as allowed")

    if left and right:
        if left != [k - 1] or right != [k + 1]:
            raise MinimalityViolation(f"vertex {v} shortcuts the path through {center}")
        if sees_center:
            return Extraction.of("split_mid_leg_ends_and_center", u, v, vs)
        if k - 1 > 0:
            return Extraction.of("split_mid_leg_ends", u, v, mid, center, vs[k - 1], vs[k + 1 :])
        if k + 1 < len(vs) - 1:
            return Extraction.of("split_mid_leg_ends", u, v, mid, center, vs[k + 1], vs[:k])
        raise DetectorInvariantError(f"center {center} is adjacent to all three terminals")

    on_left = bool(left)
    near = sorted((left or right) + ([k] if sees_center else []))
    if len(near) >= 3:
        detour = vs[: near[0] + 1] + (v,) + vs[near[-1] :]
        return Extraction.of("split_mid_detour", u, mid, detour)
    if len(near) == 2:
        half = vs[:k] if on_left else vs[k + 1 :]
        return Extraction.of("split_mid_two_on_leg", u, v, mid, center, half)
    if len(near) == 1 and not sees_center:
        return Extraction.of("split_mid_one_on_leg", u, v, mid, vs)
    raise DetectorInvariantError(f"vertex {v} attaches to the split cable as allowed")


# -- bridging paths --------------------------------------------------------------------


def antenna_path_isk4(u: int, antenna: Antenna, path: Path, a: int, b: int) -> Extraction:
    """ISK4 from a terminal path between legs ``a`` and ``b`` with two center neighbors.

    The path must miss the closed neighborhood of the third leg.
    """
    (r,) = {0, 1, 2} - {a, b}
    third = antenna.legs[r].vertices
    return Extraction.of("antenna_path", u, antenna.center, path.vertices, third)


def antenna_connection_isk4(
    g: GraphLike, u: int, antenna: Antenna, connection: Connection
) -> Extraction:
    """ISK4 from an independent connection between two legs of the antenna.

    Each end of the connection must see its own leg and at most two vertices of that leg
    plus the center, and the connection holds at most one center neighbor.
    """
    c = antenna.center
    legs = [leg.as_set() for leg in antenna.legs]
    a, b = connection.pair
    (r,) = {0, 1, 2} - {a, b}
    q = connection.path.vertices
    first, last = q[0], q[-1]
    ex, ey = connection.end_counts
    for end, leg, count in ((first, a, ex), (last, b, ey)):
        if not g.neighbors(end) & legs[leg] or count > 2:
            raise MinimalityViolation(f"connection end {end} breaks the attachment rule at {c}")
    if not connection.independent:
        raise MinimalityViolation(f"connection {q} meets the closed neighborhood of leg {r}")

    hub_hits = connection.hub_hits
    if not hub_hits:
        if ex == 1 and ey == 1:
            return Extraction.of("antenna_connection", u, q, antenna.vertices)
        if ex == 2 and ey == 2:
            tail = _tail_from_last(antenna.legs[a].vertices, g.neighbors(first))
            return Extraction.of(
                "antenna_connection_doubled_ends", u, c, q, tail, legs[b], legs[r]
            )
        return Extraction.of("antenna_connection_doubled_end", u, c, q, legs[a], legs[b])

    if len(hub_hits) == 1:
        k = q.index(hub_hits[0])
        if ex == 1 and ey == 1:
            return Extraction.of("antenna_connection_center", u, c, q, legs[a], legs[b])
        if ex != ey:
            far, tail = (last, q[k:]) if ey == 2 else (first, q[: k + 1])
            if g.adjacent(far, c):
                return Extraction.of("antenna_connection_center_end", u, c, q, legs[a], legs[b])
            return Extraction.of("antenna_connection_center_cut", u, c, tail, legs[a], legs[b])
        if not g.adjacent(last, c):
            tail, leg = q[k:], b
        else:
            tail, leg = q[: k + 1], a
        return Extraction.of("antenna_connection_center_doubled", u, c, tail, legs[leg], legs[r])

    raise MinimalityViolation(f"connection {q} holds {len(hub_hits)} neighbors of {c}")


def cable_connection_isk4(
    g: GraphLike, u: int, cable: Cable, connection: Connection
) -> Extraction:
    """ISK4 from a connection between the two halves of a cable that avoids ``N[mid]``."""
    y = cable.mid
    halves = cable.halves()
    q = connection.path.vertices
    ex, ey = connection.end_counts
    if not (1 <= ex <= 2 and 1 <= ey <= 2):
        raise MinimalityViolation(f"connection {q} breaks the attachment rule at {y}")
    if ex == 1 and ey == 1:
        return Extraction.of("cable_connection", u, cable.vertices, q)

    if ex == 2:
        whole, cut, cut_end = halves[0], halves[1], q[-1]
    else:
        whole, cut, cut_end = halves[1], halves[0], q[0]
    attached = g.neighbors(cut_end) & cut.as_set()
    if attached == {cut.first}:
        return Extraction.of("cable_connection_terminal", u, y, cut.first, q, whole.as_set())
    tail = _tail_from_last(cut.vertices, attached)
    return Extraction.of("cable_connection_doubled", u, y, q, whole.as_set(), tail)


def cable_two_neighbors_isk4(g: GraphLike, u: int, mid: int, path: Path) -> Extraction:
    seen = [w for w in path if g.adjacent(w, mid)]
    if len(seen) != 2:
        raise MinimalityViolation(f"path {path.vertices} holds {len(seen)} neighbors of {mid}")
    return Extraction.of("cable_two_mid_neighbors", u, mid, path.vertices)
