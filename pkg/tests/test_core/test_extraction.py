from __future__ import annotations

import pytest

from isk4_detect import Claw, Graph, build_graph, verify_isk4
from isk4_detect.core import (
    Connection,
    DetectorInvariantError,
    MinimalityViolation,
    derived_graph,
    find_connection,
)
from isk4_detect.core.certificates import Antenna, Cable
from isk4_detect.core.extraction import (
    antenna_attachment_isk4,
    antenna_connection_isk4,
    antenna_path_isk4,
    cable_attachment_isk4,
    cable_connection_isk4,
    cable_two_neighbors_isk4,
    split_antenna_attachment_isk4,
)
from isk4_detect.core.graph import Path
from tests.graphs import (
    attach,
    claw_with_antenna,
    claw_with_cable,
    claw_with_long_antenna,
    with_edges,
)

CLAW = Claw(0, 1, 2, 3)
LONG = Antenna(7, (Path.of(1, 4), Path.of(2, 5), Path.of(3, 6)))
SHORT = Antenna(4, (Path.of(1), Path.of(2), Path.of(3, 5)))
CABLE = Cable(Path.of(1, 4, 2, 5, 3), 2)
SPLIT = Path.of(1, 4, 5, 6, 3)


def split_cable() -> Graph:
    """Claw 0;1,2,3 and the path 1-4-5-6-3 whose only neighbor of 2 is 5."""
    return build_graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (4, 5), (5, 6), (6, 3), (2, 5)])


def legs_of(antenna: Antenna) -> list[frozenset[int]]:
    return [leg.as_set() for leg in antenna.legs]


class TestAntennaAttachment:
    @pytest.mark.parametrize(
        ("targets", "case", "expected"),
        [
            ((4, 5, 6, 7), "antenna_leg_ends_and_center", [0, 1, 2, 4, 5, 7, 8]),
            ((4, 5, 6), "antenna_leg_ends", [0, 2, 3, 4, 5, 6, 7, 8]),
            ((1, 4, 7), "antenna_three_on_leg", [0, 1, 2, 4, 5, 7, 8]),
            ((4, 5, 7), "antenna_two_legs_and_center", [0, 1, 2, 4, 5, 7, 8]),
            ((4, 5), "antenna_two_legs", [0, 1, 2, 3, 4, 5, 6, 7, 8]),
            ((1, 4, 5), "antenna_two_legs_doubled", [0, 1, 3, 4, 5, 6, 7, 8]),
            ((1, 4, 2), "antenna_two_legs_doubled_terminal", [0, 1, 2, 3, 4, 6, 7, 8]),
        ],
    )
    def test_case(self, targets: tuple[int, ...], case: str, expected: list[int]) -> None:
        g = attach(claw_with_long_antenna(), 8, *targets)
        extraction = antenna_attachment_isk4(derived_graph(g, CLAW), 0, LONG, 8)
        assert extraction.case == case
        assert sorted(extraction.vertices) == expected
        assert verify_isk4(g, extraction.vertices)

    def test_terminal_of_a_bare_leg(self) -> None:
        g = attach(claw_with_antenna(), 6, 1, 3, 5)
        extraction = antenna_attachment_isk4(derived_graph(g, CLAW), 0, SHORT, 6)
        assert extraction.case == "antenna_two_legs_doubled_bare"
        assert sorted(extraction.vertices) == [0, 1, 3, 4, 5, 6]
        assert verify_isk4(g, extraction.vertices)

    def test_three_legs_away_from_the_ends(self) -> None:
        g = attach(claw_with_long_antenna(), 8, 1, 5, 6)
        with pytest.raises(MinimalityViolation):
            antenna_attachment_isk4(derived_graph(g, CLAW), 0, LONG, 8)

    def test_allowed_attachment_is_an_internal_error(self) -> None:
        g = attach(claw_with_long_antenna(), 8, 1, 7)
        with pytest.raises(DetectorInvariantError) as info:
            antenna_attachment_isk4(derived_graph(g, CLAW), 0, LONG, 8)
        assert not isinstance(info.value, MinimalityViolation)


class TestCableAttachment:
    @pytest.mark.parametrize(
        ("targets", "case", "expected"),
        [
            ((1, 4, 2), "cable_three_on_half", [0, 1, 2, 4, 6]),
            ((1, 3), "cable_both_halves", [0, 1, 2, 3, 4, 5, 6]),
            ((1, 4, 5), "cable_both_halves_doubled", [0, 1, 2, 4, 5, 6]),
            ((1, 4, 3), "cable_both_halves_doubled_terminal", [0, 1, 2, 3, 4, 6]),
            ((1, 2, 5), "cable_both_halves_and_mid", [0, 1, 2, 3, 5, 6]),
        ],
    )
    def test_case(self, targets: tuple[int, ...], case: str, expected: list[int]) -> None:
        g = attach(claw_with_cable(), 6, *targets)
        extraction = cable_attachment_isk4(derived_graph(g, CLAW), 0, CABLE, 6)
        assert extraction.case == case
        assert sorted(extraction.vertices) == expected
        assert verify_isk4(g, extraction.vertices)

    def test_mid_and_both_neighbors_is_allowed(self) -> None:
        g = attach(claw_with_cable(), 6, 4, 2, 5)
        with pytest.raises(DetectorInvariantError):
            cable_attachment_isk4(derived_graph(g, CLAW), 0, CABLE, 6)


class TestSplitAttachment:
    @pytest.mark.parametrize(
        ("targets", "case", "expected"),
        [
            ((2, 4, 6), "split_mid_leg_ends", [0, 2, 3, 4, 5, 6, 7]),
            ((2, 4, 5, 6), "split_mid_leg_ends_and_center", [0, 1, 3, 4, 5, 6, 7]),
            ((2, 1, 4), "split_mid_two_on_leg", [0, 1, 2, 4, 5, 7]),
            ((2, 4), "split_mid_one_on_leg", [0, 1, 2, 3, 4, 5, 6, 7]),
            ((2, 1, 4, 5), "split_mid_detour", [0, 1, 2, 3, 5, 6, 7]),
            ((1, 4, 5), "split_three_on_leg", [0, 1, 3, 4, 5, 6, 7]),
        ],
    )
    def test_case(self, targets: tuple[int, ...], case: str, expected: list[int]) -> None:
        g = attach(split_cable(), 7, *targets)
        extraction = split_antenna_attachment_isk4(derived_graph(g, CLAW), 0, 2, SPLIT, 5, 7)
        assert extraction.case == case
        assert sorted(extraction.vertices) == expected
        assert verify_isk4(g, extraction.vertices)

    def test_both_sides_without_mid(self) -> None:
        g = attach(split_cable(), 7, 4, 6)
        with pytest.raises(MinimalityViolation):
            split_antenna_attachment_isk4(derived_graph(g, CLAW), 0, 2, SPLIT, 5, 7)


class TestAntennaConnection:
    @pytest.mark.parametrize(
        ("edges", "path", "case", "expected"),
        [
            (
                [(8, 1), (9, 2), (8, 9)],
                (1, 8, 9, 2),
                "antenna_connection",
                [0, 1, 2, 3, 4, 5, 6, 7, 8, 9],
            ),
            (
                [(8, 1), (8, 4), (9, 2), (8, 9)],
                (1, 8, 9, 2),
                "antenna_connection_doubled_end",
                [0, 1, 2, 4, 5, 7, 8, 9],
            ),
            (
                [(8, 1), (8, 4), (9, 2), (9, 5), (8, 9)],
                (1, 8, 9, 2),
                "antenna_connection_doubled_ends",
                [0, 2, 3, 4, 5, 6, 7, 8, 9],
            ),
            (
                [(8, 1), (10, 7), (9, 2), (8, 10), (10, 9)],
                (1, 8, 10, 9, 2),
                "antenna_connection_center",
                [0, 1, 2, 4, 5, 7, 8, 9, 10],
            ),
            (
                [(8, 1), (9, 2), (9, 7), (8, 9)],
                (1, 8, 9, 2),
                "antenna_connection_center_end",
                [0, 1, 2, 4, 5, 7, 8, 9],
            ),
        ],
    )
    def test_case(
        self,
        edges: list[tuple[int, int]],
        path: tuple[int, ...],
        case: str,
        expected: list[int],
    ) -> None:
        g = with_edges(claw_with_long_antenna(), *edges)
        gp = derived_graph(g, CLAW)
        connection = find_connection(gp, Path(path), legs_of(LONG), 0, 1, hub=7)
        extraction = antenna_connection_isk4(gp, 0, LONG, connection)
        assert extraction.case == case
        assert sorted(extraction.vertices) == expected
        assert verify_isk4(g, extraction.vertices)

    def test_two_center_neighbors_on_the_connection(self) -> None:
        g = with_edges(claw_with_long_antenna(), (8, 1), (8, 10), (10, 11), (11, 9), (9, 2))
        g = with_edges(g, (10, 7), (11, 7))
        gp = derived_graph(g, CLAW)
        connection = Connection(Path.of(8, 10, 11, 9), (0, 1), True, (1, 1), (10, 11))
        with pytest.raises(MinimalityViolation):
            antenna_connection_isk4(gp, 0, LONG, connection)

    def test_path_with_two_center_neighbors(self) -> None:
        g = with_edges(claw_with_long_antenna(), (4, 8), (8, 9), (9, 5))
        extraction = antenna_path_isk4(0, LONG, Path.of(1, 4, 8, 9, 5, 2), 0, 1)
        assert extraction.case == "antenna_path"
        assert sorted(extraction.vertices) == list(range(10))
        assert verify_isk4(g, extraction.vertices)


class TestCableConnection:
    @pytest.mark.parametrize(
        ("edges", "case", "expected"),
        [
            ([(6, 1), (7, 3), (6, 7)], "cable_connection", [0, 1, 2, 3, 4, 5, 6, 7]),
            (
                [(6, 1), (6, 4), (7, 3), (6, 7)],
                "cable_connection_terminal",
                [0, 1, 2, 3, 4, 6, 7],
            ),
            (
                [(6, 1), (6, 4), (7, 3), (7, 5), (6, 7)],
                "cable_connection_doubled",
                [0, 1, 2, 4, 5, 6, 7],
            ),
        ],
    )
    def test_case(self, edges: list[tuple[int, int]], case: str, expected: list[int]) -> None:
        g = with_edges(claw_with_cable(), *edges)
        gp = derived_graph(g, CLAW)
        halves = [half.as_set() for half in CABLE.halves()]
        connection = find_connection(gp, Path.of(1, 6, 7, 3), halves, 0, 1, hub=2)
        extraction = cable_connection_isk4(gp, 0, CABLE, connection)
        assert extraction.case == case
        assert sorted(extraction.vertices) == expected
        assert verify_isk4(g, extraction.vertices)

    def test_two_mid_neighbors(self) -> None:
        g = with_edges(claw_with_cable(), (6, 1), (6, 2), (7, 2), (7, 3), (6, 7))
        extraction = cable_two_neighbors_isk4(derived_graph(g, CLAW), 0, 2, Path.of(1, 6, 7, 3))
        assert sorted(extraction.vertices) == [0, 1, 2, 3, 6, 7]
        assert verify_isk4(g, extraction.vertices)

    def test_path_must_hold_two_mid_neighbors(self) -> None:
        g = with_edges(claw_with_cable(), (6, 1), (6, 2), (6, 7), (7, 3))
        with pytest.raises(MinimalityViolation):
            cable_two_neighbors_isk4(derived_graph(g, CLAW), 0, 2, Path.of(1, 6, 7, 3))
