from __future__ import annotations

from pathlib import Path

import pytest

from isk4_detect import Graph, Isk4Detector, OracleBudget, write_edge_list

from .graphs import (
    GraphWriter,
    claw_with_antenna,
    claw_with_cable,
    claw_with_long_antenna,
    complete,
    cycle,
    k4_fully_subdivided,
    net,
    small_twin_wheel,
)


@pytest.fixture()
def k4() -> Graph:
    return complete(4)


@pytest.fixture()
def c6() -> Graph:
    return cycle(6)


@pytest.fixture()
def net_graph() -> Graph:
    """Triangle with one pendant vertex on each corner."""
    return net()


@pytest.fixture()
def twin_wheel_graph() -> Graph:
    return small_twin_wheel()


@pytest.fixture()
def subdivided_k4_graph() -> Graph:
    """K4 with all six edges subdivided once; its ISK4 is only found through a claw."""
    return k4_fully_subdivided()


@pytest.fixture()
def cable_graph() -> Graph:
    return claw_with_cable()


@pytest.fixture()
def antenna_graph() -> Graph:
    return claw_with_antenna()


@pytest.fixture()
def long_antenna_graph() -> Graph:
    return claw_with_long_antenna()


@pytest.fixture()
def detector() -> Isk4Detector:
    return Isk4Detector()


@pytest.fixture()
def small_budget() -> OracleBudget:
    return OracleBudget(max_n=12, max_subsets=1 << 16)


@pytest.fixture()
def graph_file(tmp_path: Path) -> GraphWriter:
    """Write a graph in the edge-list format and return the path."""

    def write(g: Graph, name: str = "graph.txt") -> Path:
        target = tmp_path / name
        target.write_text(write_edge_list(g), encoding="utf-8")
        return target

    return write
