"""Brute-force oracles used for differential testing."""

from .brute_force import (
    DEFAULT_BUDGET,
    OracleBudget,
    find_radar,
    min_connector_oracle,
    oracle_detect,
    radar_exists,
    radar_rooted_isk4,
    two_core,
)

__all__ = [
    "DEFAULT_BUDGET",
    "OracleBudget",
    "find_radar",
    "min_connector_oracle",
    "oracle_detect",
    "radar_exists",
    "radar_rooted_isk4",
    "two_core",
]
