"""Utility helpers for logging and reporting."""

from .logging_config import configure_logging, get_logger
from .reporting import FuzzReport, FuzzReporter, TrialOutcome, bench_table

__all__ = [
    "FuzzReport",
    "FuzzReporter",
    "TrialOutcome",
    "bench_table",
    "configure_logging",
    "get_logger",
]
