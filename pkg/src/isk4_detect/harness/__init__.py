"""Differential fuzzing and scaling benchmarks."""

from .bench import bench_csv, loglog_slope, run_bench
from .fuzz import DEFAULT_P_GRID, run_fuzz, run_trial, trial_seeds

__all__ = [
    "DEFAULT_P_GRID",
    "bench_csv",
    "loglog_slope",
    "run_bench",
    "run_fuzz",
    "run_trial",
    "trial_seeds",
]
