"""Scaling benchmarks of the detector over the generator families."""

from __future__ import annotations

import math
import time
from typing import Sequence

import pandas as pd

from ..core.detector import Isk4Detector
from ..generators.families import Family, GenSpec, generate
from ..generators.random import SplitMix64
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

BENCH_COLUMNS = ["family", "n", "median_ms"]


def time_detection(spec: GenSpec) -> float:
    """Wall time of one detection in milliseconds, generation excluded."""
    g = generate(spec)
    detector = Isk4Detector()
    start = time.perf_counter()
    detector.detect(g)
    return (time.perf_counter() - start) * 1000.0


def run_bench(
    family: Family,
    sizes: Sequence[int],
    reps: int = 3,
    seed: int = 0,
    p: float = 0.3,
) -> pd.DataFrame:
    """Median detection time per size, one row per size in the given order."""
    if reps < 1:
        raise ValueError(f"reps must be positive, got {reps}")
    rng = SplitMix64(seed)
    records = []
    for n in sizes:
        for rep in range(reps):
            spec = GenSpec(family=family, n=n, p=p, seed=rng.next_u64())
            elapsed = time_detection(spec)
            records.append({"family": family, "n": n, "rep": rep, "ms": elapsed})
            logger.debug("bench_rep", family=family, n=n, rep=rep, ms=round(elapsed, 3))

    if not records:
        return pd.DataFrame(columns=BENCH_COLUMNS)
    frame = pd.DataFrame.from_records(records)
    grouped = frame.groupby(["family", "n"], sort=False)["ms"]
    medians = grouped.median().reset_index(name="median_ms")
    logger.info("bench_finished", family=family, sizes=list(sizes), reps=reps)
    return medians[BENCH_COLUMNS]


def loglog_slope(frame: pd.DataFrame) -> float:
    """Least-squares slope of ``log(median_ms)`` against ``log(n)``."""
    if len(frame) < 2:
        raise ValueError("a slope needs at least two sizes")
    x = frame["n"].astype(float).map(math.log)
    y = frame["median_ms"].astype(float).clip(lower=1e-6).map(math.log)
    return float(x.cov(y) / x.var())


def bench_csv(frame: pd.DataFrame) -> str:
    return str(frame.to_csv(index=False, float_format="%.3f", lineterminator="\n"))
