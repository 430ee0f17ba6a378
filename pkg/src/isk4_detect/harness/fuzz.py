"""Differential fuzzing of the detector against the brute-force oracle."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from ..core.certificates import Claw, verify_isk4
from ..core.detector import Isk4Detector, derived_graph, enumerate_claws, find_k4, find_twin_wheel
from ..core.errors import Isk4Error, OracleBudgetExceeded
from ..core.graph import Graph
from ..core.outcomes import Isk4Found, NoRadar
from ..generators.families import gnp
from ..generators.random import SplitMix64
from ..oracle.brute_force import (
    DEFAULT_BUDGET,
    OracleBudget,
    oracle_detect,
    radar_exists,
    radar_rooted_isk4,
)
from ..utils.logging_config import get_logger
from ..utils.reporting import FuzzReport, TrialOutcome

logger = get_logger(__name__)

DEFAULT_P_GRID: tuple[float, ...] = (0.1, 0.2, 0.3, 0.4, 0.5)
MIN_TRIAL_N = 4


@dataclass(frozen=True)
class TrialConfig:
    max_n: int
    p_grid: tuple[float, ...]
    budget: OracleBudget
    claws_per_trial: Optional[int]


@dataclass
class RadarCheck:
    claws: int = 0
    exclusions: int = 0
    mismatches: int = 0


def trial_seeds(seed: int, trials: int) -> list[int]:
    """Per-trial seeds drawn from one master stream, so trial ``i`` never depends on scheduling."""
    master = SplitMix64(seed)
    return [master.next_u64() for _ in range(trials)]


def trial_graph(trial_seed: int, max_n: int, p_grid: Sequence[float]) -> tuple[Graph, float]:
    rng = SplitMix64(trial_seed)
    n = MIN_TRIAL_N + rng.randrange(max_n - MIN_TRIAL_N + 1)
    p = p_grid[rng.randrange(len(p_grid))]
    return gnp(n, p, rng), p


def sample_claws(g: Graph, limit: Optional[int], rng: SplitMix64) -> list[Claw]:
    """All claws, or a seeded sample of ``limit`` of them in claw order."""
    claws = enumerate_claws(g)
    if limit is None or len(claws) <= limit:
        return claws
    rng.shuffle(claws)
    return sorted(claws[:limit], key=Claw.as_tuple)


def check_claw(
    detector: Isk4Detector, g: Graph, claw: Claw, budget: OracleBudget, notes: list[str]
) -> RadarCheck:
    """Every conclusion of one radar search, checked against brute force."""
    check = RadarCheck(claws=1)
    x, y, z = claw.terminals
    search = detector.search_radar(g, claw)

    for i, w in enumerate(search.excluded):
        check.exclusions += 1
        view = derived_graph(g.masked(search.excluded[:i]), claw)
        if radar_exists(view, x, y, z, budget, must_contain=(w,)):
            check.mismatches += 1
            notes.append(f"claw {claw.as_tuple()}: excluded {w} lies on a radar")

    exists = radar_exists(derived_graph(g, claw), x, y, z, budget)
    outcome = search.outcome
    if isinstance(outcome, NoRadar) and exists:
        check.mismatches += 1
        notes.append(f"claw {claw.as_tuple()}: no radar reported but one exists")
    if isinstance(outcome, Isk4Found) and not verify_isk4(g, outcome.certificate.vertices):
        check.mismatches += 1
        notes.append(f"claw {claw.as_tuple()}: radar certificate does not verify")
    if exists and radar_rooted_isk4(g, claw, budget) is None:
        check.mismatches += 1
        notes.append(f"claw {claw.as_tuple()}: radar plus center is not an ISK4")
    return check


def run_trial(index: int, trial_seed: int, config: TrialConfig) -> TrialOutcome:
    """One G(n, p) instance: verdict against the oracle, then radar checks on sampled claws.

    Radar checks only run on graphs without a K4 or a twin wheel, the setting in which the
    radar search is the whole of the recognition.
    """
    g, p = trial_graph(trial_seed, config.max_n, config.p_grid)
    notes: list[str] = []
    try:
        detector = Isk4Detector()
        result = detector.detect(g)
        expected = isinstance(oracle_detect(g, config.budget), Isk4Found)
        certificate = result.certificate
        certificate_ok = certificate is None or verify_isk4(g, certificate.vertices)
        if result.found != expected:
            notes.append(f"detector says {result.found}, oracle says {expected}")
        if not certificate_ok:
            notes.append("certificate does not verify")

        radar = RadarCheck()
        if config.claws_per_trial != 0 and find_k4(g) is None and find_twin_wheel(g) is None:
            rng = SplitMix64(trial_seed).split()
            for claw in sample_claws(g, config.claws_per_trial, rng):
                step = check_claw(detector, g, claw, config.budget, notes)
                radar.claws += step.claws
                radar.exclusions += step.exclusions
                radar.mismatches += step.mismatches
    except Isk4Error as exc:
        logger.warning("fuzz_trial_error", seed=trial_seed, n=g.n, error=str(exc))
        return TrialOutcome(index, trial_seed, g.n, p, error=f"{type(exc).__name__}: {exc}")

    outcome = TrialOutcome(
        index=index,
        seed=trial_seed,
        n=g.n,
        p=p,
        found=result.found,
        oracle_found=expected,
        verdict_ok=result.found == expected,
        certificate_ok=certificate_ok,
        claws_checked=radar.claws,
        radar_mismatches=radar.mismatches,
        exclusions_checked=radar.exclusions,
        notes=tuple(notes),
    )
    if outcome.failed:
        logger.warning("fuzz_trial_mismatch", seed=trial_seed, n=g.n, p=p, notes=list(notes))
    return outcome


def _run_indexed(args: tuple[int, int, TrialConfig]) -> TrialOutcome:
    return run_trial(*args)


def run_fuzz(
    trials: int,
    max_n: int = 10,
    p_grid: Sequence[float] = DEFAULT_P_GRID,
    seed: int = 0,
    workers: int = 1,
    budget: OracleBudget = DEFAULT_BUDGET,
    claws_per_trial: Optional[int] = None,
) -> FuzzReport:
    """Run ``trials`` seeded differential trials and aggregate them.

    The report depends only on the arguments: trials are seeded up front and aggregated by
    index, so ``workers`` changes wall time, never the result.
    """
    if trials < 0:
        raise ValueError(f"trials must be nonnegative, got {trials}")
    if max_n < MIN_TRIAL_N:
        raise ValueError(f"max_n must be at least {MIN_TRIAL_N}, got {max_n}")
    if not p_grid or any(not 0.0 <= p <= 1.0 for p in p_grid):
        raise ValueError(f"p_grid must be a nonempty list of probabilities, got {list(p_grid)}")
    if max_n > budget.max_n:
        raise OracleBudgetExceeded(f"max_n={max_n} exceeds the oracle budget of {budget.max_n}")

    config = TrialConfig(max_n, tuple(p_grid), budget, claws_per_trial)
    jobs = [(i, s, config) for i, s in enumerate(trial_seeds(seed, trials))]
    logger.info("fuzz_started", trials=trials, max_n=max_n, seed=seed, workers=workers)

    if workers > 1 and trials > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_run_indexed, jobs, chunksize=max(1, trials // (4 * workers))))
    else:
        outcomes = [_run_indexed(job) for job in jobs]

    report = FuzzReport.from_trials(
        outcomes, seed=seed, max_n=max_n, p_grid=list(config.p_grid), workers=workers
    )
    logger.info("fuzz_finished", trials=report.trials, mismatches=report.mismatches)
    return report
