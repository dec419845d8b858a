"""Monte Carlo detection harness over grids of snapshot count and SNR.

Each trial derives an independent RNG stream from
``(base_seed, M, snr_db, trial)``, runs the full pipeline (scene generation,
coset sampling, fractional shift, sample correlation, subspace detection)
and records per-channel hits and false alarms. Trials are therefore pure
functions of the config and their grid coordinates: cells are independent,
execution order and worker count cannot change any number, and the CSV
output is byte-identical across runs.
"""

from __future__ import annotations

import csv
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .corr import sample_correlation
from .multicoset import CosetPattern, random_pattern, sample
from .shift_chain import fractional_shift
from .signal_model import MultibandSpec, NyquistRecord, generate
from .subspace import DetectionResult, detect

GRID_CSV_COLUMNS = ("M", "snr_db", "trials", "pr_order", "pd", "pf", "pattern", "seed")
TRIAL_CSV_COLUMNS = ("trial", "M", "snr_db", "n_hat", "b_hat", "hits", "false_alarms")


@dataclass(frozen=True)
class ExperimentConfig:
    """Grid experiment description.

    ``active_set`` fixes the scene for every trial; alternatively set
    ``randomize_active_set`` with ``num_active`` to redraw it per trial.
    ``pattern_mode`` is "fixed" (one pattern drawn from the base seed) or
    "per_trial".
    """

    L: int
    p: int
    omega_max: float
    snr_grid_db: tuple[float, ...]
    m_grid: tuple[int, ...]
    trials: int
    active_set: tuple[int, ...] | None = None
    randomize_active_set: bool = False
    num_active: int | None = None
    base_seed: int = 0
    pattern_mode: str = "fixed"
    noise_variance: float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "snr_grid_db", tuple(float(s) for s in self.snr_grid_db))
        object.__setattr__(self, "m_grid", tuple(int(m) for m in self.m_grid))
        if self.active_set is not None:
            object.__setattr__(self, "active_set", tuple(int(b) for b in self.active_set))
        if self.L < 2:
            raise ValueError(f"L must be at least 2, got {self.L}")
        if not 0.0 < self.omega_max <= 1.0:
            raise ValueError(f"omega_max must be in (0, 1], got {self.omega_max}")
        if not 1 <= self.p <= self.L:
            raise ValueError(f"need 1 <= p <= L, got p={self.p}, L={self.L}")
        if self.p <= self.n_max:
            raise ValueError(
                f"p={self.p} violates the requirement p > N_max={self.n_max} "
                f"(omega_max={self.omega_max}, L={self.L})"
            )
        if self.alpha < self.omega_max:
            raise ValueError(
                f"sub-Nyquist factor p/L={self.alpha:.4g} falls below the "
                f"occupancy bound omega_max={self.omega_max}"
            )
        if self.randomize_active_set:
            if self.num_active is None:
                raise ValueError("randomize_active_set requires num_active")
            if self.active_set is not None:
                raise ValueError("randomize_active_set excludes a fixed active_set")
        elif self.active_set is None:
            raise ValueError("need either active_set or randomize_active_set")
        if not 1 <= self.n_active <= self.n_max:
            raise ValueError(
                f"number of active channels must lie in [1, N_max={self.n_max}], "
                f"got {self.n_active}"
            )
        if self.active_set is not None:
            b = self.active_set
            if any(not 0 <= bi < self.L for bi in b):
                raise ValueError(f"active_set entries must lie in [0, {self.L - 1}], got {b}")
            if len(set(b)) != len(b):
                raise ValueError(f"active_set has repeated entries: {b}")
            if any(b[i] >= b[i + 1] for i in range(len(b) - 1)):
                raise ValueError(f"active_set must be strictly increasing, got {b}")
        if len(self.m_grid) == 0 or any(m < 1 for m in self.m_grid):
            raise ValueError(f"m_grid entries must be positive, got {self.m_grid}")
        if len(self.snr_grid_db) == 0:
            raise ValueError("snr_grid_db must be nonempty")
        if self.trials < 1:
            raise ValueError(f"trials must be positive, got {self.trials}")
        if self.base_seed < 0:
            raise ValueError(f"base_seed must be non-negative, got {self.base_seed}")
        if self.pattern_mode not in ("fixed", "per_trial"):
            raise ValueError(
                f"pattern_mode must be 'fixed' or 'per_trial', got {self.pattern_mode!r}"
            )
        if self.noise_variance < 0:
            raise ValueError(f"noise_variance must be non-negative, got {self.noise_variance}")

    @property
    def n_max(self) -> int:
        return round(self.omega_max * self.L)

    @property
    def n_active(self) -> int:
        return self.num_active if self.active_set is None else len(self.active_set)

    @property
    def alpha(self) -> float:
        return self.p / self.L

    def fixed_pattern(self) -> CosetPattern:
        """The experiment-wide coset pattern, drawn once from the base seed."""
        return random_pattern(self.L, self.p, seed=self.base_seed)


@dataclass(frozen=True)
class TrialOutcome:
    """One trial's detection record."""

    trial: int
    m: int
    snr_db: float
    offsets: tuple[int, ...]
    true_active: tuple[int, ...]
    n_hat: int
    b_hat: tuple[int, ...]
    order_correct: bool
    hits: int
    false_alarms: int


@dataclass(frozen=True)
class GridCellMetrics:
    """Aggregated detection metrics for one (M, SNR) grid cell."""

    m: int
    snr_db: float
    trials: int
    pr_order: float
    pd: float
    pf: float
    per_channel_pd: np.ndarray


def _snr_key(snr_db: float) -> int:
    """Stable non-negative integer encoding of an SNR value for seeding."""
    return int(np.float64(snr_db).view(np.uint64))


def trial_seed(cfg: ExperimentConfig, m: int, snr_db: float, trial: int) -> list[int]:
    """Entropy pool identifying one trial's RNG stream."""
    return [cfg.base_seed, int(m), _snr_key(snr_db), int(trial)]


def trial_pipeline(
    cfg: ExperimentConfig, m: int, snr_db: float, trial: int
) -> tuple[CosetPattern, NyquistRecord, DetectionResult]:
    """Run the full sensing pipeline for one trial and keep the stages.

    Deterministic given (config, m, snr_db, trial): the scene stream and the
    control stream (per-trial pattern / active-set draws, in that order) are
    spawned from the trial's seed pool.
    """
    root = np.random.SeedSequence(trial_seed(cfg, m, snr_db, trial))
    scene_seed, control_seed = root.spawn(2)
    control = np.random.default_rng(control_seed)

    if cfg.pattern_mode == "per_trial":
        pattern = random_pattern(cfg.L, cfg.p, seed=control)
    else:
        pattern = cfg.fixed_pattern()
    if cfg.randomize_active_set:
        active = tuple(
            int(b) for b in np.sort(control.choice(cfg.L, size=cfg.num_active, replace=False))
        )
    else:
        active = cfg.active_set

    spec = MultibandSpec(
        L=cfg.L,
        active_set=active,
        omega_max=cfg.omega_max,
        snr_db=snr_db,
        record_snapshots=m,
        noise_variance=cfg.noise_variance,
    )
    record = generate(spec, scene_seed)
    snapshots = fractional_shift(sample(record, pattern))
    estimate = sample_correlation(snapshots)
    result = detect(estimate, pattern, cfg.n_max)
    return pattern, record, result


def run_trial(cfg: ExperimentConfig, m: int, snr_db: float, trial: int) -> TrialOutcome:
    """Run one trial and score it against the ground truth."""
    try:
        pattern, record, result = trial_pipeline(cfg, m, snr_db, trial)
    except ValueError as exc:
        raise ValueError(f"trial {trial} (M={m}, snr_db={snr_db}): {exc}") from exc
    true_active = record.spec.active_set
    hits = len(set(result.b_hat) & set(true_active))
    false_alarms = len(set(result.b_hat) - set(true_active))
    return TrialOutcome(
        trial=trial,
        m=m,
        snr_db=snr_db,
        offsets=pattern.offsets,
        true_active=true_active,
        n_hat=result.n_hat,
        b_hat=result.b_hat,
        order_correct=result.n_hat == len(true_active),
        hits=hits,
        false_alarms=false_alarms,
    )


def aggregate(outcomes: list[TrialOutcome], L: int) -> GridCellMetrics:
    """Aggregate one grid cell's trials into detection metrics.

    With equal SNR across active channels the per-channel detection
    probabilities are exchangeable, so their average equals the hit ratio
    hits/N; the per-channel rates are kept alongside for audit (NaN for
    channels never active in the cell).
    """
    if not outcomes:
        raise ValueError("cannot aggregate an empty cell")
    m = outcomes[0].m
    snr_db = outcomes[0].snr_db
    n = len(outcomes[0].true_active)
    if any(o.m != m or o.snr_db != snr_db for o in outcomes):
        raise ValueError("cell outcomes mix grid coordinates")
    if any(len(o.true_active) != n for o in outcomes):
        raise ValueError("cell outcomes mix active-set sizes")

    trials = len(outcomes)
    pd = sum(o.hits for o in outcomes) / (n * trials)
    pf = sum(o.false_alarms for o in outcomes) / ((L - n) * trials)
    pr_order = sum(o.order_correct for o in outcomes) / trials

    active_counts = np.zeros(L)
    hit_counts = np.zeros(L)
    for o in outcomes:
        detected = set(o.b_hat)
        for k in o.true_active:
            active_counts[k] += 1
            hit_counts[k] += k in detected
    with np.errstate(invalid="ignore"):
        per_channel = hit_counts / active_counts
    return GridCellMetrics(
        m=m,
        snr_db=snr_db,
        trials=trials,
        pr_order=pr_order,
        pd=pd,
        pf=pf,
        per_channel_pd=per_channel,
    )


def run_grid(
    cfg: ExperimentConfig, threads: int = 1
) -> tuple[list[GridCellMetrics], list[TrialOutcome]]:
    """Evaluate every (M, SNR) cell of the grid.

    Trials are embarrassingly parallel; ``threads`` only caps the worker
    count and never changes any output value.
    """
    if threads < 1:
        raise ValueError(f"threads must be positive, got {threads}")
    jobs = [
        (m, snr, t)
        for m in cfg.m_grid
        for snr in cfg.snr_grid_db
        for t in range(cfg.trials)
    ]
    if threads == 1:
        outcomes = [run_trial(cfg, m, snr, t) for m, snr, t in jobs]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(lambda job: run_trial(cfg, *job), jobs))

    metrics = []
    for i in range(0, len(jobs), cfg.trials):
        metrics.append(aggregate(outcomes[i : i + cfg.trials], cfg.L))
    return metrics, outcomes


def _fmt(value: float) -> str:
    return format(value, ".6g")


def pattern_label(cfg: ExperimentConfig) -> str:
    """Comma-joined fixed pattern offsets, or 'per_trial' when redrawn."""
    if cfg.pattern_mode == "per_trial":
        return "per_trial"
    return ",".join(str(c) for c in cfg.fixed_pattern().offsets)


def write_grid_csv(path, metrics: list[GridCellMetrics], cfg: ExperimentConfig) -> None:
    """Write one row per grid cell; floats carry 6 significant digits."""
    label = pattern_label(cfg)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(GRID_CSV_COLUMNS)
        for cell in metrics:
            writer.writerow(
                [
                    cell.m,
                    _fmt(cell.snr_db),
                    cell.trials,
                    _fmt(cell.pr_order),
                    _fmt(cell.pd),
                    _fmt(cell.pf),
                    label,
                    cfg.base_seed,
                ]
            )


def write_trial_log(path, outcomes: list[TrialOutcome]) -> None:
    """Write the per-trial log; detected sets are semicolon-joined."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(TRIAL_CSV_COLUMNS)
        for o in outcomes:
            writer.writerow(
                [
                    o.trial,
                    o.m,
                    _fmt(o.snr_db),
                    o.n_hat,
                    ";".join(str(k) for k in o.b_hat),
                    o.hits,
                    o.false_alarms,
                ]
            )
