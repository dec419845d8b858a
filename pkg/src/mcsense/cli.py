"""Command-line entry point: run sensing pipelines and emit CSV dumps.

Subcommands:
    sense           one end-to-end detection on a generated (or file-loaded)
                    record; optional PSD dump of the scene
    grid            Monte Carlo grid of detection metrics
    eigens          ordered eigenvalues (dB) of one scenario's correlation
    pseudospectrum  per-channel pseudospectrum values of one scenario

Scenario parameters live in a JSON config file; flags cover only the
operational knobs (seed, threads, paths). Identical config and flags
produce byte-identical output files regardless of thread count.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from .corr import sample_correlation
from .experiment import (
    ExperimentConfig,
    pattern_label,
    run_grid,
    trial_pipeline,
    write_grid_csv,
    write_trial_log,
)
from .multicoset import sample
from .shift_chain import fractional_shift
from .signal_model import MultibandSpec, NyquistRecord, generate, power_spectral_density
from .subspace import detect

CONFIG_KEYS = {
    "L",
    "p",
    "omega_max",
    "active_set",
    "snr_grid_db",
    "m_grid",
    "trials",
    "base_seed",
    "pattern_mode",
    "randomize_active_set",
    "num_active",
    "noise_variance",
}


def parse_config(path: str) -> ExperimentConfig:
    """Load and strictly validate an experiment config from a JSON file.

    Unknown keys are rejected; every config invariant is enforced with a
    message naming the offending field.
    """
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(raw, dict):
        raise ValueError(f"{path}: config must be a JSON object")
    unknown = sorted(set(raw) - CONFIG_KEYS)
    if unknown:
        raise ValueError(f"{path}: unknown config keys {unknown}")
    missing = sorted(k for k in ("L", "p", "omega_max", "snr_grid_db", "m_grid", "trials") if k not in raw)
    if missing:
        raise ValueError(f"{path}: missing required config keys {missing}")
    try:
        return ExperimentConfig(**raw)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"{path}: {exc}") from exc


def _with_seed(cfg: ExperimentConfig, seed: int | None) -> ExperimentConfig:
    if seed is None:
        return cfg
    return ExperimentConfig(
        L=cfg.L,
        p=cfg.p,
        omega_max=cfg.omega_max,
        snr_grid_db=cfg.snr_grid_db,
        m_grid=cfg.m_grid,
        trials=cfg.trials,
        active_set=cfg.active_set,
        randomize_active_set=cfg.randomize_active_set,
        num_active=cfg.num_active,
        base_seed=seed,
        pattern_mode=cfg.pattern_mode,
        noise_variance=cfg.noise_variance,
    )


def _scenario_args(cfg: ExperimentConfig, args) -> tuple[int, float, int]:
    m = args.m if args.m is not None else cfg.m_grid[0]
    snr = args.snr if args.snr is not None else cfg.snr_grid_db[0]
    if m < 1:
        raise ValueError(f"--m must be positive, got {m}")
    return int(m), float(snr), int(args.trial)


def _write_rows(path: str, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _cmd_grid(args) -> int:
    cfg = _with_seed(parse_config(args.config), args.seed)
    metrics, outcomes = run_grid(cfg, threads=args.threads)
    write_grid_csv(args.out, metrics, cfg)
    if args.trial_log:
        write_trial_log(args.trial_log, outcomes)
    return 0


def _cmd_sense(args) -> int:
    cfg = _with_seed(parse_config(args.config), args.seed)
    m, snr, trial = _scenario_args(cfg, args)
    if args.record:
        samples = np.load(args.record)
        if samples.ndim != 1:
            raise ValueError(f"{args.record}: expected a 1-D complex record")
        if samples.size % cfg.L != 0:
            raise ValueError(
                f"{args.record}: record length {samples.size} is not a multiple of L={cfg.L}"
            )
        spec = MultibandSpec(
            L=cfg.L,
            active_set=cfg.active_set or (),
            omega_max=cfg.omega_max,
            snr_db=snr,
            record_snapshots=samples.size // cfg.L,
            noise_variance=cfg.noise_variance,
        )
        record = NyquistRecord(samples=samples.astype(np.complex128), spec=spec, seed=None)
        pattern = cfg.fixed_pattern()
        estimate = sample_correlation(fractional_shift(sample(record, pattern)))
        result = detect(estimate, pattern, cfg.n_max)
        m = record.spec.record_snapshots
    else:
        pattern, record, result = trial_pipeline(cfg, m, snr, trial)
    rows = [
        [
            m,
            format(snr, ".6g"),
            result.n_hat,
            ";".join(str(k) for k in result.b_hat),
            ",".join(str(c) for c in pattern.offsets),
        ]
    ]
    _write_rows(args.out, ("m", "snr_db", "n_hat", "b_hat", "pattern"), rows)
    if args.spectrum_out:
        freqs, psd = power_spectral_density(record)
        psd_db = 10.0 * np.log10(np.maximum(psd, 1e-300))
        _write_rows(
            args.spectrum_out,
            ("frequency", "psd_db"),
            [[format(f, ".6g"), format(v, ".6g")] for f, v in zip(freqs, psd_db)],
        )
    return 0


def _cmd_eigens(args) -> int:
    cfg = _with_seed(parse_config(args.config), args.seed)
    m, snr, trial = _scenario_args(cfg, args)
    _, _, result = trial_pipeline(cfg, m, snr, trial)
    floored = np.maximum(result.eigenvalues, 1e-300)
    rows = [
        [i + 1, format(v, ".6g")]
        for i, v in enumerate(10.0 * np.log10(floored))
    ]
    _write_rows(args.out, ("index", "eigenvalue_db"), rows)
    return 0


def _cmd_pseudospectrum(args) -> int:
    cfg = _with_seed(parse_config(args.config), args.seed)
    m, snr, trial = _scenario_args(cfg, args)
    _, _, result = trial_pipeline(cfg, m, snr, trial)
    rows = [
        [k, format(v, ".6g")]
        for k, v in enumerate(result.pseudospectrum)
    ]
    _write_rows(args.out, ("channel", "p_mu"), rows)
    return 0


def _add_scenario_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=int, default=None, help="snapshot count (default: first m_grid entry)")
    parser.add_argument("--snr", type=float, default=None, help="SNR in dB (default: first snr_grid_db entry)")
    parser.add_argument("--trial", type=int, default=0, help="trial index selecting the RNG stream")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcsense",
        description="Sub-Nyquist wideband spectrum sensing simulator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    grid = sub.add_parser("grid", help="run the Monte Carlo detection grid")
    grid.add_argument("--config", required=True, help="experiment config JSON")
    grid.add_argument("--out", required=True, help="output grid CSV path")
    grid.add_argument("--seed", type=int, default=None, help="override base_seed")
    grid.add_argument("--threads", type=int, default=1, help="worker cap (never changes results)")
    grid.add_argument("--trial-log", default=None, help="optional per-trial CSV path")
    grid.set_defaults(handler=_cmd_grid)

    sense = sub.add_parser("sense", help="single end-to-end detection")
    sense.add_argument("--config", required=True, help="experiment config JSON")
    sense.add_argument("--out", required=True, help="output summary CSV path")
    sense.add_argument("--seed", type=int, default=None, help="override base_seed")
    sense.add_argument("--record", default=None, help="optional .npy complex record to sense instead of generating")
    sense.add_argument("--spectrum-out", default=None, help="optional PSD CSV of the sensed record")
    _add_scenario_flags(sense)
    sense.set_defaults(handler=_cmd_sense)

    eigens = sub.add_parser("eigens", help="dump ordered eigenvalues in dB")
    eigens.add_argument("--config", required=True, help="experiment config JSON")
    eigens.add_argument("--out", required=True, help="output CSV path")
    eigens.add_argument("--seed", type=int, default=None, help="override base_seed")
    _add_scenario_flags(eigens)
    eigens.set_defaults(handler=_cmd_eigens)

    pmu = sub.add_parser("pseudospectrum", help="dump per-channel pseudospectrum values")
    pmu.add_argument("--config", required=True, help="experiment config JSON")
    pmu.add_argument("--out", required=True, help="output CSV path")
    pmu.add_argument("--seed", type=int, default=None, help="override base_seed")
    _add_scenario_flags(pmu)
    pmu.set_defaults(handler=_cmd_pseudospectrum)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"mcsense: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
