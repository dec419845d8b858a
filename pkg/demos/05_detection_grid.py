"""Monte Carlo detection performance over snapshots and SNR.

A scaled-down version of the reference experiment: per-channel detection
probability rises toward one with the snapshot count while the false-alarm
probability collapses, and lower SNR simply needs more snapshots. Increase
`trials` (the reference uses 1000) for publication-quality numbers, or run
the `grid` CLI subcommand which emits the same metrics as CSV.
"""

from mcsense import ExperimentConfig, run_grid

cfg = ExperimentConfig(
    L=32, p=10, omega_max=0.25,
    snr_grid_db=(-2.0, 1.0), m_grid=(11, 21, 31, 41, 61), trials=150,
    active_set=(8, 16, 17, 18, 29, 30), base_seed=20240811,
)

metrics, _ = run_grid(cfg, threads=2)

print(f"{cfg.trials} trials per cell, pattern {cfg.fixed_pattern().offsets}\n")
print(f"{'M':>4} {'SNR[dB]':>8} {'Pr(count ok)':>13} {'Pd':>7} {'Pf':>8}")
for cell in metrics:
    print(f"{cell.m:>4} {cell.snr_db:>8.0f} {cell.pr_order:>13.3f} "
          f"{cell.pd:>7.3f} {cell.pf:>8.4f}")

at_41 = next(c for c in metrics if c.m == 41 and c.snr_db == 1.0)
print(f"\nAt 1 dB and M=41 the occupied channels are found with Pd={at_41.pd:.3f}")
print("while false alarms are already rare for every SNR once M >= 21.")
