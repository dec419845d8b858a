"""Recover the occupied channels from the noise subspace.

After the channel count is estimated, the noise-subspace eigenvectors are
scored against every channel's steering vector: occupied channels are
(near-)orthogonal to the noise subspace, so their inverse projection blows
up. The positions of the largest pseudospectrum values are the detected
channel set.
"""

import numpy as np

from mcsense import ExperimentConfig, trial_pipeline

cfg = ExperimentConfig(
    L=32, p=10, omega_max=0.25,
    snr_grid_db=(1.0,), m_grid=(61,), trials=1,
    active_set=(8, 16, 17, 18, 29, 30), base_seed=20240811,
)

_, record, result = trial_pipeline(cfg, m=61, snr_db=1.0, trial=0)
pmu_db = 10 * np.log10(result.pseudospectrum)
floor = pmu_db.min()

print("channel | pseudospectrum [dB]")
for k, value in enumerate(pmu_db):
    bar = "#" * int(round(3.5 * max(value - floor, 0)))
    mark = "*" if k in record.spec.active_set else " "
    print(f"  {k:5d} | {value:7.2f} {mark} {bar}")

print(f"\ntrue set:     {record.spec.active_set}")
print(f"detected set: {result.b_hat}  (count estimate {result.n_hat})")
assert result.b_hat == record.spec.active_set
