"""Sample correlation of snapshot matrices and the analytic model it estimates.

The snapshot vectors obey the frequency-domain observation model
``y = A(b) x + n`` with the steering (modulation) matrix
``A(i, k) = exp(j 2 pi c_i b_k / L)``, so their correlation matrix is
``R = A(b) P A*(b) + sigma^2 I`` with P the diagonal matrix of per-channel
signal powers. ``analytic_correlation`` evaluates that model exactly and
serves as the test oracle for the sampled pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .multicoset import CosetPattern
from .shift_chain import SnapshotMatrix


@dataclass(frozen=True)
class CorrelationEstimate:
    """p x p Hermitian sample correlation matrix and the snapshot count behind it."""

    matrix: np.ndarray
    snapshots: int

    def __post_init__(self) -> None:
        m = self.matrix
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"correlation matrix must be square, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ValueError("correlation matrix contains non-finite entries")
        herm_gap = np.linalg.norm(m - m.conj().T)
        if herm_gap > 1e-10 * max(1.0, np.linalg.norm(m)):
            raise ValueError(f"correlation matrix is not Hermitian (gap {herm_gap:.3e})")
        if self.snapshots < 1:
            raise ValueError(f"snapshot count must be positive, got {self.snapshots}")

    @property
    def p(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class ModulationMatrix:
    """p x N steering matrix relating observations to active-channel spectra."""

    matrix: np.ndarray
    pattern: CosetPattern
    active_set: tuple[int, ...]


def sample_correlation(snaps: SnapshotMatrix) -> CorrelationEstimate:
    """Average of snapshot outer products, (1/M) sum_m x_d(m) x_d*(m).

    The accumulated matrix is symmetrized to kill rounding skew, so the
    result is exactly Hermitian and its eigenspectrum is real.
    """
    data = snaps.data
    m = snaps.num_snapshots
    r = data @ data.conj().T / m
    r = (r + r.conj().T) / 2.0
    return CorrelationEstimate(matrix=r, snapshots=m)


def steering_vectors(pattern: CosetPattern, channels) -> np.ndarray:
    """Unit-gain steering columns exp(j 2 pi c_i k / L) for the given channels."""
    c = np.asarray(pattern.offsets)
    k = np.asarray(list(channels))
    return np.exp(2j * np.pi * np.outer(c, k) / pattern.L)


def build_modulation_matrix(pattern: CosetPattern, active_set) -> ModulationMatrix:
    """Build A(b) for an active set, columns ordered by ascending channel."""
    b = tuple(int(k) for k in active_set)
    if len(b) == 0:
        raise ValueError("active set must be nonempty")
    if len(set(b)) != len(b):
        raise ValueError(f"active set has repeated entries: {b}")
    if any(not 0 <= k < pattern.L for k in b):
        raise ValueError(f"active set entries must lie in [0, {pattern.L - 1}], got {b}")
    if any(b[i] >= b[i + 1] for i in range(len(b) - 1)):
        raise ValueError(f"active set must be sorted ascending, got {b}")
    return ModulationMatrix(
        matrix=steering_vectors(pattern, b), pattern=pattern, active_set=b
    )


def analytic_correlation(
    mod: ModulationMatrix, channel_powers, noise_power: float
) -> np.ndarray:
    """Exact observation correlation A(b) diag(P) A*(b) + sigma^2 I.

    ``channel_powers`` are the positive per-channel signal powers (the bands
    are uncorrelated, so P is diagonal and full rank); ``noise_power`` is the
    per-branch noise variance sigma^2 >= 0.
    """
    powers = np.asarray(channel_powers, dtype=float)
    if powers.ndim != 1 or powers.size != len(mod.active_set):
        raise ValueError(
            f"need one power per active channel ({len(mod.active_set)}), got {powers.shape}"
        )
    if np.any(powers <= 0):
        raise ValueError(f"channel powers must be positive, got {powers}")
    if noise_power < 0:
        raise ValueError(f"noise power must be non-negative, got {noise_power}")
    a = mod.matrix
    r = (a * powers) @ a.conj().T + noise_power * np.eye(a.shape[0])
    return (r + r.conj().T) / 2.0
