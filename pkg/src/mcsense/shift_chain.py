"""Per-coset fractional-shift chain: upsample, filter, delay, downsample.

Row i of the coset matrix is zero-insert upsampled by L, pushed through the
ideal one-sided lowpass passing the normalized band [0, 1/L) with
interpolation gain L, circularly delayed by c_i samples at the upsampled
rate, and downsampled by L again. The filter and delay act as DFT masks
over the whole upsampled record, so the processing is circular: there is
no transient and no snapshots need discarding. The net effect per row is a
delay of c_i/L low-rate samples, which aligns all rows onto a common time
grid and turns the coset offsets into pure steering phases.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .multicoset import CosetPattern, CosetSequences


@dataclass(frozen=True)
class SnapshotMatrix:
    """p x M matrix of fractionally shifted observations; column m is the
    snapshot vector x_d(m)."""

    data: np.ndarray
    pattern: CosetPattern

    def __post_init__(self) -> None:
        if self.data.ndim != 2 or self.data.shape[0] != self.pattern.p:
            raise ValueError(
                f"data must have {self.pattern.p} rows, got shape {self.data.shape}"
            )
        if self.data.shape[1] < 1:
            raise ValueError("snapshot matrix needs at least one column")
        if not np.all(np.isfinite(self.data)):
            raise ValueError("snapshot matrix contains non-finite entries")

    @property
    def num_snapshots(self) -> int:
        return self.data.shape[1]


def ideal_filter_mask(length: int, L: int) -> np.ndarray:
    """Binary DFT mask of the ideal one-sided lowpass for upsample factor L.

    Passes exactly the bins [0, length/L - 1]; band-edge ownership is
    half-open, so bin length/L itself is excluded.
    """
    if length % L != 0:
        raise ValueError(f"length {length} is not a multiple of L={L}")
    mask = np.zeros(length)
    mask[: length // L] = 1.0
    return mask


def fractional_shift(seqs: CosetSequences) -> SnapshotMatrix:
    """Apply the upsample -> filter -> delay -> downsample chain to every row.

    Output column m corresponds to upsampled index m*L, and the column count
    equals the input's. The interpolation filter carries gain L so content
    confined to channel 0 passes through the chain unchanged.
    """
    data = seqs.data
    p, m = data.shape
    L = seqs.pattern.L
    q = m * L

    upsampled = np.zeros((p, q), dtype=np.complex128)
    upsampled[:, ::L] = data

    spectra = np.fft.fft(upsampled, axis=1)
    spectra *= L * ideal_filter_mask(q, L)
    delays = np.exp(
        -2j * np.pi * np.outer(np.asarray(seqs.pattern.offsets), np.arange(q)) / q
    )
    shifted = np.fft.ifft(spectra * delays, axis=1)
    return SnapshotMatrix(data=shifted[:, ::L], pattern=seqs.pattern)
