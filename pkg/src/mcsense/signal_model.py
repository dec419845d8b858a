"""Complex-baseband multiband scene generation at the Nyquist rate.

Everything runs in normalized units: L channels of unit bandwidth, Nyquist
rate L, the sample index ticking at the Nyquist rate. Each active channel
carries an independent circularly-symmetric complex Gaussian process pushed
through an ideal one-sided lowpass (realized as a DFT bin mask, so the
filtering is circular and transient-free) and modulated to the channel's
lower band edge. The whole record is corrupted by circular white Gaussian
noise.

SNR convention: ``snr_db`` sets each active channel's received power
relative to the *total* received noise power, i.e. the power of channel
``b_i``'s component in the record equals ``noise_variance * 10**(snr_db/10)``.
A noiseless record (``noise_variance = 0``) is the infinite-SNR limit: the
signal keeps finite power, referenced to unit noise power instead.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def channel_bins(channel: int, snapshots: int) -> slice:
    """DFT bins owned by a channel: ``[channel*snapshots, (channel+1)*snapshots)``.

    A length ``snapshots*L`` record has ``snapshots`` bins per unit-bandwidth
    channel; the half-open partition assigns every bin to exactly one channel.
    """
    return slice(channel * snapshots, (channel + 1) * snapshots)


@dataclass(frozen=True)
class MultibandSpec:
    """Wideband scene description.

    Attributes:
        L: total number of unit-bandwidth channels (>= 2).
        active_set: strictly increasing channel indices in [0, L-1] that
            carry signal.
        omega_max: maximum channel occupancy in (0, 1]; caps the number of
            active channels at ``round(omega_max * L)``.
        snr_db: received SNR of every active channel, in dB (equal across
            channels; see module docstring for the power convention).
        record_snapshots: record length in downsampled-rate samples; the
            Nyquist-rate record has ``record_snapshots * L`` samples.
        noise_variance: variance of the additive circular white noise;
            0 gives a noiseless record.
    """

    L: int
    active_set: tuple[int, ...]
    omega_max: float
    snr_db: float
    record_snapshots: int
    noise_variance: float = 1.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "active_set", tuple(int(b) for b in self.active_set))
        if self.L < 2:
            raise ValueError(f"L must be at least 2, got {self.L}")
        if not 0.0 < self.omega_max <= 1.0:
            raise ValueError(f"omega_max must be in (0, 1], got {self.omega_max}")
        if self.record_snapshots < 1:
            raise ValueError(f"record_snapshots must be positive, got {self.record_snapshots}")
        if self.noise_variance < 0:
            raise ValueError(f"noise_variance must be non-negative, got {self.noise_variance}")
        b = self.active_set
        if any(not 0 <= bi < self.L for bi in b):
            raise ValueError(f"active_set entries must lie in [0, {self.L - 1}], got {b}")
        if any(b[i] >= b[i + 1] for i in range(len(b) - 1)):
            raise ValueError(f"active_set must be strictly increasing, got {b}")
        if self.num_active > self.n_max:
            raise ValueError(
                f"{self.num_active} active channels exceed N_max="
                f"{self.n_max} (omega_max={self.omega_max}, L={self.L})"
            )

    @property
    def num_active(self) -> int:
        return len(self.active_set)

    @property
    def n_max(self) -> int:
        """Maximum admissible number of active channels, round(omega_max * L)."""
        return round(self.omega_max * self.L)

    @property
    def nyquist_length(self) -> int:
        return self.record_snapshots * self.L


@dataclass(frozen=True)
class NyquistRecord:
    """A generated Nyquist-rate record together with its ground truth."""

    samples: np.ndarray
    spec: MultibandSpec
    seed: object

    def __post_init__(self) -> None:
        if self.samples.ndim != 1 or self.samples.size != self.spec.nyquist_length:
            raise ValueError(
                f"record must hold {self.spec.nyquist_length} samples, got shape {self.samples.shape}"
            )


def generate(spec: MultibandSpec, seed) -> NyquistRecord:
    """Generate a Nyquist-rate record for the given scene.

    Each active channel draws an independent white circular complex Gaussian
    sequence, lowpass-filters it with the ideal unit-bandwidth brick wall
    (DFT mask over the full record) and modulates it to the channel's lower
    edge; the sum is corrupted by circular white Gaussian noise. Draw order
    is fixed (all channel processes ascending by channel, then the noise),
    so a given seed is bit-reproducible.

    Args:
        seed: anything ``np.random.default_rng`` accepts.
    """
    rng = np.random.default_rng(seed)
    q = spec.nyquist_length
    m = spec.record_snapshots
    x = np.zeros(q, dtype=np.complex128)
    if spec.num_active:
        # Pre-filter process variance L * channel power: the brick wall keeps
        # 1/L of a white process's power, so the filtered component lands at
        # the target received power. Noiseless records reference unit power.
        reference = spec.noise_variance if spec.noise_variance > 0 else 1.0
        channel_power = reference * 10.0 ** (spec.snr_db / 10.0)
        scale = np.sqrt(spec.L * channel_power / 2.0)
        raw = scale * (
            rng.standard_normal((spec.num_active, q))
            + 1j * rng.standard_normal((spec.num_active, q))
        )
        spectra = np.fft.fft(raw, axis=1)
        spectra[:, m:] = 0.0
        base = np.fft.ifft(spectra, axis=1)
        carriers = np.exp(
            2j * np.pi * np.outer(spec.active_set, np.arange(q)) / spec.L
        )
        x = (base * carriers).sum(axis=0)
    if spec.noise_variance > 0:
        noise_scale = np.sqrt(spec.noise_variance / 2.0)
        x = x + noise_scale * (rng.standard_normal(q) + 1j * rng.standard_normal(q))
    return NyquistRecord(samples=x, spec=spec, seed=seed)


def true_band_powers(record: NyquistRecord) -> np.ndarray:
    """Per-channel average power of a record, from its full-length DFT.

    Partitions the DFT into the L contiguous bin groups of
    :func:`channel_bins` and returns each channel's share of the record's
    mean power (the entries sum to ``mean(|x|^2)``).
    """
    spec = record.spec
    q = spec.nyquist_length
    bin_power = np.abs(np.fft.fft(record.samples)) ** 2 / q**2
    return bin_power.reshape(spec.L, spec.record_snapshots).sum(axis=1)


def power_spectral_density(
    record: NyquistRecord, segments: int = 8
) -> tuple[np.ndarray, np.ndarray]:
    """Averaged-periodogram PSD estimate of a record.

    Splits the record into ``segments`` equal chunks (remainder discarded),
    averages their periodograms and normalizes so the PSD integrates to the
    record power over the one-sided band [0, L).

    Returns:
        (frequencies in channel units, PSD values), both length
        ``nyquist_length // segments``.
    """
    if segments < 1:
        raise ValueError(f"segments must be positive, got {segments}")
    x = record.samples
    seg_len = x.size // segments
    if seg_len < 1:
        raise ValueError(f"record too short for {segments} segments")
    chunks = x[: segments * seg_len].reshape(segments, seg_len)
    rate = float(record.spec.L)
    psd = (np.abs(np.fft.fft(chunks, axis=1)) ** 2).mean(axis=0) / (seg_len * rate)
    freqs = np.arange(seg_len) * rate / seg_len
    return freqs, psd
