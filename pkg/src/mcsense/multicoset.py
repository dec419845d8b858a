"""Multicoset sub-Nyquist sampling: keep p of every L Nyquist-grid samples.

The sampler is a pure restriction: row i of the output is
``x[m*L + c_i]`` for the i-th coset offset. No arithmetic is performed,
so the retained fraction of samples is exactly ``p / L``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .signal_model import NyquistRecord


@dataclass(frozen=True)
class CosetPattern:
    """The p coset offsets {c_i} in [0, L-1] defining the sampler."""

    L: int
    offsets: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "offsets", tuple(int(c) for c in self.offsets))
        if self.L < 1:
            raise ValueError(f"L must be positive, got {self.L}")
        c = self.offsets
        if not 1 <= len(c) <= self.L:
            raise ValueError(f"need 1 <= p <= L offsets, got p={len(c)} with L={self.L}")
        if any(not 0 <= ci < self.L for ci in c):
            raise ValueError(f"offsets must lie in [0, {self.L - 1}], got {c}")
        if any(c[i] >= c[i + 1] for i in range(len(c) - 1)):
            raise ValueError(f"offsets must be strictly increasing, got {c}")

    @property
    def p(self) -> int:
        return len(self.offsets)

    @property
    def alpha(self) -> Fraction:
        """Sub-Nyquist factor p/L: average rate over Nyquist rate."""
        return Fraction(self.p, self.L)


@dataclass(frozen=True)
class CosetSequences:
    """p x M matrix of coset samples; row i holds x_i(m) = x[m*L + c_i]."""

    data: np.ndarray
    pattern: CosetPattern

    def __post_init__(self) -> None:
        if self.data.ndim != 2 or self.data.shape[0] != self.pattern.p:
            raise ValueError(
                f"data must have {self.pattern.p} rows, got shape {self.data.shape}"
            )
        if self.data.shape[1] < 1:
            raise ValueError("coset sequences need at least one column")


def random_pattern(L: int, p: int, seed) -> CosetPattern:
    """Draw a uniformly random p-subset of {0..L-1}, sorted ascending.

    Reproducible for a fixed seed.
    """
    if not 1 <= p <= L:
        raise ValueError(f"need 1 <= p <= L, got p={p}, L={L}")
    rng = np.random.default_rng(seed)
    offsets = np.sort(rng.choice(L, size=p, replace=False))
    return CosetPattern(L=L, offsets=tuple(int(c) for c in offsets))


def sample(record: NyquistRecord, pattern: CosetPattern) -> CosetSequences:
    """Restrict a Nyquist-rate record to the pattern's coset grid."""
    if pattern.L != record.spec.L:
        raise ValueError(
            f"pattern L={pattern.L} does not match record L={record.spec.L}"
        )
    m_total = record.spec.record_snapshots
    grid = np.arange(m_total) * pattern.L
    data = np.stack([record.samples[grid + c] for c in pattern.offsets])
    return CosetSequences(data=data, pattern=pattern)
