"""Subspace analysis: eigen-split, MDL order selection, MUSIC-style recovery.

The correlation matrix splits into a signal subspace (eigenvectors paired
with the largest eigenvalues) and a noise subspace orthogonal to the
steering matrix of the active channels. The number of active channels is
chosen by the minimum-description-length rule on the ordered eigenvalues;
the channels themselves are the peaks of a pseudospectrum scoring each
candidate steering vector by its inverse squared projection onto the noise
subspace. Every decision here depends only on eigenvalue ratios and
eigenvector spans, so it is invariant to a global rescaling of the input.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import log

import numpy as np

from .corr import CorrelationEstimate, steering_vectors
from .multicoset import CosetPattern

# Relative floor applied to eigenvalues before logs: sample matrices with
# fewer snapshots than branches have exact zero eigenvalues.
EIGENVALUE_FLOOR = 1e-15
# Absolute floor for the pseudospectrum denominator: exactly orthogonal
# steering vectors would otherwise divide by zero. Only the ranking matters.
PSEUDOSPECTRUM_FLOOR = 1e-30


@dataclass(frozen=True)
class EigenSplit:
    """Full Hermitian eigendecomposition, eigenvalues sorted descending."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def p(self) -> int:
        return self.eigenvalues.size


@dataclass(frozen=True)
class DetectionResult:
    """Outcome of one detection: estimated count, pseudospectrum, channel set."""

    n_hat: int
    pseudospectrum: np.ndarray
    b_hat: tuple[int, ...]
    eigenvalues: np.ndarray


def eigensplit(est: CorrelationEstimate) -> EigenSplit:
    """Eigendecompose a correlation estimate, largest eigenvalue first."""
    if not np.all(np.isfinite(est.matrix)):
        raise ValueError("correlation matrix contains non-finite entries")
    values, vectors = np.linalg.eigh(est.matrix)
    return EigenSplit(eigenvalues=values[::-1], eigenvectors=vectors[:, ::-1])


def mdl_order(eigenvalues, num_snapshots: int, n_max: int) -> int:
    """Number of active channels minimizing the MDL criterion.

    Evaluates, for each candidate order r in 0..n_max,

        -M (p - r) log(g(r) / a(r)) + (1/2) r (2p - r) log M

    where g(r) and a(r) are the geometric and arithmetic means of the p - r
    smallest eigenvalues, and returns the minimizing r (ties broken toward
    smaller r). Eigenvalues are floored at ``EIGENVALUE_FLOOR`` times the
    largest before the logs.
    """
    lam = np.asarray(eigenvalues, dtype=float)
    p = lam.size
    if p < 2:
        raise ValueError(f"need at least 2 eigenvalues, got {p}")
    if not np.all(np.isfinite(lam)):
        raise ValueError("eigenvalues must be finite")
    if np.any(np.diff(lam) > 0):
        raise ValueError("eigenvalues must be sorted descending")
    if not 0 <= n_max < p:
        raise ValueError(f"n_max must lie in [0, p-1]=[0, {p - 1}], got {n_max}")
    if num_snapshots < 2:
        raise ValueError(f"need at least 2 snapshots, got {num_snapshots}")
    if lam[0] <= 0:
        # Degenerate all-zero spectrum: every tail is flat, the penalty term
        # alone decides and is minimized at r = 0.
        return 0
    lam = np.maximum(lam, EIGENVALUE_FLOOR * lam[0])

    log_m = log(num_snapshots)
    best_crit = np.inf
    best_r = 0
    for r in range(n_max + 1):
        tail = lam[r:]
        data_term = -num_snapshots * (p - r) * (
            np.mean(np.log(tail)) - log(np.mean(tail))
        )
        crit = data_term + 0.5 * r * (2 * p - r) * log_m
        if crit < best_crit:
            best_crit = crit
            best_r = r
    return best_r


def music_pseudospectrum(
    split: EigenSplit, n_hat: int, pattern: CosetPattern
) -> np.ndarray:
    """Inverse squared projection of every channel's steering vector onto the
    noise subspace (the eigenvectors beyond the first ``n_hat``).

    Channels whose steering vector is orthogonal to the noise subspace peak;
    the denominator is floored at ``PSEUDOSPECTRUM_FLOOR`` so exact
    orthogonality yields a large finite ceiling instead of dividing by zero.
    """
    if not 0 <= n_hat < split.p:
        raise ValueError(
            f"n_hat must leave a nonempty noise subspace, got n_hat={n_hat} with p={split.p}"
        )
    noise_basis = split.eigenvectors[:, n_hat:]
    a_all = steering_vectors(pattern, range(pattern.L))
    projections = a_all.conj().T @ noise_basis
    denom = np.sum(np.abs(projections) ** 2, axis=1)
    return 1.0 / np.maximum(denom, PSEUDOSPECTRUM_FLOOR)


def recover_active_set(pseudospectrum, n_hat: int) -> tuple[int, ...]:
    """Indices of the n_hat largest pseudospectrum values, sorted ascending.

    Ties are broken toward the smaller channel index.
    """
    values = np.asarray(pseudospectrum, dtype=float)
    if n_hat > values.size:
        raise ValueError(f"n_hat={n_hat} exceeds {values.size} channels")
    if n_hat == 0:
        return ()
    top = np.argsort(-values, kind="stable")[:n_hat]
    return tuple(int(k) for k in np.sort(top))


def detect(
    est: CorrelationEstimate, pattern: CosetPattern, n_max: int
) -> DetectionResult:
    """Full subspace detection: eigen-split, MDL order, MUSIC recovery."""
    split = eigensplit(est)
    n_hat = mdl_order(split.eigenvalues, est.snapshots, n_max)
    pseudospectrum = music_pseudospectrum(split, n_hat, pattern)
    b_hat = recover_active_set(pseudospectrum, n_hat)
    return DetectionResult(
        n_hat=n_hat,
        pseudospectrum=pseudospectrum,
        b_hat=b_hat,
        eigenvalues=split.eigenvalues.copy(),
    )
