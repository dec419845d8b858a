"""Sub-Nyquist wideband spectrum sensing.

A multicoset sampler keeps p of every L Nyquist-grid samples; a
fractional-shift filter chain aligns the coset sequences so their sample
correlation matrix obeys a steering-matrix model; MDL order selection and a
MUSIC-style pseudospectrum then recover which channels are occupied, all at
a fraction p/L of the Nyquist rate.
"""

from .corr import (
    CorrelationEstimate,
    ModulationMatrix,
    analytic_correlation,
    build_modulation_matrix,
    sample_correlation,
    steering_vectors,
)
from .experiment import (
    ExperimentConfig,
    GridCellMetrics,
    TrialOutcome,
    aggregate,
    run_grid,
    run_trial,
    trial_pipeline,
    write_grid_csv,
    write_trial_log,
)
from .multicoset import CosetPattern, CosetSequences, random_pattern, sample
from .shift_chain import SnapshotMatrix, fractional_shift, ideal_filter_mask
from .signal_model import (
    MultibandSpec,
    NyquistRecord,
    channel_bins,
    generate,
    power_spectral_density,
    true_band_powers,
)
from .subspace import (
    DetectionResult,
    EigenSplit,
    detect,
    eigensplit,
    mdl_order,
    music_pseudospectrum,
    recover_active_set,
)

__all__ = [
    "CorrelationEstimate",
    "ModulationMatrix",
    "analytic_correlation",
    "build_modulation_matrix",
    "sample_correlation",
    "steering_vectors",
    "ExperimentConfig",
    "GridCellMetrics",
    "TrialOutcome",
    "aggregate",
    "run_grid",
    "run_trial",
    "trial_pipeline",
    "write_grid_csv",
    "write_trial_log",
    "CosetPattern",
    "CosetSequences",
    "random_pattern",
    "sample",
    "SnapshotMatrix",
    "fractional_shift",
    "ideal_filter_mask",
    "MultibandSpec",
    "NyquistRecord",
    "channel_bins",
    "generate",
    "power_spectral_density",
    "true_band_powers",
    "DetectionResult",
    "EigenSplit",
    "detect",
    "eigensplit",
    "mdl_order",
    "music_pseudospectrum",
    "recover_active_set",
]

__version__ = "0.1.0"
