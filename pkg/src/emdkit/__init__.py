"""Empirical mode decomposition for 1-D uniformly sampled time series.

Decomposes a signal into intrinsic mode functions (IMFs) and a residual
trend using plain EMD, the noise-assisted ensemble variant EEMD, or the
complete ensemble variant CEEMDAN. Results are (M, N) float arrays whose
rows hold the IMFs from the highest local frequency down, residual last.

    import numpy as np
    import emdkit

    x = np.sin(2 * np.pi * np.arange(512) / 8) + np.sin(2 * np.pi * np.arange(512) / 64)
    imfs = emdkit.ceemdan(x, rng_seed=42)
"""

from __future__ import annotations

import numpy as np

from . import ensemble as _ensemble
from . import sifter as _sifter
from .core import (DecompositionError, DecompositionParams, DegenerateKnots,
                   DomainMismatch, InvalidParameter, NoiseMismatch, NonFinite,
                   NoStoppingRule, SignalTooShort, as_signal, default_num_imfs,
                   num_extracted_imfs, validate_params)
from .envelope import (CubicSplineEnvelope, evaluate_envelope, fit_envelope,
                       local_mean)
from .ensemble import NoiseStream, generate_noise
from .extrema import (ExtremaSet, count_zero_crossings, extend_extrema,
                      find_extrema)
from .sifter import SiftState, extract_imf, sift_once

__version__ = "0.1.0"

__all__ = [
    "emd", "eemd", "ceemdan",
    "DecompositionParams", "default_num_imfs", "validate_params",
    "num_extracted_imfs", "as_signal",
    "DecompositionError", "NoStoppingRule", "NoiseMismatch", "SignalTooShort",
    "NonFinite", "InvalidParameter", "DegenerateKnots", "DomainMismatch",
    "ExtremaSet", "find_extrema", "count_zero_crossings", "extend_extrema",
    "CubicSplineEnvelope", "fit_envelope", "evaluate_envelope", "local_mean",
    "SiftState", "sift_once", "extract_imf",
    "NoiseStream", "generate_noise",
]


def emd(x, *, num_imfs: int | None = None, s_number: int = 4,
        num_siftings: int = 50) -> np.ndarray:
    """Plain empirical mode decomposition of x; see sifter.emd."""
    params = DecompositionParams(num_imfs=num_imfs, s_number=s_number,
                                 num_siftings=num_siftings,
                                 ensemble_size=1, noise_strength=0.0)
    return _sifter.emd(x, params)


def eemd(x, *, num_imfs: int | None = None, s_number: int = 4,
         num_siftings: int = 50, ensemble_size: int = 250,
         noise_strength: float = 0.2, rng_seed: int = 0,
         workers: int | None = None) -> np.ndarray:
    """Ensemble EMD of x; see ensemble.eemd."""
    params = DecompositionParams(num_imfs=num_imfs, s_number=s_number,
                                 num_siftings=num_siftings,
                                 ensemble_size=ensemble_size,
                                 noise_strength=noise_strength,
                                 rng_seed=rng_seed)
    return _ensemble.eemd(x, params, workers=workers)


def ceemdan(x, *, num_imfs: int | None = None, s_number: int = 4,
            num_siftings: int = 50, ensemble_size: int = 250,
            noise_strength: float = 0.2, rng_seed: int = 0,
            workers: int | None = None) -> np.ndarray:
    """Complete ensemble EMD with adaptive noise of x; see ensemble.ceemdan."""
    params = DecompositionParams(num_imfs=num_imfs, s_number=s_number,
                                 num_siftings=num_siftings,
                                 ensemble_size=ensemble_size,
                                 noise_strength=noise_strength,
                                 rng_seed=rng_seed)
    return _ensemble.ceemdan(x, params, workers=workers)
