"""The sifting iteration, its stopping rules, and the plain EMD loop.

One sifting subtracts the local mean (envelope average) from the working
signal. Sifting repeats until either a fixed iteration cap is reached or
the S-number criterion fires: the extrema and zero-crossing counts differ
by at most one and have stayed stable for S consecutive iterations, where
"stable" tolerates exactly one of the two counts moving by exactly 1 (the
counts can otherwise get stuck oscillating between two neighboring values
through floating-point jitter, stalling termination).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DecompositionParams, InvalidParameter, as_signal, validate_params
from ._kernels import local_mean_kernel
from .extrema import _find_extrema

__all__ = ["SiftState", "sift_once", "extract_imf", "emd"]


@dataclass
class SiftState:
    """Bookkeeping carried across the sifting iterations of one extraction."""

    iteration: int = 0
    stability_streak: int = 0
    prev_counts: tuple[int, int] | None = None


def sift_once(signal):
    """Subtract the local mean from the signal: one sifting pass.

    Returns (sifted, (num_extrema, num_zero_crossings)); the counts
    describe the signal as measured, i.e. before the subtraction.
    """
    x = as_signal(signal, min_len=4)
    mean, n_max, n_min, zc = local_mean_kernel(x)
    return x - mean, (int(n_max + n_min), int(zc))


def extract_imf(signal, params: DecompositionParams):
    """Sift the signal until a stopping rule fires; return the IMF."""
    x = as_signal(signal, min_len=4)
    p = validate_params(params, x.size)
    imf, _ = _sift_to_imf(x, p)
    return imf


def _sift_to_imf(x: np.ndarray, params: DecompositionParams,
                 abort_after: int | None = None):
    """Run the sifting loop on a validated signal.

    Returns (imf, state). state.prev_counts holds the counts of the last
    measured pre-subtraction signal and state.iteration the number of
    subtractions actually applied. When the S-rule fires, the working
    signal is returned as-is: the measured signal already qualified, and
    one more subtraction would only distort it. abort_after is a test
    tripwire raising instead of sifting past a known bound.
    """
    state = SiftState()
    s = params.s_number
    cap = params.num_siftings
    current = x
    while True:
        if cap > 0 and state.iteration >= cap:
            return current, state
        mean, n_max, n_min, zc = local_mean_kernel(current)
        n_ext = int(n_max + n_min)
        zc = int(zc)
        if n_ext == 0:
            state.prev_counts = (n_ext, zc)
            return current, state
        counts = (n_ext, zc)
        if s > 0:
            compliant = abs(n_ext - zc) <= 1
            prev = state.prev_counts
            if prev is None:
                stable = True
            else:
                drift = abs(counts[0] - prev[0]) + abs(counts[1] - prev[1])
                stable = drift <= 1
            state.stability_streak = state.stability_streak + 1 if (compliant and stable) else 0
            state.prev_counts = counts
            if state.stability_streak >= s:
                return current, state
        else:
            state.prev_counts = counts
        current = current - mean
        state.iteration += 1
        if abort_after is not None and state.iteration > abort_after:
            raise RuntimeError(f"sifting did not terminate within {abort_after} iterations")


def emd(signal, params: DecompositionParams) -> np.ndarray:
    """Empirical mode decomposition of a 1-D signal.

    Returns an (M, N) matrix: rows are IMFs from the highest local
    frequency down, unfilled IMF rows are all-zero, and the last row is the
    residual. Extraction ends early once the residual has fewer than two
    interior extrema (monotone or single-hump residuals support no
    envelope pair). The rows sum to the input by construction.
    """
    x = as_signal(signal, min_len=4)
    p = validate_params(params, x.size).resolve(x.size)
    if p.ensemble_size != 1 or p.noise_strength != 0.0:
        raise InvalidParameter("plain EMD runs a single noiseless pass; "
                               "set ensemble_size=1 and noise_strength=0")
    return _emd_rows(x, p)


def _emd_rows(x: np.ndarray, params: DecompositionParams) -> np.ndarray:
    """Decomposition loop on a validated signal with resolved num_imfs."""
    m = params.num_imfs
    rows = np.zeros((m, x.size))
    residual = x.copy()
    for k in range(m - 1):
        if _find_extrema(residual).num_extrema < 2:
            break
        imf, _ = _sift_to_imf(residual, params)
        rows[k] = imf
        residual = residual - imf
    rows[m - 1] = residual
    return rows
