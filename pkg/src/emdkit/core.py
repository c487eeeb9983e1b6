"""Shared types, parameter validation and defaults for the decomposition engine.

Signals are plain 1-D float64 numpy arrays with implicit abscissas 0..N-1.
Decomposition results are (M, N) arrays whose rows are IMFs ordered from the
highest local frequency down, with the residual in the last row.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

__all__ = [
    "DecompositionError",
    "NoStoppingRule",
    "NoiseMismatch",
    "SignalTooShort",
    "NonFinite",
    "InvalidParameter",
    "DegenerateKnots",
    "DomainMismatch",
    "DecompositionParams",
    "as_signal",
    "validate_params",
    "default_num_imfs",
    "num_extracted_imfs",
]


class DecompositionError(ValueError):
    """Base class for every error raised by the decomposition engine."""


class NoStoppingRule(DecompositionError):
    """Both the S-number criterion and the sifting cap are disabled."""


class NoiseMismatch(DecompositionError):
    """ensemble_size and noise_strength disagree about whether noise is used."""


class SignalTooShort(DecompositionError):
    """The signal has fewer samples than the operation requires."""


class NonFinite(DecompositionError):
    """The input contains NaN or infinity."""


class InvalidParameter(DecompositionError):
    """A parameter field lies outside its allowed range."""


class DegenerateKnots(DecompositionError):
    """Fewer than two knots, or knot abscissas not strictly increasing."""


class DomainMismatch(DecompositionError):
    """Spline domain does not cover the requested sample range."""


@dataclass(frozen=True)
class DecompositionParams:
    """Parameter bundle shared by emd, eemd and ceemdan.

    num_imfs counts the residual row; None means "derive it from the signal
    length" (see default_num_imfs). s_number=0 disables the S-number
    stopping criterion, num_siftings=0 disables the iteration cap; at least
    one of the two must stay active. noise_strength is the standard
    deviation of the added Gaussian noise relative to the standard
    deviation of the input. rng_seed=0 seeds from OS entropy and waives
    reproducibility.
    """

    num_imfs: int | None = None
    s_number: int = 4
    num_siftings: int = 50
    ensemble_size: int = 250
    noise_strength: float = 0.2
    rng_seed: int = 0

    def resolve(self, n: int) -> "DecompositionParams":
        """Return a copy with num_imfs fixed for a length-n signal."""
        if self.num_imfs is not None:
            return self
        return replace(self, num_imfs=default_num_imfs(n))


def as_signal(x, min_len: int = 1) -> np.ndarray:
    """Coerce x to a finite 1-D float64 array of at least min_len samples."""
    arr = np.ascontiguousarray(x, dtype=np.float64)
    if arr.ndim != 1:
        raise InvalidParameter(f"signal must be 1-D, got {arr.ndim} dimensions")
    if arr.size < min_len:
        raise SignalTooShort(f"signal has {arr.size} samples, need at least {min_len}")
    if not np.isfinite(arr).all():
        raise NonFinite("signal contains NaN or infinity")
    return arr


def validate_params(params: DecompositionParams, n: int | None = None) -> DecompositionParams:
    """Check every parameter invariant; return params unchanged if all hold.

    With n given, additionally require n >= 4 (no meaningful oscillation
    exists below 4 samples). Each violation raises the DecompositionError
    subclass naming the broken constraint.
    """
    if params.num_imfs is not None and params.num_imfs < 2:
        raise InvalidParameter(f"num_imfs must be >= 2 (residual included), got {params.num_imfs}")
    if params.s_number < 0:
        raise InvalidParameter(f"s_number must be >= 0, got {params.s_number}")
    if params.num_siftings < 0:
        raise InvalidParameter(f"num_siftings must be >= 0, got {params.num_siftings}")
    if params.ensemble_size < 1:
        raise InvalidParameter(f"ensemble_size must be >= 1, got {params.ensemble_size}")
    if params.noise_strength < 0:
        raise InvalidParameter(f"noise_strength must be >= 0, got {params.noise_strength}")
    if params.rng_seed < 0:
        raise InvalidParameter(f"rng_seed must be a non-negative integer, got {params.rng_seed}")
    if params.s_number == 0 and params.num_siftings == 0:
        raise NoStoppingRule("s_number and num_siftings are both 0; enable at least one stopping rule")
    if (params.ensemble_size == 1) != (params.noise_strength == 0.0):
        raise NoiseMismatch(
            f"ensemble_size={params.ensemble_size} with noise_strength={params.noise_strength}; "
            "a single member implies zero noise and vice versa"
        )
    if n is not None and n < 4:
        raise SignalTooShort(f"signal has {n} samples, decomposition needs at least 4")
    return params


def default_num_imfs(n: int) -> int:
    """Total output rows (residual included) for a length-n signal.

    max(2, floor(log2(n))): a logarithmic row count consistent with the
    dyadic filter-bank behavior of noise-assisted decompositions.
    """
    if n < 4:
        raise SignalTooShort(f"signal has {n} samples, decomposition needs at least 4")
    return max(2, int(n).bit_length() - 1)


def num_extracted_imfs(imfs: np.ndarray) -> int:
    """Count IMF rows (residual excluded) actually filled by extraction.

    Unextracted rows are all-zero, so the populated count is the number of
    IMF rows before the trailing all-zero block.
    """
    k = imfs.shape[0] - 1
    while k > 0 and not imfs[k - 1].any():
        k -= 1
    return k
