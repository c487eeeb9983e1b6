"""Seeded noise streams, ensemble EMD, and the complete adaptive-noise variant.

Ensemble members are embarrassingly parallel: every member's noise is drawn
from its own generator derived solely from (base_seed, member_index), all
member inputs are built up front in the caller's process, and member
results are always combined in ascending member order. The output is
therefore bit-identical for any worker count, including the single-worker
fallback that runs members in-process.

EEMD averages whole member decompositions, so the added noise only cancels
statistically and reconstruction is approximate. CEEMDAN swaps the order:
it averages member-wise first IMFs stage by stage, subtracting each
averaged row from the running residual, so the rows sum to the input up to
floating-point roundoff. The stage-k perturbation is the k-th EMD mode of
the member's own noise realization, rescaled to unit standard deviation
and multiplied by noise_strength times the current residual's standard
deviation, keeping the per-stage signal-to-noise ratio constant.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

import numpy as np

from .core import DecompositionParams, as_signal, validate_params
from .extrema import _find_extrema
from .sifter import _emd_rows, _sift_to_imf

__all__ = ["NoiseStream", "generate_noise", "eemd", "ceemdan"]


@dataclass(frozen=True)
class NoiseStream:
    """One ensemble member's reproducible white-noise source.

    Identical (base_seed, member_index) pairs replay the same sample
    sequence; distinct member indices give statistically independent
    streams. base_seed 0 seeds from OS entropy and waives reproducibility.
    """

    base_seed: int
    member_index: int

    def generator(self) -> np.random.Generator:
        if self.base_seed == 0:
            return np.random.default_rng()
        key = np.random.SeedSequence(entropy=self.base_seed,
                                     spawn_key=(self.member_index,))
        return np.random.default_rng(key)


def generate_noise(stream: NoiseStream, n: int) -> np.ndarray:
    """Draw n independent standard-normal samples from the member's stream."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return stream.generator().standard_normal(n)


def _resolve_workers(workers: int | None) -> int:
    if workers is None or workers <= 0:
        return os.cpu_count() or 1
    return workers


def _map_members(func, items, workers: int):
    """Map func over member inputs, results in member order."""
    if workers == 1 or len(items) == 1:
        return [func(it) for it in items]
    chunk = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items, chunksize=chunk))


def _member_rows(y: np.ndarray, params: DecompositionParams) -> np.ndarray:
    return _emd_rows(y, params)


def _member_first_imf(y: np.ndarray, params: DecompositionParams) -> np.ndarray:
    if _find_extrema(y).num_extrema < 2:
        return np.zeros(y.size)
    imf, _ = _sift_to_imf(y, params)
    return imf


def eemd(signal, params: DecompositionParams, workers: int | None = None) -> np.ndarray:
    """Ensemble EMD: average the EMDs of noise-perturbed copies of the input.

    Each member decomposes input + noise_strength * sigma * w_e with the
    same row count and stopping rules; corresponding rows are averaged over
    the ensemble. With ensemble_size=1 and zero noise this is exactly plain
    EMD. workers <= 0 or None uses the available hardware parallelism.
    """
    x = as_signal(signal, min_len=4)
    p = validate_params(params, x.size).resolve(x.size)
    sigma = float(np.std(x))
    if p.noise_strength == 0.0 or sigma == 0.0:
        return _emd_rows(x, p)
    nworkers = _resolve_workers(workers)
    xn = x / sigma
    members = [xn + p.noise_strength * generate_noise(NoiseStream(p.rng_seed, e), x.size)
               for e in range(p.ensemble_size)]
    acc = np.zeros((p.num_imfs, x.size))
    for rows in _map_members(partial(_member_rows, params=p), members, nworkers):
        acc += rows
    acc /= p.ensemble_size
    acc *= sigma
    return acc


def ceemdan(signal, params: DecompositionParams, workers: int | None = None) -> np.ndarray:
    """Complete ensemble EMD with adaptive noise.

    Stage 1 averages the members' first IMFs of input + noise; every later
    stage perturbs the current residual with the members' matching noise
    mode (precomputed by decomposing each noise realization once) and
    averages the first IMFs again. Each row is subtracted from the residual
    before the next stage, so the rows always sum back to the input up to
    numerical precision. Stages end after num_imfs - 1 rows or once the
    residual has fewer than two interior extrema.
    """
    x = as_signal(signal, min_len=4)
    p = validate_params(params, x.size).resolve(x.size)
    sigma = float(np.std(x))
    if p.noise_strength == 0.0 or sigma == 0.0:
        return _emd_rows(x, p)
    nworkers = _resolve_workers(workers)
    n = x.size
    m = p.num_imfs
    ensemble = p.ensemble_size
    xn = x / sigma
    noises = [generate_noise(NoiseStream(p.rng_seed, e), n) for e in range(ensemble)]
    # EMD modes of every noise realization, feeding the stage perturbations
    noise_modes = _map_members(partial(_member_rows, params=p), noises, nworkers)

    rows = np.zeros((m, n))
    residual = xn.copy()
    first_imf = partial(_member_first_imf, params=p)
    for k in range(m - 1):
        if _find_extrema(residual).num_extrema < 2:
            break
        if k == 0:
            batch = [xn + p.noise_strength * w for w in noises]
        else:
            amp = p.noise_strength * float(np.std(residual))
            batch = []
            for e in range(ensemble):
                mode = noise_modes[e][k - 1]
                mode_std = float(np.std(mode))
                if mode_std == 0.0:
                    batch.append(residual)
                else:
                    batch.append(residual + (amp / mode_std) * mode)
        row = np.zeros(n)
        for imf in _map_members(first_imf, batch, nworkers):
            row += imf
        row /= ensemble
        rows[k] = row
        residual = residual - row
    rows[m - 1] = residual
    rows *= sigma
    return rows
