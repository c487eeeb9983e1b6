"""Spline envelopes through extrema and the local mean of a signal.

Envelopes are cubic splines with not-a-knot end conditions, i.e. the third
derivative is continuous across the second and second-to-last knots, so no
artificial zero curvature is imposed at the data ends. Two knots fall back
to a straight line and three to the unique interpolating parabola.

Fitting folds the two not-a-knot conditions into a pure tridiagonal system
in the interior second derivatives and solves it in linear time. This is
the performance-critical path of the whole decomposition - every sifting
iteration fits and samples two envelopes - so the numerics live in
compiled kernels shared with the fused sifting step.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import eval_spline_at, eval_spline_grid, local_mean_kernel, spline_coeffs
from .core import DegenerateKnots, DomainMismatch, NonFinite, as_signal

__all__ = ["CubicSplineEnvelope", "fit_envelope", "evaluate_envelope", "local_mean"]


@dataclass(frozen=True)
class CubicSplineEnvelope:
    """Piecewise polynomial interpolant through strictly increasing knots.

    coeffs[j, i] is the coefficient of dx**j on interval i, where
    dx = t - knots_x[i]. The degree is 1 for two knots, 2 for three and 3
    (not-a-knot cubic) for four or more.
    """

    knots_x: np.ndarray
    knots_y: np.ndarray
    coeffs: np.ndarray

    @property
    def degree(self) -> int:
        k = self.knots_x.size
        return 1 if k == 2 else 2 if k == 3 else 3

    def __call__(self, t) -> np.ndarray:
        """Evaluate at arbitrary abscissas (no domain clamping)."""
        tt = np.ascontiguousarray(t, dtype=np.float64)
        return eval_spline_at(self.knots_x, self.knots_y, self.coeffs, np.atleast_1d(tt))


def fit_envelope(knots_x, knots_y) -> CubicSplineEnvelope:
    """Interpolate the knots with the degree-appropriate envelope spline."""
    xs = np.ascontiguousarray(knots_x, dtype=np.float64)
    ys = np.ascontiguousarray(knots_y, dtype=np.float64)
    if xs.ndim != 1 or ys.shape != xs.shape:
        raise DegenerateKnots("knot abscissas and ordinates must be 1-D and of equal length")
    if xs.size < 2:
        raise DegenerateKnots(f"need at least 2 knots, got {xs.size}")
    if not (np.isfinite(xs).all() and np.isfinite(ys).all()):
        raise NonFinite("knots contain NaN or infinity")
    if (np.diff(xs) <= 0.0).any():
        raise DegenerateKnots("knot abscissas must be strictly increasing")
    return CubicSplineEnvelope(xs, ys, spline_coeffs(xs, ys))


def evaluate_envelope(spline: CubicSplineEnvelope, n: int) -> np.ndarray:
    """Sample the spline at abscissas 0, 1, ..., n-1."""
    if spline.knots_x[0] > 0.0 or spline.knots_x[-1] < n - 1:
        raise DomainMismatch(
            f"spline domain [{spline.knots_x[0]}, {spline.knots_x[-1]}] "
            f"does not cover [0, {n - 1}]"
        )
    return eval_spline_grid(spline.knots_x, spline.knots_y, spline.coeffs, n)


def local_mean(signal):
    """Pointwise average of the upper and lower envelopes.

    Returns (mean, num_maxima, num_minima, num_zero_crossings) with the
    counts taken on the interior extrema, before end extension. When the
    signal has no interior extrema at all there is nothing to sift and the
    signal is returned as its own mean.
    """
    x = as_signal(signal, min_len=4)
    mean, n_max, n_min, zc = local_mean_kernel(x)
    return mean, int(n_max), int(n_min), int(zc)
