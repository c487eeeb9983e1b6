"""Interior extrema with flat-run centering, zero crossings, end extension.

A run of exactly equal samples never yields both a maximum and a minimum:
a flat stretch bounded by a rising slope before and a falling slope after
is a single maximum at the center of the run (and symmetrically for
minima). Flat runs touching either end of the signal yield nothing.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import extend_one_side_list, scan_extrema, zero_crossings
from .core import as_signal

__all__ = ["ExtremaSet", "find_extrema", "count_zero_crossings", "extend_extrema"]


@dataclass(frozen=True)
class ExtremaSet:
    """Maxima and minima as parallel (abscissa, ordinate) arrays.

    Abscissas are real-valued and strictly increasing within each list; the
    center of an even-length flat run falls between samples (e.g. 1.5).
    """

    max_pos: np.ndarray
    max_val: np.ndarray
    min_pos: np.ndarray
    min_val: np.ndarray

    @property
    def num_extrema(self) -> int:
        return self.max_pos.size + self.min_pos.size


def find_extrema(signal) -> ExtremaSet:
    """Locate interior extrema of the signal.

    A sample is a maximum iff the slope before it is strictly positive and
    the slope after strictly negative; a flat run bounded by such slopes is
    one maximum at the run's center with the run's value. Minima mirror.
    Endpoints are never extrema. Monotone signals return empty lists.
    """
    x = as_signal(signal, min_len=2)
    return ExtremaSet(*scan_extrema(x))


def _find_extrema(x: np.ndarray) -> ExtremaSet:
    return ExtremaSet(*scan_extrema(x))


def count_zero_crossings(signal) -> int:
    """Count sign changes between consecutive samples.

    A run of exactly-zero samples bounded by strictly opposite signs counts
    as one crossing; bounded by equal signs, as none. Leading and trailing
    zero runs never count.
    """
    x = as_signal(signal)
    return int(zero_crossings(x))


def extend_extrema(extrema: ExtremaSet, signal) -> ExtremaSet:
    """Append artificial end extrema at abscissas 0 and N-1.

    With two or more entries in a list, each end value is the line through
    the nearest two entries evaluated at the boundary abscissa, replaced by
    the boundary sample whenever the extrapolation is less extremal than
    that sample. With fewer than two entries the boundary samples are used
    directly. A side already holding an extremum at the boundary abscissa
    is left untouched.
    """
    x = as_signal(signal, min_len=2)
    mxp = np.ascontiguousarray(extrema.max_pos, dtype=np.float64)
    mxv = np.ascontiguousarray(extrema.max_val, dtype=np.float64)
    mnp = np.ascontiguousarray(extrema.min_pos, dtype=np.float64)
    mnv = np.ascontiguousarray(extrema.min_val, dtype=np.float64)
    max_pos, max_val = extend_one_side_list(mxp, mxv, x, True)
    min_pos, min_val = extend_one_side_list(mnp, mnv, x, False)
    return ExtremaSet(max_pos, max_val, min_pos, min_val)
