"""Compiled numerical kernels shared by the extrema, envelope and sifter paths.

Every public operation and the fused sifting loop funnel through these
routines, so the composed pipeline (find extrema, extend, fit, evaluate,
average) and the fused local-mean kernel produce bit-identical results.

The not-a-knot tridiagonal system is strictly diagonally dominant (interior
rows carry 2(h_i + h_{i+1}) on the diagonal against h_i + h_{i+1} off it,
and the folded end rows dominate as well), so the Thomas sweep needs no
pivoting.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def scan_extrema(x):
    """Interior extrema with flat runs centered; returns (maxp, maxv, minp, minv)."""
    n = x.size
    cap = n // 2 + 2
    maxp = np.empty(cap)
    maxv = np.empty(cap)
    minp = np.empty(cap)
    minv = np.empty(cap)
    nmax = 0
    nmin = 0
    prev_i = -1
    prev_up = False
    for i in range(n - 1):
        d = x[i + 1] - x[i]
        if d == 0.0:
            continue
        up = d > 0.0
        if prev_i >= 0:
            # the candidate run spans the equal samples prev_i+1 .. i
            if prev_up and not up:
                maxp[nmax] = 0.5 * (prev_i + 1 + i)
                maxv[nmax] = x[prev_i + 1]
                nmax += 1
            elif up and not prev_up:
                minp[nmin] = 0.5 * (prev_i + 1 + i)
                minv[nmin] = x[prev_i + 1]
                nmin += 1
        prev_i = i
        prev_up = up
    return maxp[:nmax].copy(), maxv[:nmax].copy(), minp[:nmin].copy(), minv[:nmin].copy()


@njit(cache=True)
def zero_crossings(x):
    """Sign changes; a zero run between opposite signs is one crossing."""
    count = 0
    prev = 0.0
    for i in range(x.size):
        v = x[i]
        if v > 0.0:
            s = 1.0
        elif v < 0.0:
            s = -1.0
        else:
            continue
        if prev != 0.0 and s != prev:
            count += 1
        prev = s
    return count


@njit(cache=True)
def extend_one_side_list(pos, val, x, is_max):
    """Artificial end extrema at abscissas 0 and N-1 for one extrema list."""
    n = x.size
    last = float(n - 1)
    m = pos.size
    if m < 2:
        left_v = x[0]
        right_v = x[n - 1]
    else:
        left_v = val[0] - pos[0] * (val[1] - val[0]) / (pos[1] - pos[0])
        right_v = val[m - 2] + (last - pos[m - 2]) * (val[m - 1] - val[m - 2]) / (pos[m - 1] - pos[m - 2])
        if is_max:
            if left_v < x[0]:
                left_v = x[0]
            if right_v < x[n - 1]:
                right_v = x[n - 1]
        else:
            if left_v > x[0]:
                left_v = x[0]
            if right_v > x[n - 1]:
                right_v = x[n - 1]
    add_l = m == 0 or pos[0] > 0.0
    add_r = m == 0 or pos[m - 1] < last
    total = m + (1 if add_l else 0) + (1 if add_r else 0)
    npos = np.empty(total)
    nval = np.empty(total)
    off = 0
    if add_l:
        npos[0] = 0.0
        nval[0] = left_v
        off = 1
    for i in range(m):
        npos[off + i] = pos[i]
        nval[off + i] = val[i]
    if add_r:
        npos[total - 1] = last
        nval[total - 1] = right_v
    return npos, nval


@njit(cache=True)
def spline_coeffs(xs, ys):
    """Per-interval polynomial coefficients of the envelope interpolant.

    coeffs[j, i] multiplies dx**j on interval i, dx = t - xs[i]. Two knots
    give the straight line, three the unique parabola, four or more the
    not-a-knot cubic spline.
    """
    k = xs.size
    coeffs = np.zeros((4, k - 1))
    if k == 2:
        coeffs[0, 0] = ys[0]
        coeffs[1, 0] = (ys[1] - ys[0]) / (xs[1] - xs[0])
        return coeffs
    if k == 3:
        h0 = xs[1] - xs[0]
        h1 = xs[2] - xs[1]
        f01 = (ys[1] - ys[0]) / h0
        f12 = (ys[2] - ys[1]) / h1
        f012 = (f12 - f01) / (h0 + h1)
        coeffs[0, 0] = ys[0]
        coeffs[0, 1] = ys[1]
        coeffs[1, 0] = f01 + f012 * (xs[0] - xs[1])
        coeffs[1, 1] = f01 + f012 * (xs[1] - xs[0])
        coeffs[2, 0] = f012
        coeffs[2, 1] = f012
        return coeffs

    nn = k - 2
    h = np.empty(k - 1)
    delta = np.empty(k - 1)
    for i in range(k - 1):
        h[i] = xs[i + 1] - xs[i]
        delta[i] = (ys[i + 1] - ys[i]) / h[i]
    dmain = np.empty(nn)
    rhs = np.empty(nn)
    du = np.empty(nn - 1)
    dl = np.empty(nn - 1)
    for i in range(nn):
        dmain[i] = 2.0 * (h[i] + h[i + 1])
        rhs[i] = 6.0 * (delta[i + 1] - delta[i])
    for i in range(nn - 1):
        du[i] = h[i + 1]
        dl[i] = h[i + 1]
    # fold the end second derivatives out through the not-a-knot relations
    a = h[0] / h[1]
    dmain[0] = 3.0 * h[0] + 2.0 * h[1] + h[0] * a
    du[0] = h[1] - h[0] * a
    b = h[k - 2] / h[k - 3]
    dmain[nn - 1] = 3.0 * h[k - 2] + 2.0 * h[k - 3] + h[k - 2] * b
    dl[nn - 2] = h[k - 3] - h[k - 2] * b
    # Thomas sweep
    for i in range(1, nn):
        w = dl[i - 1] / dmain[i - 1]
        dmain[i] -= w * du[i - 1]
        rhs[i] -= w * rhs[i - 1]
    inner = np.empty(nn)
    inner[nn - 1] = rhs[nn - 1] / dmain[nn - 1]
    for i in range(nn - 2, -1, -1):
        inner[i] = (rhs[i] - du[i] * inner[i + 1]) / dmain[i]
    sig_first = (1.0 + a) * inner[0] - a * inner[1]
    sig_last = (1.0 + b) * inner[nn - 1] - b * inner[nn - 2]
    for i in range(k - 1):
        si = sig_first if i == 0 else inner[i - 1]
        si1 = sig_last if i == k - 2 else inner[i]
        coeffs[0, i] = ys[i]
        coeffs[1, i] = delta[i] - h[i] * (2.0 * si + si1) / 6.0
        coeffs[2, i] = 0.5 * si
        coeffs[3, i] = (si1 - si) / (6.0 * h[i])
    return coeffs


@njit(cache=True)
def eval_spline_grid(knots_x, knots_y, coeffs, n):
    """Evaluate the piecewise polynomial at integer abscissas 0..n-1.

    A knot abscissa belongs to the interval on its right; the last knot to
    its left interval. Landing exactly on the last knot returns its
    ordinate: interpolation is exact there by definition, and the sifted
    boundary samples must cancel to exactly zero when the end extension
    clamped to them (their sign would otherwise be roundoff noise).
    """
    out = np.empty(n)
    k = knots_x.size
    last = knots_x[k - 1]
    j = 0
    for t in range(n):
        tt = float(t)
        if tt == last:
            out[t] = knots_y[k - 1]
            continue
        while j < k - 2 and tt >= knots_x[j + 1]:
            j += 1
        dx = tt - knots_x[j]
        out[t] = ((coeffs[3, j] * dx + coeffs[2, j]) * dx + coeffs[1, j]) * dx + coeffs[0, j]
    return out


@njit(cache=True)
def eval_spline_at(knots_x, knots_y, coeffs, t):
    """Evaluate at arbitrary abscissas inside the domain.

    Same interval convention and last-knot exactness as eval_spline_grid.
    """
    out = np.empty(t.size)
    k = knots_x.size
    last = knots_x[k - 1]
    for i in range(t.size):
        ti = t[i]
        if ti == last:
            out[i] = knots_y[k - 1]
            continue
        lo = 0
        hi = k - 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if knots_x[mid] <= ti:
                lo = mid
            else:
                hi = mid
        dx = ti - knots_x[lo]
        out[i] = ((coeffs[3, lo] * dx + coeffs[2, lo]) * dx + coeffs[1, lo]) * dx + coeffs[0, lo]
    return out


@njit(cache=True)
def local_mean_kernel(x):
    """Fused sifting step: envelope mean plus the structural counts.

    Returns (mean, num_maxima, num_minima, num_zero_crossings); with no
    interior extrema the signal is its own mean.
    """
    maxp, maxv, minp, minv = scan_extrema(x)
    zc = zero_crossings(x)
    n_max = maxp.size
    n_min = minp.size
    n = x.size
    if n_max == 0 and n_min == 0:
        return x.copy(), n_max, n_min, zc
    hx, hy = extend_one_side_list(maxp, maxv, x, True)
    lx, ly = extend_one_side_list(minp, minv, x, False)
    upper = eval_spline_grid(hx, hy, spline_coeffs(hx, hy), n)
    lower = eval_spline_grid(lx, ly, spline_coeffs(lx, ly), n)
    mean = np.empty(n)
    for i in range(n):
        mean[i] = 0.5 * (upper[i] + lower[i])
    return mean, n_max, n_min, zc


def warmup() -> None:
    """Force JIT compilation of every kernel (tiny inputs, cached build)."""
    x = np.array([0.0, 2.0, 1.0, 3.0, 0.0, 1.5, -1.0, 0.5])
    local_mean_kernel(x)
    xs = np.array([0.0, 1.0, 3.0, 4.5, 7.0])
    ys = np.array([1.0, -1.0, 2.0, 0.0, 1.0])
    eval_spline_at(xs, ys, spline_coeffs(xs, ys), np.array([0.5, 2.0, 6.0]))
    spline_coeffs(xs[:2], ys[:2])
    spline_coeffs(xs[:3], ys[:3])
