"""Independent implementations used only as test oracles.

Nothing here imports emdkit. The spline oracle assembles the full
4*(K-1)-unknown interpolation system (two interpolation rows per interval,
C1/C2 continuity at interior knots, third-derivative continuity across the
second and second-to-last knots) and solves it densely. The composition
oracles re-derive the sifting building blocks with plain Python loops.
"""

from __future__ import annotations

import numpy as np


def dense_not_a_knot_coeffs(xs, ys) -> np.ndarray:
    """Per-interval [c0, c1, c2, c3] about each left knot, dense solve."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    k = xs.size
    assert k >= 4, "dense oracle covers the cubic case"
    m = k - 1
    A = np.zeros((4 * m, 4 * m))
    b = np.zeros(4 * m)
    row = 0
    for i in range(m):
        h = xs[i + 1] - xs[i]
        A[row, 4 * i] = 1.0
        b[row] = ys[i]
        row += 1
        A[row, 4 * i + 0] = 1.0
        A[row, 4 * i + 1] = h
        A[row, 4 * i + 2] = h * h
        A[row, 4 * i + 3] = h * h * h
        b[row] = ys[i + 1]
        row += 1
    for i in range(m - 1):
        h = xs[i + 1] - xs[i]
        A[row, 4 * i + 1] = 1.0
        A[row, 4 * i + 2] = 2.0 * h
        A[row, 4 * i + 3] = 3.0 * h * h
        A[row, 4 * (i + 1) + 1] = -1.0
        row += 1
        A[row, 4 * i + 2] = 2.0
        A[row, 4 * i + 3] = 6.0 * h
        A[row, 4 * (i + 1) + 2] = -2.0
        row += 1
    A[row, 4 * 0 + 3] = 1.0
    A[row, 4 * 1 + 3] = -1.0
    row += 1
    A[row, 4 * (m - 2) + 3] = 1.0
    A[row, 4 * (m - 1) + 3] = -1.0
    row += 1
    assert row == 4 * m
    return np.linalg.solve(A, b).reshape(m, 4)


def dense_quadratic_coeffs(xs, ys) -> np.ndarray:
    """Unique parabola through three knots, expressed per interval."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    # global quadratic a t^2 + b t + c from a Vandermonde solve
    V = np.vander(xs, 3)
    a, b, c = np.linalg.solve(V, ys)
    out = np.zeros((2, 4))
    for i in range(2):
        x0 = xs[i]
        out[i, 0] = a * x0 * x0 + b * x0 + c
        out[i, 1] = 2.0 * a * x0 + b
        out[i, 2] = a
    return out


def oracle_spline_coeffs(xs, ys) -> np.ndarray:
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.size == 2:
        out = np.zeros((1, 4))
        out[0, 0] = ys[0]
        out[0, 1] = (ys[1] - ys[0]) / (xs[1] - xs[0])
        return out
    if xs.size == 3:
        return dense_quadratic_coeffs(xs, ys)
    return dense_not_a_knot_coeffs(xs, ys)


def oracle_spline_eval(xs, coeffs, t) -> np.ndarray:
    """Evaluate the per-interval polynomials; knots belong to the right interval."""
    xs = np.asarray(xs, dtype=float)
    t = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.empty(t.size)
    for j, tj in enumerate(t):
        i = int(np.searchsorted(xs, tj, side="right")) - 1
        i = min(max(i, 0), xs.size - 2)
        dx = tj - xs[i]
        c0, c1, c2, c3 = coeffs[i]
        out[j] = c0 + dx * (c1 + dx * (c2 + dx * c3))
    return out


def oracle_find_extrema(x):
    """Flat-run-centered interior extrema via a simple scan."""
    x = np.asarray(x, dtype=float)
    maxima: list[tuple[float, float]] = []
    minima: list[tuple[float, float]] = []
    n = x.size
    i = 0
    while i < n - 1:
        if x[i + 1] == x[i]:
            i += 1
            continue
        # slope segment starting at i; find the preceding nonzero slope
        j = i - 1
        while j >= 0 and x[j + 1] == x[j]:
            j -= 1
        if j >= 0:
            before = x[j + 1] - x[j]
            after = x[i + 1] - x[i]
            pos = 0.5 * ((j + 1) + i)
            if before > 0 and after < 0:
                maxima.append((pos, x[j + 1]))
            elif before < 0 and after > 0:
                minima.append((pos, x[j + 1]))
        i += 1
    return maxima, minima


def oracle_zero_crossings(x) -> int:
    signs = [1 if v > 0 else -1 for v in np.asarray(x, dtype=float) if v != 0.0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def oracle_extend(points, x, is_max):
    """Linear end extrapolation clamped at the boundary samples."""
    x = np.asarray(x, dtype=float)
    n = x.size
    pts = list(points)
    if len(pts) < 2:
        left_v, right_v = x[0], x[-1]
    else:
        (x0, y0), (x1, y1) = pts[0], pts[1]
        left_v = y0 + (0.0 - x0) * (y1 - y0) / (x1 - x0)
        (x0, y0), (x1, y1) = pts[-2], pts[-1]
        right_v = y0 + ((n - 1) - x0) * (y1 - y0) / (x1 - x0)
        if is_max:
            left_v = max(left_v, x[0])
            right_v = max(right_v, x[-1])
        else:
            left_v = min(left_v, x[0])
            right_v = min(right_v, x[-1])
    out = list(pts)
    if not out or out[0][0] > 0.0:
        out.insert(0, (0.0, left_v))
    if out[-1][0] < n - 1:
        out.append((float(n - 1), right_v))
    return out


def oracle_local_mean(x):
    """Envelope mean composed from the oracle pieces (dense spline solve)."""
    x = np.asarray(x, dtype=float)
    maxima, minima = oracle_find_extrema(x)
    zc = oracle_zero_crossings(x)
    if not maxima and not minima:
        return x.copy(), 0, 0, zc
    up = oracle_extend(maxima, x, is_max=True)
    lo = oracle_extend(minima, x, is_max=False)
    t = np.arange(x.size, dtype=float)
    ux = np.array([p for p, _ in up])
    uy = np.array([v for _, v in up])
    lx = np.array([p for p, _ in lo])
    ly = np.array([v for _, v in lo])
    upper = oracle_spline_eval(ux, oracle_spline_coeffs(ux, uy), t)
    lower = oracle_spline_eval(lx, oracle_spline_coeffs(lx, ly), t)
    return 0.5 * (upper + lower), len(maxima), len(minima), zc


def oracle_sift_once(x):
    x = np.asarray(x, dtype=float)
    mean, nmx, nmn, zc = oracle_local_mean(x)
    return x - mean, (nmx + nmn, zc)
