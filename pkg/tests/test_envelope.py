import numpy as np
import pytest

from emdkit import (DegenerateKnots, DomainMismatch, evaluate_envelope,
                    fit_envelope, local_mean)

from oracles import oracle_spline_coeffs, oracle_spline_eval


def _random_knots(rng, k):
    gaps = rng.uniform(0.2, 2.0, size=k - 1)
    xs = np.concatenate(([0.0], np.cumsum(gaps)))
    ys = rng.standard_normal(k)
    return xs, ys


def test_two_knots_linear():
    s = fit_envelope([0, 3], [0, 3])
    assert s.degree == 1
    assert s(np.array([1.0]))[0] == pytest.approx(1.0, abs=1e-15)
    np.testing.assert_allclose(evaluate_envelope(s, 4), [0, 1, 2, 3], atol=1e-15)


def test_three_knots_unique_quadratic():
    s = fit_envelope([0, 1, 2], [0, 1, 0])
    assert s.degree == 2
    # the unique parabola is 1 - (x - 1)^2
    assert s(np.array([0.5]))[0] == pytest.approx(0.75, abs=1e-14)
    np.testing.assert_allclose(evaluate_envelope(s, 3), [0, 1, 0], atol=1e-14)


def test_cubic_reproduces_linear_data():
    s = fit_envelope([0, 1, 2, 3], [0, 2, 4, 6])
    assert s.degree == 3
    np.testing.assert_allclose(evaluate_envelope(s, 4), [0, 2, 4, 6], atol=1e-13)
    grid = np.linspace(0, 3, 31)
    np.testing.assert_allclose(s(grid), 2 * grid, atol=1e-13)


def test_five_random_knots_match_dense_oracle():
    rng = np.random.default_rng(2024)
    xs, ys = _random_knots(rng, 5)
    grid = np.linspace(xs[0], xs[-1], 211)
    dense = oracle_spline_eval(xs, oracle_spline_coeffs(xs, ys), grid)
    np.testing.assert_allclose(fit_envelope(xs, ys)(grid), dense, atol=1e-8)


def test_random_cubic_splines_match_dense_oracle():
    rng = np.random.default_rng(5)
    for _ in range(100):
        k = int(rng.integers(4, 21))
        xs, ys = _random_knots(rng, k)
        grid = np.linspace(xs[0], xs[-1], 157)
        dense = oracle_spline_eval(xs, oracle_spline_coeffs(xs, ys), grid)
        assert np.abs(fit_envelope(xs, ys)(grid) - dense).max() <= 1e-8


def test_knot_interpolation_exactness():
    rng = np.random.default_rng(6)
    for _ in range(1000):
        k = int(rng.integers(2, 25))
        xs, ys = _random_knots(rng, k)
        vals = fit_envelope(xs, ys)(xs)
        assert (np.abs(vals - ys) <= 1e-10 * (1.0 + np.abs(ys))).all()


def test_second_derivative_continuity():
    # one-sided finite differences across each interior knot; the one-sided
    # 3-point stencil has truncation error ~ eps * |s'''|, so bound with the
    # third-derivative magnitudes known from the coefficients
    rng = np.random.default_rng(8)
    eps = 1e-5
    for _ in range(50):
        k = int(rng.integers(4, 15))
        xs, ys = _random_knots(rng, k)
        s = fit_envelope(xs, ys)
        h = np.diff(xs)
        for j in range(1, k - 1):
            t = xs[j]
            left = (s([t]) - 2 * s([t - eps]) + s([t - 2 * eps]))[0] / eps**2
            right = (s([t + 2 * eps]) - 2 * s([t + eps]) + s([t]))[0] / eps**2
            s3 = 6.0 * (abs(s.coeffs[3, j - 1]) + abs(s.coeffs[3, j]))
            tol = 3.0 * eps * s3 + 1e-13 / eps**2 + 1e-9
            assert abs(left - right) <= tol
            # the knot second derivatives themselves match exactly
            from_left = 2 * s.coeffs[2, j - 1] + 6 * s.coeffs[3, j - 1] * h[j - 1]
            from_right = 2 * s.coeffs[2, j]
            assert abs(from_left - from_right) <= 1e-9 * max(1.0, abs(from_right))


def test_reproduces_cubic_polynomials():
    # stronger than natural splines, which flatten curvature at the ends
    rng = np.random.default_rng(9)
    for _ in range(50):
        k = int(rng.integers(4, 15))
        xs, _ = _random_knots(rng, k)
        a, b, c, d = rng.standard_normal(4)
        poly = lambda t: ((a * t + b) * t + c) * t + d
        s = fit_envelope(xs, poly(xs))
        grid = np.linspace(xs[0], xs[-1], 101)
        expected = poly(grid)
        scale = np.abs(expected).max() + 1.0
        assert np.abs(s(grid) - expected).max() <= 1e-9 * scale


def test_degenerate_knots_rejected():
    with pytest.raises(DegenerateKnots):
        fit_envelope([0.0], [1.0])
    with pytest.raises(DegenerateKnots):
        fit_envelope([0.0, 0.0, 1.0], [1.0, 2.0, 3.0])
    with pytest.raises(DegenerateKnots):
        fit_envelope([2.0, 1.0], [1.0, 2.0])


def test_domain_mismatch():
    s = fit_envelope([0.0, 2.0], [0.0, 1.0])
    with pytest.raises(DomainMismatch):
        evaluate_envelope(s, 4)
    s = fit_envelope([1.0, 5.0], [0.0, 1.0])
    with pytest.raises(DomainMismatch):
        evaluate_envelope(s, 4)


def test_local_mean_constant_signal():
    mean, nmx, nmn, zc = local_mean(np.full(8, 5.0))
    np.testing.assert_array_equal(mean, np.full(8, 5.0))
    assert (nmx, nmn, zc) == (0, 0, 0)


def test_local_mean_oscillation_frozen_oracle():
    # dense-oracle composition gives an exactly zero mean for this signal:
    # both envelopes are constant (+-1) after clamped end extension
    x = np.array([0, 1, 0, -1, 0, 1, 0, -1, 0], dtype=float)
    mean, nmx, nmn, zc = local_mean(x)
    assert (nmx, nmn, zc) == (2, 2, 3)
    assert np.abs(mean).max() <= 1e-12
    assert np.abs(mean[1:-1]).max() <= 0.25


def test_local_mean_envelopes_touch_extrema():
    from emdkit import extend_extrema, find_extrema
    rng = np.random.default_rng(10)
    for _ in range(50):
        x = rng.standard_normal(int(rng.integers(16, 200)))
        ext = find_extrema(x)
        if ext.num_extrema == 0:
            continue
        extended = extend_extrema(ext, x)
        upper = fit_envelope(extended.max_pos, extended.max_val)
        lower = fit_envelope(extended.min_pos, extended.min_val)
        # interpolation makes the envelope exact at each interior extremum
        np.testing.assert_allclose(upper(ext.max_pos), ext.max_val, atol=1e-10)
        np.testing.assert_allclose(lower(ext.min_pos), ext.min_val, atol=1e-10)


def test_local_mean_affine_equivariance():
    rng = np.random.default_rng(11)
    x = rng.standard_normal(128)
    mean, nmx, nmn, zc = local_mean(x)
    for a, b in [(2.5, 0.0), (0.01, 3.0), (1000.0, -7.0)]:
        m2, nmx2, nmn2, _ = local_mean(a * x + b)
        assert (nmx2, nmn2) == (nmx, nmn)
        scale = a * (np.abs(mean).max() + 1.0) + abs(b)
        assert np.abs(m2 - (a * mean + b)).max() <= 1e-9 * scale


def test_local_mean_scales_exactly():
    rng = np.random.default_rng(12)
    x = rng.standard_normal(100)
    mean, *_ = local_mean(x)
    for c in (2.0, 8.0):  # powers of two scale bitwise
        m2, *_ = local_mean(c * x)
        np.testing.assert_array_equal(m2, c * mean)


def test_local_mean_single_extremum_degrades_gracefully():
    # one maximum and no minima: the lower envelope falls back to the line
    # between the boundary samples and sifting can proceed
    x = np.array([0, 1, 4, 9, 4, 1, 0], dtype=float)
    mean, nmx, nmn, zc = local_mean(x)
    assert (nmx, nmn) == (1, 0)
    assert np.isfinite(mean).all()
    assert mean[3] == pytest.approx(4.5)  # (quadratic upper + zero line) / 2
