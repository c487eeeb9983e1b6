"""Anatomy of one sifting step.

A signal mixing a fast and a slow oscillation is probed for its local
extrema; envelopes are drawn through the maxima and minima (clamped linear
extrapolation supplies the end knots) and their average is the signal's
"local mean". Subtracting that mean isolates the fast oscillation -- one
sifting step, the atom every decomposition here is built from.

Also shown: a peak holding three equal samples. The flat run is treated as
a single maximum at its center, so the lower envelope glides underneath
instead of spiking up to touch the flat top.

Run:  python demos/01_sifting_anatomy.py   (writes demos/output/01_sifting_anatomy.png)
"""

import pathlib

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from emdkit import extend_extrema, find_extrema, fit_envelope, local_mean, sift_once

OUT = pathlib.Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

t = np.arange(128)
signal = np.sin(2 * np.pi * t / 10) + 0.8 * np.sin(2 * np.pi * t / 55)

ext = find_extrema(signal)
extended = extend_extrema(ext, signal)
upper = fit_envelope(extended.max_pos, extended.max_val)
lower = fit_envelope(extended.min_pos, extended.min_val)
mean, n_max, n_min, n_zc = local_mean(signal)
sifted, counts = sift_once(signal)

print(f"interior extrema: {n_max} maxima, {n_min} minima; zero crossings: {n_zc}")
print(f"after one sifting the counts were measured as {counts}")

fig, axes = plt.subplots(3, 1, figsize=(9, 9), sharex=True)

ax = axes[0]
grid = np.linspace(0, len(signal) - 1, 800)
ax.plot(t, signal, "k-", lw=1, label="signal")
ax.plot(ext.max_pos, ext.max_val, "r^", ms=5, label="maxima")
ax.plot(ext.min_pos, ext.min_val, "bv", ms=5, label="minima")
ax.plot(grid, upper(grid), "r:", lw=1, label="upper envelope")
ax.plot(grid, lower(grid), "b:", lw=1, label="lower envelope")
ax.plot(t, mean, "g--", lw=1.5, label="local mean")
ax.set_title("envelopes and local mean")
ax.legend(loc="upper right", fontsize=8, ncol=3)

ax = axes[1]
ax.plot(t, sifted, "k-", lw=1)
ax.axhline(0, color="g", ls="--", lw=0.8)
ax.set_title("after one sifting: fast oscillation, local mean removed")

# flat-topped peak: one centered maximum, no phantom minimum
flat = np.sin(2 * np.pi * np.arange(32) / 16)
flat[3] = flat[4] = flat[5] = 1.0
fext = find_extrema(flat)
fmean, *_ = local_mean(flat)
ax = axes[2]
ax.plot(np.arange(32), flat, "ko-", ms=3, lw=1, label="signal with flat peak")
ax.plot(fext.max_pos, fext.max_val, "r^", ms=8, label="single centered maximum")
ax.plot(fext.min_pos, fext.min_val, "bv", ms=8, label="minima (none on the peak)")
ax.plot(np.arange(32), fmean, "g--", lw=1, label="local mean")
ax.set_title("three equal samples at the crest stay a single maximum")
ax.legend(loc="lower left", fontsize=8)

fig.tight_layout()
fig.savefig(OUT / "01_sifting_anatomy.png", dpi=120)
print(f"wrote {OUT / '01_sifting_anatomy.png'}")
