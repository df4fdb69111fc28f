"""
Dense spectrum basics
=====================

A walk through the core idea: the transform length need not equal the
signal length.  A density factor alpha = p/q stretches the analysis to
alpha*N frequency bins spaced 1/(alpha*T) apart -- alpha > 1 reads the
spectrum on a finer grid, alpha < 1 on a coarser one -- without touching
the input samples.
"""

import numpy as np

from alpha_spectra import (
    DenseFactor,
    Signal,
    aliased_reconstruct,
    alpha_fft,
    naive_forward,
    naive_inverse,
    plan,
)

rng = np.random.default_rng(0)

# An eight-sample complex signal spanning one second.
signal = Signal(rng.normal(size=8) + 1j * rng.normal(size=8), duration=1.0)
print(f"signal: N = {len(signal)}, T = {signal.duration} s, "
      f"sample interval = {signal.dt} s")

# The ordinary transform (alpha = 1) gives 8 bins at 1 Hz spacing.
# Doubling the density gives 16 bins at 0.5 Hz spacing.
for alpha in [DenseFactor(1), DenseFactor(2)]:
    spectrum = alpha_fft(signal, plan(len(signal), alpha))
    step = spectrum.frequencies[1] - spectrum.frequencies[0]
    print(f"alpha = {alpha}: {spectrum.m} bins, spacing {step} Hz, "
          f"covering [0, {spectrum.frequencies[-1]} Hz]")

# The fast divide-and-conquer path and the defining sum agree to machine
# precision; the naive evaluation is the ground truth the library tests
# itself against.
alpha = DenseFactor(2)
fast = alpha_fft(signal, plan(len(signal), alpha))
slow = naive_forward(signal, alpha)
print(f"fast vs naive, alpha = {alpha}: max |difference| = "
      f"{np.max(np.abs(fast.bins - slow.bins)):.2e}")

# Densities are exact rationals, so nothing is lost to float rounding in
# the bookkeeping: 6/4 reduces to 3/2, and a 3/2-dense transform of an
# 8-sample signal has 12 bins.
alpha = DenseFactor(6, 4)
print(f"DenseFactor(6, 4) reduces to {alpha} (= {float(alpha)})")
spectrum = naive_forward(signal, alpha)   # 12 bins: not a power of two,
print(f"alpha = {alpha}: {spectrum.m} bins "  # so the oracle handles it
      f"(fast path needs both N and alpha*N to be powers of two)")

# Inverting an alpha >= 1 spectrum recovers the signal.
recovered = naive_inverse(fast)
print(f"round trip through alpha = 2: max error = "
      f"{np.max(np.abs(recovered.samples - signal.samples)):.2e}")

# Inverting an alpha < 1 spectrum cannot: with fewer bins than samples,
# the best any inverse can do is the alias fold, samples stacked at
# intervals of alpha*N.  The library computes that fold directly too.
alpha = DenseFactor(1, 2)
thin = alpha_fft(signal, plan(len(signal), alpha))
recovered = naive_inverse(thin)
folded = aliased_reconstruct(signal, alpha)
print(f"alpha = 1/2 inverse vs alias fold: max difference = "
      f"{np.max(np.abs(recovered.samples - folded)):.2e}")
print(f"first sample: x[0] + x[4] = {signal.samples[0] + signal.samples[4]:.4f}, "
      f"inverse gives {recovered.samples[0]:.4f}")
