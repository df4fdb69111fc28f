"""Direct-evaluation reference transforms.

The forward map is X_m = sum_n exp(-2j*pi*m*n/(alpha*N)) * x_n for
m = 0..alpha*N-1, evaluated literally from one table of the (alpha*N)-th
roots of unity.  Exponents are reduced with exact integer arithmetic
((m*n) mod alpha*N) before touching the table, so no accuracy is lost to
large-angle evaluation even at the biggest supported sizes.  Cost is
Theta(N * alpha*N) complex multiply-adds by construction -- this is the
oracle; it performs no factorization and no caching beyond that one table.
"""

import numpy as np

from .core import DenseFactor, Signal, Spectrum, validate_pair

# Exponent-index blocks are materialized at most this many rows at a time so
# large grids (e.g. N=4096, alpha=8) stay within a few tens of megabytes.
_BLOCK_ROWS = 512


def roots_of_unity(m: int, sign: int = -1) -> np.ndarray:
    """w[j] = exp(sign * 2j*pi*j/m) for j = 0..m-1."""
    return np.exp(sign * 2j * np.pi * np.arange(m) / m)


def dft_matrix(n: int, alpha: DenseFactor) -> np.ndarray:
    """The full (alpha*N) x N transform matrix; row m, column n holds w^(m*n).

    Convenient for validating batches of signals at once: ``matrix @ x``.
    Materializes all alpha*N*N entries -- intended for small/medium sizes.
    """
    n, m = validate_pair(n, alpha)
    table = roots_of_unity(m)
    return table[np.outer(np.arange(m), np.arange(n)) % m]


def _reduced_product(signal_samples: np.ndarray, m: int, sign: int) -> np.ndarray:
    """rows-of-w @ x in row blocks, with exact mod-m exponent reduction."""
    n = signal_samples.size
    table = roots_of_unity(m, sign)
    cols = np.arange(n)
    out = np.empty(m, dtype=np.complex128)
    for start in range(0, m, _BLOCK_ROWS):
        stop = min(start + _BLOCK_ROWS, m)
        rows = np.arange(start, stop)
        out[start:stop] = table[(rows[:, None] * cols) % m] @ signal_samples
    return out


def naive_forward(signal: Signal, alpha: DenseFactor) -> Spectrum:
    """Literal evaluation of the density-alpha transform.

    Parameters
    ----------
    signal : Signal
        N complex samples over ``signal.duration`` seconds.
    alpha : DenseFactor
        Bin density; alpha*N must be a positive integer.

    Returns
    -------
    Spectrum
        alpha*N bins at frequencies m/(alpha*T), unscaled (no 1/N factor).
    """
    n, m = validate_pair(len(signal), alpha)
    bins = _reduced_product(signal.samples, m, sign=-1)
    return Spectrum(bins, n, alpha, signal.duration)


def naive_inverse(spectrum: Spectrum) -> Signal:
    """Literal inverse: x_n = (1/(alpha*N)) * sum_m exp(+2j*pi*m*n/(alpha*N)) * X_m.

    Returns the first origin_N samples.  For alpha >= 1 that recovers the
    original signal; for alpha < 1 the result is the alias-folded signal
    x'_n = sum_k x_{n+k*alpha*N}, extended periodically over n < N (the
    exponential is period-alpha*N in n, so slots n >= alpha*N repeat).
    """
    m = spectrum.m
    n = spectrum.origin_n
    table = roots_of_unity(m, sign=+1)
    cols = np.arange(m)
    out = np.empty(n, dtype=np.complex128)
    for start in range(0, n, _BLOCK_ROWS):
        stop = min(start + _BLOCK_ROWS, n)
        rows = np.arange(start, stop)
        out[start:stop] = table[(rows[:, None] * cols) % m] @ spectrum.bins
    return Signal(out / m, spectrum.duration)


def orthogonality_kernel(n_index: int, l_index: int, n: int, alpha: DenseFactor) -> complex:
    """(1/(alpha*N)) * sum_m exp(+2j*pi*m*(n-l)/(alpha*N)).

    Equals 1 exactly when (n_index - l_index) is a multiple of alpha*N and
    is numerically zero (< 1e-12) everywhere else -- the comb that makes the
    inverse land on alias sums rather than single samples when alpha < 1.
    """
    _, m = validate_pair(n, alpha)
    table = roots_of_unity(m, sign=+1)
    delta = (n_index - l_index) % m
    # Divide as a Python complex: unlike ndarray division (reciprocal times
    # numerator), that is exact for a real denominator, keeping comb points
    # at exactly 1 even when m is not a power of two.
    return complex(table[(np.arange(m) * delta) % m].sum()) / m
