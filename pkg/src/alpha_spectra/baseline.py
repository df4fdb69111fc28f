"""Classical comparison paths: zero-padded standard FFT and alias folding.

Appending (alpha-1)*N zeros and running an ordinary alpha*N-point FFT
produces bin-for-bin the same spectrum as the direct density-alpha
transform -- padding buys resolution, not information.  The padded FFT here
reuses the fast kernel at alpha = 1 so its operation counts follow the
identical convention and the two methods compare like for like:
(alpha*N/2)*log2(alpha*N) multiplies against (alpha*N/2)*log2(N).

For alpha < 1 the matching time-domain picture is folding: the inverse of a
shortened spectrum returns x'_n = sum_k x_{n+k*alpha*N}, reproduced here
directly so the round trip can be checked without any transform.
"""

from dataclasses import dataclass

import numpy as np

from .core import DenseFactor, Signal, Spectrum, validate_pair
from .fastpath import OpCounter, alpha_fft
from .fastpath import plan as make_plan


@dataclass(frozen=True, eq=False)
class PaddedSignal:
    """A signal extended to alpha*N samples with a zero tail.

    Keeping the sample interval fixed, padding stretches the duration to
    alpha*T, which is exactly what lines the padded FFT bins up with the
    density-alpha bins: m/(padded T) == m/(alpha*T).
    """

    samples: np.ndarray
    original_n: int
    duration: float

    def __post_init__(self):
        arr = np.array(self.samples, dtype=np.complex128)
        if arr.ndim != 1 or not 1 <= self.original_n <= arr.size:
            raise ValueError(
                f"padded length {arr.shape} incompatible with original N={self.original_n}"
            )
        if np.any(arr[self.original_n:] != 0):
            raise ValueError("padding tail must be exactly zero")
        if not self.duration > 0:
            raise ValueError(f"duration must be positive, got {self.duration}")
        arr.setflags(write=False)
        object.__setattr__(self, "samples", arr)

    def __len__(self) -> int:
        return self.samples.size

    def as_signal(self) -> Signal:
        return Signal(self.samples, self.duration)


def zero_pad(signal: Signal, alpha: DenseFactor) -> PaddedSignal:
    """Extend ``signal`` to alpha*N samples with zeros (alpha >= 1 only)."""
    n, m = validate_pair(len(signal), alpha)
    if alpha.p < alpha.q:
        raise ValueError(f"zero-padding needs alpha >= 1, got {alpha}")
    padded = np.zeros(m, dtype=np.complex128)
    padded[:n] = signal.samples
    return PaddedSignal(padded, n, signal.duration * (alpha.p / alpha.q))


def standard_fft(samples, duration: float = 1.0, counter: OpCounter | None = None) -> Spectrum:
    """Ordinary power-of-two FFT, run through the fast kernel at alpha = 1.

    Accepts a Signal, a PaddedSignal, or a bare array (then ``duration``
    applies).  Counts land in ``counter`` under the shared convention, so
    they are directly comparable with any density-alpha run.
    """
    if isinstance(samples, PaddedSignal):
        signal = samples.as_signal()
    elif isinstance(samples, Signal):
        signal = samples
    else:
        signal = Signal(np.asarray(samples), duration)
    p = make_plan(len(signal), DenseFactor(1))
    return alpha_fft(signal, p, counter)


def aliased_reconstruct(signal: Signal, alpha: DenseFactor) -> np.ndarray:
    """Time-domain alias sum x'_n = sum_{k : 0 <= n+k*alpha*N < N} x_{n+k*alpha*N}.

    Defined for alpha < 1 with integer M = alpha*N.  The result has period M;
    entries for n >= M follow that periodic extension, matching what the
    inverse of a density-alpha spectrum returns slot for slot.
    """
    n, m = validate_pair(len(signal), alpha)
    if alpha.p >= alpha.q:
        raise ValueError(f"alias folding needs alpha < 1, got {alpha}")
    residues = np.arange(n) % m
    folded = np.zeros(m, dtype=np.complex128)
    np.add.at(folded, residues, signal.samples)
    return folded[residues]
