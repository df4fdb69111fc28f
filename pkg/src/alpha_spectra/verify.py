"""Cross-checking suites tying the transform implementations together.

Each suite sweeps a deterministic grid of sizes, densities and seeds,
records the worst error it sees and where, and compares against a fixed
tolerance.  The suites are what the ``verify`` subcommand runs; tests call
them too, so command line and test suite cannot drift apart.
"""

from dataclasses import dataclass, field

import numpy as np

from .baseline import aliased_reconstruct, standard_fft, zero_pad
from .core import DenseFactor, Signal, validate_pair
from .fastpath import alpha_fft, plan
from .oracle import naive_forward, naive_inverse, orthogonality_kernel

DEFAULT_SIZES = (2, 4, 8, 16, 32, 64)

#: Density grids per suite; filtered per N by pair validity.
POWER_ALPHAS = tuple(
    DenseFactor(p, q) for p, q in [(1, 8), (1, 4), (1, 2), (1, 1), (2, 1), (4, 1), (8, 1)]
)
PAD_ALPHAS = tuple(DenseFactor(p) for p in (1, 2, 4, 8))
RECOVER_ALPHAS = tuple(DenseFactor(p) for p in (1, 2, 4))
FOLD_ALPHAS = tuple(DenseFactor(1, q) for q in (2, 4, 8))
KERNEL_ALPHAS = tuple(
    DenseFactor(p, q) for p, q in [(1, 4), (1, 2), (1, 1), (2, 1), (4, 1)]
)


@dataclass
class SuiteResult:
    name: str
    max_error: float
    tolerance: float
    passed: bool
    worst: dict = field(default_factory=dict)
    cases: int = 0


def random_unit_disk(rng, n: int) -> np.ndarray:
    """n complex samples uniform on the closed unit disk."""
    radius = np.sqrt(rng.uniform(0.0, 1.0, n))
    angle = rng.uniform(0.0, 2.0 * np.pi, n)
    return radius * np.exp(1j * angle)


def _valid(n, alpha):
    return (n * alpha.p) % alpha.q == 0


def _track(state, error, **where):
    if error > state["max"]:
        state["max"] = error
        state["worst"] = where
    state["cases"] += 1


def suite_oracle_equivalence(seed=0, sizes=DEFAULT_SIZES, seeds_per_case=3) -> SuiteResult:
    """Fast path against the naive transform, relative max error."""
    state = {"max": 0.0, "worst": {}, "cases": 0}
    for n in sizes:
        for alpha in POWER_ALPHAS:
            if not _valid(n, alpha):
                continue
            try:
                p = plan(n, alpha)
            except ValueError:
                continue
            for offset in range(seeds_per_case):
                rng = np.random.default_rng(seed + 1000 * offset + n)
                signal = Signal(random_unit_disk(rng, n))
                fast = alpha_fft(signal, p)
                reference = naive_forward(signal, alpha)
                scale = np.max(np.abs(reference.bins))
                error = float(np.max(np.abs(fast.bins - reference.bins)) / scale)
                _track(state, error, N=n, alpha=str(alpha), seed=seed + 1000 * offset + n)
    return SuiteResult("oracle_equivalence", state["max"], 1e-10,
                       state["max"] <= 1e-10, state["worst"], state["cases"])


def suite_zero_pad_equivalence(seed=0, sizes=DEFAULT_SIZES, seeds_per_case=3) -> SuiteResult:
    """Density-alpha transform against the padded FFT, absolute per bin."""
    state = {"max": 0.0, "worst": {}, "cases": 0}
    for n in sizes:
        for alpha in PAD_ALPHAS:
            try:
                p = plan(n, alpha)
            except ValueError:
                continue
            for offset in range(seeds_per_case):
                rng = np.random.default_rng(seed + 1000 * offset + n)
                signal = Signal(random_unit_disk(rng, n))
                direct = alpha_fft(signal, p)
                padded = standard_fft(zero_pad(signal, alpha))
                error = float(np.max(np.abs(direct.bins - padded.bins)))
                _track(state, error, N=n, alpha=str(alpha), seed=seed + 1000 * offset + n)
    return SuiteResult("zero_pad_equivalence", state["max"], 1e-12,
                       state["max"] <= 1e-12, state["worst"], state["cases"])


def suite_round_trip(seed=0, sizes=DEFAULT_SIZES, seeds_per_case=3) -> SuiteResult:
    """inverse(forward(x)) recovers x exactly when alpha >= 1."""
    state = {"max": 0.0, "worst": {}, "cases": 0}
    for n in sizes:
        for alpha in RECOVER_ALPHAS:
            for offset in range(seeds_per_case):
                rng = np.random.default_rng(seed + 1000 * offset + n)
                signal = Signal(random_unit_disk(rng, n))
                recovered = naive_inverse(naive_forward(signal, alpha))
                error = float(np.max(np.abs(recovered.samples - signal.samples)))
                _track(state, error, N=n, alpha=str(alpha), seed=seed + 1000 * offset + n)
    return SuiteResult("round_trip", state["max"], 1e-10,
                       state["max"] <= 1e-10, state["worst"], state["cases"])


def suite_aliasing(seed=0, sizes=DEFAULT_SIZES, seeds_per_case=3) -> SuiteResult:
    """inverse(forward(x)) equals the time-domain alias fold when alpha < 1."""
    state = {"max": 0.0, "worst": {}, "cases": 0}
    for n in sizes:
        for alpha in FOLD_ALPHAS:
            if not _valid(n, alpha):
                continue
            for offset in range(seeds_per_case):
                rng = np.random.default_rng(seed + 1000 * offset + n)
                signal = Signal(random_unit_disk(rng, n))
                folded = aliased_reconstruct(signal, alpha)
                recovered = naive_inverse(naive_forward(signal, alpha))
                error = float(np.max(np.abs(recovered.samples - folded)))
                _track(state, error, N=n, alpha=str(alpha), seed=seed + 1000 * offset + n)
    return SuiteResult("aliasing", state["max"], 1e-10,
                       state["max"] <= 1e-10, state["worst"], state["cases"])


def suite_orthogonality(sizes=DEFAULT_SIZES, **_ignored) -> SuiteResult:
    """The inverse-forward kernel is 1 on the alpha*N comb and ~0 off it."""
    state = {"max": 0.0, "worst": {}, "cases": 0}
    for n in sizes:
        if n > 64:
            continue  # quadratic in N; small sizes already cover every residue class
        for alpha in KERNEL_ALPHAS:
            if not _valid(n, alpha):
                continue
            m = validate_pair(n, alpha).m
            for delta in range(-(n - 1), n):
                value = orthogonality_kernel(delta, 0, n, alpha)
                on_comb = delta % m == 0
                error = abs(value - 1.0) if on_comb else abs(value)
                _track(state, error, N=n, alpha=str(alpha), delta=delta)
    return SuiteResult("orthogonality", state["max"], 1e-12,
                       state["max"] <= 1e-12, state["worst"], state["cases"])


ALL_SUITES = (
    suite_oracle_equivalence,
    suite_zero_pad_equivalence,
    suite_round_trip,
    suite_aliasing,
    suite_orthogonality,
)


def run_all(seed=0, sizes=DEFAULT_SIZES, inject_fault=False) -> list:
    """Run every suite; ``inject_fault`` corrupts the first result (test hook)."""
    results = [suite(seed=seed, sizes=tuple(sizes)) for suite in ALL_SUITES]
    if inject_fault and results:
        first = results[0]
        results[0] = SuiteResult(
            first.name, first.max_error + 1.0, first.tolerance, False,
            dict(first.worst, injected=True), first.cases,
        )
    return results
