"""Reproducible Monte Carlo and exact-enumeration energy experiments.

Determinism contract: trial i draws its coefficients from the stream
seeded with ``splitmix64(base_seed ^ i)``; results land in an array
indexed by trial and are reduced in index order.  Estimates are
therefore bit-identical for any thread count, and any single trial can
be replayed in isolation.  Multi-point studies derive point seeds the
same way from (base_seed, point index).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import spectral
from .bounds import corner_trace_bound, limit_energy, talagrand_tail, theorem1_rhs, theorem3_bound
from .ensembles import (
    CirculantMatrix,
    DistributionSpec,
    ToeplitzMatrix,
    _check_band,
    corner_block,
    distribution_moments,
    sample_coefficients,
)
from .rng import splitmix64, trial_seed
from .spectral import NumericalError

# Exact Bernoulli enumeration walks all 2^b coefficient patterns.
ENUM_MAX_B = 20
# Patterns per vectorized enumeration chunk; bounds peak memory at
# roughly chunk * n doubles.
_ENUM_CHUNK = 4096


@dataclass(frozen=True)
class EstimateRecord:
    """One expected-energy estimate with its provenance."""

    method: str
    n: int
    b: int
    dist: str
    trials: int
    base_seed: int
    estimate: float
    stderr: float
    raw_mean: float


@dataclass(frozen=True, eq=False)
class TailCurve:
    """Empirical deviation frequencies next to the concentration bound."""

    n: int
    b: int
    dist: str
    trials: int
    base_seed: int
    delta0: float
    mean_normalized: float
    deltas: np.ndarray
    empirical: np.ndarray
    theoretical: np.ndarray


@dataclass(frozen=True)
class ToeplitzGapRecord:
    """Coupled circulant/Toeplitz energy gap measurements."""

    n: int
    b: int
    dist: str
    trials: int
    base_seed: int
    mean_normalized_gap: float
    max_corner_ratio: float
    thm3_exact: float
    thm3_coarse: float


@dataclass(frozen=True)
class ConvergencePoint:
    """One (n, b) point of a convergence study against the limit value."""

    n: int
    b: int
    estimate: float
    stderr: float
    deviation: float
    bound: float


def _resolve_threads(threads: int) -> int:
    if threads < 0:
        raise ValueError("thread count must be nonnegative")
    return threads if threads > 0 else min(4, os.cpu_count() or 1)


def _map_trials(fn, trials: int, threads: int) -> list:
    """Run fn(0..trials-1), returning results indexed by trial."""
    workers = _resolve_threads(threads)
    out = [None] * trials
    if workers == 1 or trials < 2:
        for i in range(trials):
            out[i] = fn(i)
        return out

    def run_chunk(chunk):
        for i in chunk:
            out[i] = fn(i)

    step = -(-trials // min(workers, trials))
    chunks = [range(start, min(start + step, trials)) for start in range(0, trials, step)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        # list() propagates the first worker exception
        list(pool.map(run_chunk, chunks))
    return out


def _trial_energies(
    n: int, b: int, dist: DistributionSpec, trials: int, base_seed: int, threads: int
) -> np.ndarray:
    def one(i: int) -> float:
        coeffs = sample_coefficients(dist, b, trial_seed(base_seed, i))
        return spectral.circulant_energy(CirculantMatrix(n, coeffs)).energy

    return np.array(_map_trials(one, trials, threads), dtype=float)


def mc_expected_energy(
    n: int,
    b: int,
    dist: DistributionSpec,
    trials: int,
    base_seed: int = 0,
    threads: int = 0,
) -> EstimateRecord:
    """Monte Carlo estimate of the expected normalized energy E/(n sqrt(b))."""
    _check_band(n, b)
    if trials < 1:
        raise ValueError("need at least one trial")
    energies = _trial_energies(n, b, dist, trials, base_seed, threads)
    raw_mean = float(energies.mean())
    raw_stderr = float(energies.std(ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
    scale = n * math.sqrt(b)
    return EstimateRecord(
        "mc", n, b, dist.spec_string(), trials, base_seed,
        raw_mean / scale, raw_stderr / scale, raw_mean,
    )


def exact_expected_energy_bernoulli(n: int, b: int, p: float) -> EstimateRecord:
    """Exact expected energy for Bernoulli(p) coefficients by enumerating all 2^b patterns."""
    _check_band(n, b)
    if b > ENUM_MAX_B:
        raise ValueError(f"enumeration is 2^b work; b={b} exceeds cap {ENUM_MAX_B}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
    k = np.arange(1, b + 1)
    r = np.arange(1, n + 1)
    cos_table = 2.0 * np.cos((2.0 * math.pi / n) * np.outer(k, r))
    total = 0.0
    patterns = 1 << b
    for start in range(0, patterns, _ENUM_CHUNK):
        idx = np.arange(start, min(start + _ENUM_CHUNK, patterns))
        bits = (idx[:, None] >> np.arange(b)[None, :]) & 1
        energies = np.abs(bits @ cos_table).sum(axis=1)
        ones = bits.sum(axis=1)
        weights = p**ones * (1.0 - p) ** (b - ones)
        total += float(weights @ energies)
    scale = n * math.sqrt(b)
    return EstimateRecord(
        "exact", n, b, DistributionSpec.bernoulli(p).spec_string(), patterns, 0,
        total / scale, 0.0, total,
    )


def deviation_experiment(
    n: int,
    b: int,
    dist: DistributionSpec,
    trials: int,
    deltas,
    base_seed: int = 0,
    threads: int = 0,
) -> TailCurve:
    """Empirical tail of |normalized energy - sample mean| against its bound.

    Requires a compactly supported distribution; the concentration bound
    has no content otherwise.
    """
    _check_band(n, b)
    if trials < 2:
        raise ValueError("need at least two trials to center the deviations")
    if dist.support_bound is None:
        raise ValueError("deviation experiment requires compactly supported coefficients")
    deltas = np.asarray(deltas, dtype=float)
    if deltas.ndim != 1 or deltas.size == 0 or np.any(deltas < 0):
        raise ValueError("deltas must be a non-empty list of nonnegative reals")
    normalized = _trial_energies(n, b, dist, trials, base_seed, threads) / (n * math.sqrt(b))
    center = float(normalized.mean())
    devs = np.abs(normalized - center)
    empirical = np.array([float((devs >= d).mean()) for d in deltas])
    delta0 = talagrand_tail(0.0, b, dist.support_bound)[0]
    theoretical = np.array([talagrand_tail(d, b, dist.support_bound)[1] for d in deltas])
    return TailCurve(
        n, b, dist.spec_string(), trials, base_seed,
        delta0, center, deltas, empirical, theoretical,
    )


def toeplitz_vs_circulant(
    n: int,
    b: int,
    dist: DistributionSpec,
    trials: int,
    base_seed: int = 0,
    cap: int = spectral.DENSE_CAP_DEFAULT,
    threads: int = 0,
) -> ToeplitzGapRecord:
    """Coupled energy gap |E(circulant) - E(Toeplitz)| on shared coefficients.

    Each trial checks the chain gap <= 2 * ||corner||_tr <= closed-form
    corner bound and raises NumericalError on any violation; the reported
    ratio is the observed gap against the closed-form bound.
    """
    _check_band(n, b)
    if trials < 1:
        raise ValueError("need at least one trial")
    if n > cap:
        raise ValueError(f"coupled runs need dense eigensolves; size {n} exceeds cap {cap}")

    def one(i: int) -> tuple[float, float]:
        coeffs = sample_coefficients(dist, b, trial_seed(base_seed, i))
        e_circ = spectral.circulant_energy(CirculantMatrix(n, coeffs)).energy
        e_toep = spectral.toeplitz_energy(ToeplitzMatrix(n, coeffs), cap).energy
        gap = abs(e_circ - e_toep)
        corner = 2.0 * float(np.linalg.svd(corner_block(coeffs), compute_uv=False).sum())
        bound = corner_trace_bound(coeffs)
        tol = 1e-8 * max(1.0, bound)
        if gap > corner + tol or corner > bound + tol:
            raise NumericalError(
                f"corner-coupling chain violated at trial {i}: "
                f"gap={gap:.6e}, 2*trace_norm={corner:.6e}, bound={bound:.6e}"
            )
        return gap, gap / bound if bound > 0.0 else 0.0

    results = _map_trials(one, trials, threads)
    gaps = np.array([g for g, _ in results])
    ratios = np.array([q for _, q in results])
    exact, coarse = theorem3_bound(dist, n, b)
    return ToeplitzGapRecord(
        n, b, dist.spec_string(), trials, base_seed,
        float(gaps.mean()) / (n * math.sqrt(b)), float(ratios.max()), exact, coarse,
    )


def convergence_study(
    schedule,
    dist: DistributionSpec,
    trials: int,
    base_seed: int = 0,
    threads: int = 0,
) -> list[ConvergencePoint]:
    """Measured |estimate - limit| against the full convergence bound, per (n, b).

    Each schedule point gets its own derived seed.  A deviation beyond
    bound + 4 * stderr is a genuine counterexample to the bound and
    raises NumericalError.
    """
    schedule = [(int(n), int(b)) for n, b in schedule]
    if not schedule:
        raise ValueError("schedule must contain at least one (n, b) point")
    a, sigma, mu3 = distribution_moments(dist)
    limit = limit_energy(sigma)
    points = []
    for index, (n, b) in enumerate(schedule):
        seed = splitmix64(base_seed ^ (index + 1))
        record = mc_expected_energy(n, b, dist, trials, seed, threads)
        deviation = abs(record.estimate - limit)
        bound = theorem1_rhs(a, sigma, mu3, n, b).total
        if deviation > bound + 4.0 * record.stderr:
            raise NumericalError(
                f"convergence bound violated at (n={n}, b={b}): "
                f"deviation {deviation:.6f} > bound {bound:.6f} + 4*stderr"
            )
        points.append(ConvergencePoint(n, b, record.estimate, record.stderr, deviation, bound))
    return points
