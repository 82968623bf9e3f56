"""Entry distributions, coefficient sampling, and band circulant / Toeplitz matrices.

Matrices are stored as (size, band coefficients) only; building the
dense array is an explicit step meant for oracles and small instances.
The diagonal is fixed at zero and the band must satisfy b < n/2, so the
wrap-around halves of a circulant row never overlap.

A symmetric band circulant of size n with coefficients a_1..a_b has
first row (0, a_1, ..., a_b, 0, ..., 0, a_b, ..., a_1); the matching
band Toeplitz keeps the same band but drops the wrap-around corners.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.special import ndtri

from .rng import SplitMix64


class BandWidthError(ValueError):
    """Band width incompatible with the matrix size: requires 1 <= b < n/2."""


def _check_band(n: int, b: int) -> None:
    if b < 1:
        raise BandWidthError(f"band width must be at least 1, got {b}")
    if 2 * b >= n:
        raise BandWidthError(f"band width {b} too wide for size {n}: requires b < n/2")


@dataclass(frozen=True)
class DistributionSpec:
    """An i.i.d. coefficient distribution together with its moment data.

    Fields:
        kind: "bernoulli", "uniform", or "gaussian".
        params: raw constructor parameters, in declaration order.
        mean: E[xi].
        variance: Var[xi].
        abs_central_third: E|xi - E[xi]|^3.
        support_bound: R with values in [0, R], or None when the support
            is unbounded (gaussian); operations that need compact
            support reject None.

    Degenerate Bernoulli endpoints p in {0, 1} are allowed so that
    deterministic 0/1 coefficient patterns (empty and complete circulant
    graphs) can be expressed; operations whose formulas divide by the
    variance reject variance == 0 themselves.
    """

    kind: str
    params: tuple
    mean: float
    variance: float
    abs_central_third: float
    support_bound: float | None

    @staticmethod
    def bernoulli(p: float) -> "DistributionSpec":
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"bernoulli parameter must lie in [0, 1], got {p}")
        q = 1.0 - p
        # E|xi - p|^3 = q*p^3 + p*q^3 = p*q*(p^2 + q^2)
        return DistributionSpec("bernoulli", (p,), p, p * q, p * q * (p * p + q * q), 1.0)

    @staticmethod
    def uniform(lo: float, hi: float) -> "DistributionSpec":
        if not 0.0 <= lo < hi:
            raise ValueError(f"uniform bounds must satisfy 0 <= lo < hi, got ({lo}, {hi})")
        w = hi - lo
        # centered uniform on [-w/2, w/2]: E|x|^3 = w^3/32
        return DistributionSpec(
            "uniform", (lo, hi), 0.5 * (lo + hi), w * w / 12.0, w**3 / 32.0, hi
        )

    @staticmethod
    def gaussian(mu: float, sigma: float) -> "DistributionSpec":
        if sigma <= 0.0:
            raise ValueError(f"gaussian sigma must be positive, got {sigma}")
        # E|x - mu|^3 = 2*sqrt(2/pi)*sigma^3
        mu3 = 2.0 * math.sqrt(2.0 / math.pi) * sigma**3
        return DistributionSpec("gaussian", (mu, sigma), mu, sigma * sigma, mu3, None)

    def spec_string(self) -> str:
        return ":".join([self.kind] + [f"{v:g}" for v in self.params])

    def sample_values(self, count: int, seed: int) -> np.ndarray:
        """Draw count i.i.d. values from the stream seeded with seed."""
        if count < 1:
            raise ValueError("sample count must be positive")
        u = SplitMix64(seed).uniforms(count)
        if self.kind == "bernoulli":
            return (u < self.params[0]).astype(float)
        if self.kind == "uniform":
            lo, hi = self.params
            return lo + (hi - lo) * u
        mu, sigma = self.params
        return mu + sigma * ndtri(u)


def parse_distribution(text: str) -> DistributionSpec:
    """Parse "bernoulli:p", "uniform:lo:hi", or "gaussian:mu:sigma"."""
    parts = text.strip().split(":")
    kind, args = parts[0].lower(), parts[1:]
    try:
        values = [float(s) for s in args]
    except ValueError as exc:
        raise ValueError(f"bad distribution parameter in {text!r}") from exc
    arity = {"bernoulli": 1, "uniform": 2, "gaussian": 2}
    if kind not in arity:
        raise ValueError(f"unknown distribution kind {parts[0]!r}")
    if len(values) != arity[kind]:
        raise ValueError(f"{kind} takes {arity[kind]} parameter(s), got {len(values)}")
    return getattr(DistributionSpec, kind)(*values)


def distribution_moments(dist: DistributionSpec) -> tuple[float, float, float]:
    """Return (mean a, standard deviation sigma, third absolute central moment mu3)."""
    return dist.mean, math.sqrt(dist.variance), dist.abs_central_third


@dataclass(frozen=True, eq=False)
class CoefficientVector:
    """Band coefficients a_1..a_b; values[k-1] sits on diagonal offset k."""

    values: np.ndarray

    def __post_init__(self):
        arr = np.array(self.values, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficient vector must be a non-empty 1-D array")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficient values must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    @property
    def b(self) -> int:
        return self.values.size


def sample_coefficients(dist: DistributionSpec, b: int, seed: int) -> CoefficientVector:
    return CoefficientVector(dist.sample_values(b, seed))


@dataclass(frozen=True, eq=False)
class CirculantMatrix:
    """Symmetric band circulant Circ(0, a_1..a_b, 0, ..., 0, a_b..a_1)."""

    n: int
    coeffs: CoefficientVector

    def __post_init__(self):
        _check_band(self.n, self.coeffs.b)

    def symbol_row(self) -> np.ndarray:
        """First row of the matrix; its DFT is the spectrum."""
        a = self.coeffs.values
        b = a.size
        row = np.zeros(self.n)
        row[1 : b + 1] = a
        row[self.n - b :] = a[::-1]
        return row

    def dense(self) -> np.ndarray:
        row = self.symbol_row()
        idx = np.arange(self.n)
        return row[(idx[None, :] - idx[:, None]) % self.n]


@dataclass(frozen=True, eq=False)
class ToeplitzMatrix:
    """Symmetric band Toeplitz with the same band as the circulant, no wrap-around."""

    n: int
    coeffs: CoefficientVector

    def __post_init__(self):
        _check_band(self.n, self.coeffs.b)

    def dense(self) -> np.ndarray:
        a = self.coeffs.values
        col = np.zeros(self.n)
        col[1 : a.size + 1] = a
        idx = np.arange(self.n)
        return col[np.abs(idx[None, :] - idx[:, None])]


def build_circulant(n: int, coeffs: CoefficientVector) -> CirculantMatrix:
    return CirculantMatrix(n, coeffs)


def build_toeplitz(n: int, coeffs: CoefficientVector) -> ToeplitzMatrix:
    return ToeplitzMatrix(n, coeffs)


def corner_block(coeffs: CoefficientVector) -> np.ndarray:
    """The b x b upper-triangular block L by which circulant and Toeplitz differ.

    L[i][j] = a_{b-(j-i)} for j >= i, zero below the diagonal, so the
    first row reads (a_b, a_{b-1}, ..., a_1).  The circulant equals the
    Toeplitz plus L placed in the top-right corner and L^T in the
    bottom-left, which bounds the energy gap by twice the trace norm of L.
    """
    a = coeffs.values
    b = a.size
    jmi = np.arange(b)[None, :] - np.arange(b)[:, None]
    return np.where(jmi >= 0, a[np.clip(b - 1 - jmi, 0, b - 1)], 0.0)


@dataclass(frozen=True, eq=False)
class CirculantGraph:
    """Circulant graph on n vertices with jump set drawn from {1..b}."""

    n: int
    b: int
    jumps: tuple[int, ...]

    def __post_init__(self):
        _check_band(self.n, self.b)
        if any(not 1 <= j <= self.b for j in self.jumps):
            raise ValueError("jump sizes must lie in {1..b}")
        if len(set(self.jumps)) != len(self.jumps):
            raise ValueError("jump sizes must be distinct")

    def coefficients(self) -> CoefficientVector:
        values = np.zeros(self.b)
        for j in self.jumps:
            values[j - 1] = 1.0
        return CoefficientVector(values)

    def adjacency(self) -> CirculantMatrix:
        return CirculantMatrix(self.n, self.coefficients())

    @property
    def degree(self) -> int:
        return 2 * len(self.jumps)


def sample_circulant_graph(n: int, b: int, p: float, seed: int) -> CirculantGraph:
    """Include each jump size 1..b independently with probability p."""
    dist = DistributionSpec.bernoulli(p)
    values = dist.sample_values(b, seed)
    jumps = tuple(int(k) + 1 for k in np.flatnonzero(values > 0.5))
    return CirculantGraph(n, b, jumps)


def write_coefficients(path: str | Path, coeffs: CoefficientVector) -> None:
    """Write coefficients as a JSON array (.json) or single-column CSV (otherwise)."""
    path = Path(path)
    if path.suffix.lower() == ".json":
        path.write_text(json.dumps([float(v) for v in coeffs.values]) + "\n")
        return
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        for v in coeffs.values:
            writer.writerow([repr(float(v))])


def read_coefficients(path: str | Path) -> CoefficientVector:
    path = Path(path)
    if path.suffix.lower() == ".json":
        data = json.loads(path.read_text())
        return CoefficientVector(np.asarray(data, dtype=float))
    with path.open(newline="") as fh:
        rows = [row for row in csv.reader(fh) if row]
    return CoefficientVector(np.array([float(row[0]) for row in rows]))
