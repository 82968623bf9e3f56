"""Limit constants for the normalized energy of related random ensembles.

Each function returns the leading coefficient of the average trace norm
under the stated normalizer, so different ensembles can be compared on
one table: band circulant graphs against dense binomial graphs, band
symmetric matrices against full Wigner behavior, sparse random regular
graphs (Kesten-McKay law) against dense regular ones, and the
tree-average window.  Closed forms are paired with direct quadrature of
the corresponding spectral density where one exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import quad


def _check_p(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {p}")


def circulant_graph_limit(p: float) -> float:
    """Band circulant graph with jump probability p: E / (n sqrt(b)) -> (2/sqrt(pi)) sqrt(p(1-p))."""
    _check_p(p)
    return 2.0 / math.sqrt(math.pi) * math.sqrt(p * (1.0 - p))


def gnp_limit(p: float) -> float:
    """Binomial graph G(n, p): E / n^(3/2) -> (8/(3 pi)) sqrt(p(1-p))."""
    _check_p(p)
    return 8.0 / (3.0 * math.pi) * math.sqrt(p * (1.0 - p))


def band_symmetric_limit(sigma: float) -> float:
    """Band symmetric (non-circulant) matrix, entry std sigma: E / (n sqrt(b)) -> 8 sigma / (3 pi)."""
    if sigma < 0.0:
        raise ValueError("sigma must be nonnegative")
    return 8.0 * sigma / (3.0 * math.pi)


def semicircle_abs_moment_numeric(sigma: float, tol: float = 1e-10) -> float:
    """First absolute moment of the semicircle law of variance sigma^2, by quadrature.

    Independent check of band_symmetric_limit: integrates
    |x| sqrt(4 sigma^2 - x^2) / (2 pi sigma^2) over [-2 sigma, 2 sigma].
    """
    if sigma <= 0.0:
        raise ValueError("sigma must be positive")
    s = 2.0 * sigma
    value, _ = quad(
        lambda x: x * math.sqrt(max(s * s - x * x, 0.0)) / (math.pi * sigma * sigma),
        0.0,
        s,
        epsabs=tol,
        limit=200,
    )
    return value


def kesten_energy(d: int) -> float:
    """Average-energy constant E / n for random d-regular graphs, d >= 2.

    Closed-form first absolute moment of the Kesten-McKay law:
    (2 d sqrt(d-1) / pi) * (1 - ((d-2)/(2 sqrt(d-1))) * arctan(2 sqrt(d-1)/(d-2))).
    At d = 2 the arctan factor degenerates and the value is 4/pi.
    """
    if d < 2:
        raise ValueError("degree must be at least 2")
    if d == 2:
        return 4.0 / math.pi
    root = math.sqrt(d - 1.0)
    return (
        2.0 * d * root / math.pi
        * (1.0 - (d - 2.0) / (2.0 * root) * math.atan(2.0 * root / (d - 2.0)))
    )


def kesten_energy_numeric(d: int, tol: float = 1e-10) -> float:
    """First absolute moment of the Kesten-McKay density, by quadrature."""
    if d < 2:
        raise ValueError("degree must be at least 2")
    s = 2.0 * math.sqrt(d - 1.0)

    def integrand(x: float) -> float:
        return x * d * math.sqrt(max(s * s - x * x, 0.0)) / (2.0 * math.pi * (d * d - x * x))

    value, _ = quad(integrand, 0.0, s, epsabs=tol, limit=200)
    return 2.0 * value


def regular_dense_limit(d: int, n: int) -> float:
    """Dense d-regular graphs on n vertices: E / n ~ (8/(3 pi)) sqrt(d (1 - d/n))."""
    if not 0 < d < n:
        raise ValueError("need 0 < d < n")
    return 8.0 / (3.0 * math.pi) * math.sqrt(d * (1.0 - d / n))


def tnd_average_bounds(d: int) -> tuple[float, float]:
    """Window (1/sqrt(3), 1) for the average normalized energy of d-ary tree classes."""
    if d < 2:
        raise ValueError("degree must be at least 2")
    return 1.0 / math.sqrt(3.0), 1.0


def is_hyperenergetic(energy: float, n: int) -> bool:
    """True when a graph's energy strictly exceeds the complete graph's 2(n-1)."""
    if n < 1:
        raise ValueError("need at least one vertex")
    return energy > 2.0 * (n - 1)


@dataclass(frozen=True)
class EnsembleLimit:
    """One comparison row: ensemble name, normalizer, limit constant(s)."""

    ensemble: str
    normalizer: str
    constant: float
    constant_hi: float | None = None


def comparison_table(
    p: float = 0.5, d: int = 3, sigma: float = 1.0, n: int | None = None
) -> list[EnsembleLimit]:
    """Limit constants side by side for the ensembles this package relates."""
    rows = [
        EnsembleLimit("circulant_graph", "n*sqrt(b)", circulant_graph_limit(p)),
        EnsembleLimit("gnp", "n^(3/2)", gnp_limit(p)),
        EnsembleLimit("band_symmetric", "n*sqrt(b)", band_symmetric_limit(sigma)),
        EnsembleLimit("random_regular", "n", kesten_energy(d)),
        EnsembleLimit("tree_average", "n", *tnd_average_bounds(d)),
    ]
    if n is not None:
        rows.append(EnsembleLimit("dense_regular", "n", regular_dense_limit(d, n)))
    return rows
