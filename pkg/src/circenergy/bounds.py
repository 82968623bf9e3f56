"""Closed-form right-hand sides of the energy bounds.

Everything here is pure arithmetic in the distribution moments
(a = mean, sigma = std, mu3 = third absolute central moment) and the
shape parameters (n, b).  Composite bounds return a BoundReport whose
per-term breakdown shows which contribution dominates:

  * the expected normalized energy of a band circulant converges to
    2 sigma / sqrt(pi) with an explicit three-term error bound
    (CLT moment gap + mean-kernel term + Riemann variation term);
  * for compactly supported entries the normalized energy concentrates
    around its mean at rate exp(-b delta^2 / (8 R^2));
  * the circulant and Toeplitz energies differ by at most a corner-block
    term of order b^2 / n after normalization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .dirichlet import EULER_GAMMA
from .ensembles import CoefficientVector, DistributionSpec, _check_band, distribution_moments

# Best published constant for the non-uniform Berry-Esseen inequality;
# callers may pass a sharper value as c1 if one is available.
BERRY_ESSEEN_C1 = 31.954


@dataclass(frozen=True)
class BoundReport:
    """A named bound with inputs, additive terms, and their total."""

    theorem: str
    inputs: dict
    terms: dict
    total: float = field(default=float("nan"))

    def __post_init__(self):
        if math.isnan(self.total):
            object.__setattr__(self, "total", float(sum(self.terms.values())))


def _check_sigma(sigma: float) -> None:
    if sigma <= 0.0:
        raise ValueError("degenerate distribution: sigma must be positive")


def limit_energy(sigma: float) -> float:
    """Limit 2 sigma / sqrt(pi) of the expected normalized energy."""
    if sigma < 0.0:
        raise ValueError("sigma must be nonnegative")
    return 2.0 * sigma / math.sqrt(math.pi)


def gaussian_abs_moment(tau: float) -> float:
    """E|Z| for Z ~ N(0, tau^2): tau * sqrt(2/pi)."""
    if tau < 0.0:
        raise ValueError("tau must be nonnegative")
    return tau * math.sqrt(2.0 / math.pi)


def clt_moment_gap_bound(mu3: float, sigma2: float, c1: float = BERRY_ESSEEN_C1) -> float:
    """Bound (4 pi c1 / (3 sqrt(3))) * mu3 / sigma^2 on the first-absolute-moment
    gap between a normalized cosine sum and its Gaussian limit, before the
    1/sqrt(b) scaling that enters the full convergence bound."""
    if sigma2 <= 0.0:
        raise ValueError("degenerate distribution: variance must be positive")
    if mu3 < 0.0:
        raise ValueError("third absolute moment must be nonnegative")
    return 4.0 * math.pi * c1 / (3.0 * math.sqrt(3.0)) * mu3 / sigma2


def mean_part_bound(a: float, n: int, b: int) -> BoundReport:
    """Bound on the normalized energy contribution of the mean component.

    (2|a|/sqrt(b)) * (2 + (2/pi^2) ln b + (1 + (2b+1)(1 + gamma + ln b)) / n).
    """
    _check_band(n, b)
    lead = 2.0 * abs(a) / math.sqrt(b)
    terms = {
        "base": lead * 2.0,
        "kernel_log": lead * (2.0 / math.pi**2) * math.log(b),
        "riemann": lead * (1.0 + (2 * b + 1) * (1.0 + EULER_GAMMA + math.log(b))) / n,
    }
    return BoundReport("lemma_mean", {"a": a, "n": n, "b": b}, terms)


def var_part_bound(sigma: float, n: int, b: int) -> BoundReport:
    """Bound on the normalized-energy error of the fluctuation component.

    (4 sigma / (b sqrt(pi))) * (1 + (1/pi^2) ln b
                                + (1 + (2b+1)(1 + gamma + ln b)) / n).
    """
    _check_band(n, b)
    _check_sigma(sigma)
    lead = 4.0 * sigma / (b * math.sqrt(math.pi))
    terms = {
        "base": lead,
        "kernel_log": lead * math.log(b) / math.pi**2,
        "riemann": lead * (1.0 + (2 * b + 1) * (1.0 + EULER_GAMMA + math.log(b))) / n,
    }
    return BoundReport("lemma_var", {"sigma": sigma, "n": n, "b": b}, terms)


def theorem1_rhs(
    a: float, sigma: float, mu3: float, n: int, b: int, c1: float = BERRY_ESSEEN_C1
) -> BoundReport:
    """Full error bound |E energy/(n sqrt(b)) - 2 sigma/sqrt(pi)| <= total.

    Three additive terms:
      berry_esseen: (8 pi c1 / (3 sqrt(3))) * mu3 / (sigma^2 sqrt(b)),
      mean_kernel:  (4/sqrt(b)) (|a| + sigma/sqrt(pi b)) (1 + (1/pi^2) ln b),
      variation:    (2/(n sqrt(b))) (|a| + 2 sigma/sqrt(pi b))
                    * (1 + (2b+1)(1 + gamma + ln b)).
    """
    _check_band(n, b)
    _check_sigma(sigma)
    if mu3 < 0.0:
        raise ValueError("third absolute moment must be nonnegative")
    log_b = math.log(b)
    terms = {
        "berry_esseen": 8.0 * math.pi * c1 / (3.0 * math.sqrt(3.0)) * mu3
        / (sigma**2 * math.sqrt(b)),
        "mean_kernel": 4.0 / math.sqrt(b)
        * (abs(a) + sigma / math.sqrt(math.pi * b))
        * (1.0 + log_b / math.pi**2),
        "variation": 2.0 / (n * math.sqrt(b))
        * (abs(a) + 2.0 * sigma / math.sqrt(math.pi * b))
        * (1.0 + (2 * b + 1) * (1.0 + EULER_GAMMA + log_b)),
    }
    inputs = {"a": a, "sigma": sigma, "mu3": mu3, "n": n, "b": b, "c1": c1}
    return BoundReport("thm1", inputs, terms)


def talagrand_tail(delta: float, b: int, support_bound: float) -> tuple[float, float]:
    """Concentration tail for compactly supported coefficients.

    Returns (delta0, prob_bound) with delta0 = 4 sqrt(2 pi R^2 / b) and
    P(|energy/(n sqrt(b)) - mean| >= delta) <= min(1, 4 exp(-(b/(8R^2)) (delta-delta0)^2))
    for delta >= delta0; below delta0 the bound is vacuous (1).
    """
    if delta < 0.0:
        raise ValueError("deviation must be nonnegative")
    if b < 1:
        raise ValueError("band width must be at least 1")
    if support_bound is None or support_bound <= 0.0:
        raise ValueError("concentration needs a positive support bound R")
    r2 = support_bound * support_bound
    delta0 = 4.0 * math.sqrt(2.0 * math.pi * r2 / b)
    if delta <= delta0:
        return delta0, 1.0
    prob = 4.0 * math.exp(-(b / (8.0 * r2)) * (delta - delta0) ** 2)
    return delta0, min(1.0, prob)


def lipschitz_energy_bound(b: int) -> float:
    """Lipschitz constant sqrt(2/b) of coefficients -> normalized energy."""
    if b < 1:
        raise ValueError("band width must be at least 1")
    return math.sqrt(2.0 / b)


def theorem3_bound(dist: DistributionSpec, n: int, b: int) -> tuple[float, float]:
    """Expected normalized circulant-vs-Toeplitz gap bounds (exact, coarse).

    exact  = sqrt(a^2 + sigma^2) * sqrt(2 b (b+1)) / n,
    coarse = 2 (|a| + sigma) b / n; exact <= coarse always.
    """
    _check_band(n, b)
    a, sigma, _ = distribution_moments(dist)
    exact = math.sqrt(a * a + sigma * sigma) * math.sqrt(2.0 * b * (b + 1)) / n
    coarse = 2.0 * (abs(a) + sigma) * b / n
    if exact > coarse * (1.0 + 1e-12):
        raise RuntimeError("internal error: exact coupling bound exceeded coarse form")
    return exact, coarse


def corner_trace_bound(coeffs: CoefficientVector) -> float:
    """Bound 2 sqrt(b) * sqrt(sum_k k a_k^2) on twice the corner-block trace norm."""
    a = coeffs.values
    k = np.arange(1, a.size + 1)
    return 2.0 * math.sqrt(a.size) * math.sqrt(float((k * a * a).sum()))
