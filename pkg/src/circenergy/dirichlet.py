"""Dirichlet kernel analysis: pointwise values, Lebesgue constants,
total variation, and Riemann-sum gaps.

The order-b kernel D_b(t) = 1 + 2 sum_{k=1}^b cos(kt)
= sin((b + 1/2) t) / sin(t / 2) is the spectral symbol of a unit band
circulant.  Two quantities control the energy bounds: the Lebesgue
constant (1/pi) * int_0^pi |D_b|, which grows like (4/pi^2) ln b, and
the total variation of D_b on [0, pi], which grows like 2 b ln b and
bounds how far an n-point Riemann sum of |D_b - 1| can sit from its
integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

EULER_GAMMA = 0.5772156649015329

# Below this, sin(t/2) loses enough precision that the closed form is
# replaced by the cosine sum it equals.
_SIN_HALF_CUTOFF = 1e-8


def dirichlet_kernel(b: int, t):
    """D_b(t); accepts a scalar or ndarray argument.

    Near zeros of sin(t/2) the quotient form degrades, so those points
    are evaluated through the cosine sum instead.
    """
    if b < 0:
        raise ValueError("kernel order must be nonnegative")
    arr = np.asarray(t, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if b == 0:
        out = np.ones_like(arr)
    else:
        s = np.sin(0.5 * arr)
        small = np.abs(s) < _SIN_HALF_CUTOFF
        out = np.sin((b + 0.5) * arr) / np.where(small, 1.0, s)
        if small.any():
            k = np.arange(1, b + 1)
            out[small] = 1.0 + 2.0 * np.cos(np.outer(arr[small], k)).sum(axis=1)
    return float(out[0]) if scalar else out


def _adaptive_simpson(f, lo: float, hi: float, tol: float, max_depth: int = 48) -> float:
    """Standard adaptive Simpson with Richardson correction."""

    def recurse(a, b, fa, fm, fb, whole, tol, depth):
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
        delta = left + right - whole
        if depth <= 0 or abs(delta) <= 15.0 * tol:
            return left + right + delta / 15.0
        return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) + recurse(
            m, b, fm, frm, fb, right, 0.5 * tol, depth - 1
        )

    if hi <= lo:
        return 0.0
    fa, fb = f(lo), f(hi)
    mid = 0.5 * (lo + hi)
    fm = f(mid)
    whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb)
    return recurse(lo, hi, fa, fm, fb, whole, tol, max_depth)


@lru_cache(maxsize=None)
def lebesgue_constant(b: int, tol: float = 1e-9) -> float:
    """Lebesgue constant (1/pi) * int_0^pi |D_b(t)| dt.

    |D_b| is smooth between consecutive kernel zeros 2 pi k / (2b + 1),
    so the integral is summed piecewise with adaptive Simpson on each
    piece.
    """
    if b < 0:
        raise ValueError("kernel order must be nonnegative")
    if b == 0:
        return 1.0
    zeros = [2.0 * math.pi * k / (2 * b + 1) for k in range(1, b + 1)]
    pts = [0.0] + zeros + [math.pi]

    def f(t):
        return abs(dirichlet_kernel(b, t))

    piece_tol = tol * math.pi / (len(pts) - 1)
    total = sum(
        _adaptive_simpson(f, pts[i], pts[i + 1], piece_tol) for i in range(len(pts) - 1)
    )
    return total / math.pi


def lebesgue_bound(b: int) -> float:
    """Closed-form majorant 3 + (4/pi^2) ln b of the Lebesgue constant."""
    if b < 1:
        raise ValueError("bound defined for b >= 1")
    return 3.0 + 4.0 / math.pi**2 * math.log(b)


@lru_cache(maxsize=None)
def total_variation(b: int, tol: float = 1e-12) -> float:
    """Total variation of D_b on [0, pi], exactly via the extrema of sin(mt)/sin t.

    Substituting t -> 2t turns D_b on [0, pi] into D(t) = sin(mt)/sin t
    on [0, pi/2] with m = 2b + 1.  D falls monotonically from m to 0 on
    the first arch, ends at |D(pi/2)| = 1, and has exactly one interior
    extremum in each zero gap (pi k/m, pi (k+1)/m); the variation is
    m + 2 * sum_k |D(t_k)| + 1 with each t_k found by bisecting
    g(t) = m cos(mt) sin t - sin(mt) cos t, the numerator of D'.
    """
    if b < 0:
        raise ValueError("kernel order must be nonnegative")
    if b == 0:
        return 0.0
    m = 2 * b + 1

    def f(t: float) -> float:
        return math.sin(m * t) / math.sin(t)

    def g(t: float) -> float:
        return m * math.cos(m * t) * math.sin(t) - math.sin(m * t) * math.cos(t)

    total = m + 1.0
    for k in range(1, (m - 3) // 2 + 1):
        lo = math.pi * k / m
        hi = math.pi * (k + 1) / m
        glo = g(lo)
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            gm = g(mid)
            if gm == 0.0:
                lo = hi = mid
            elif (glo > 0.0) == (gm > 0.0):
                lo, glo = mid, gm
            else:
                hi = mid
        total += 2.0 * abs(f(0.5 * (lo + hi)))
    return total


def total_variation_bound(b: int) -> float:
    """Closed-form majorant 1 + (2b + 1)(1 + gamma + ln b) of the variation."""
    if b < 1:
        raise ValueError("bound defined for b >= 1")
    return 1.0 + (2 * b + 1) * (1.0 + EULER_GAMMA + math.log(b))


@dataclass(frozen=True)
class KernelAnalysis:
    """Lebesgue constant and total variation of one kernel, with their majorants."""

    b: int
    lebesgue: float
    lebesgue_bound: float
    total_variation: float
    tv_bound: float


def analyze_kernel(b: int, tol: float = 1e-9) -> KernelAnalysis:
    return KernelAnalysis(
        b=b,
        lebesgue=lebesgue_constant(b, tol),
        lebesgue_bound=lebesgue_bound(b),
        total_variation=total_variation(b),
        tv_bound=total_variation_bound(b),
    )


@lru_cache(maxsize=None)
def _abs_kernel_minus_one_mean(b: int, tol: float = 1e-10) -> float:
    """(1/pi) * int_0^pi |D_b(t) - 1| dt, split at the zeros of D_b - 1.

    D_b(t) - 1 = 2 sum cos(kt) vanishes exactly at t = 2 pi j / b and at
    t = (2j + 1) pi / (b + 1); integrating piecewise between consecutive
    zeros keeps the integrand smooth for the quadrature.
    """
    cuts = {0.0, math.pi}
    j = 1
    while 2.0 * math.pi * j / b < math.pi:
        cuts.add(2.0 * math.pi * j / b)
        j += 1
    j = 0
    while (2 * j + 1) * math.pi / (b + 1) < math.pi:
        cuts.add((2 * j + 1) * math.pi / (b + 1))
        j += 1
    pts = sorted(cuts)

    def f(t):
        return abs(dirichlet_kernel(b, t) - 1.0)

    piece_tol = tol * math.pi / (len(pts) - 1)
    total = sum(
        _adaptive_simpson(f, pts[i], pts[i + 1], piece_tol) for i in range(len(pts) - 1)
    )
    return total / math.pi


def riemann_sum_gap(b: int, m: int, n: int) -> tuple[float, float, float, float]:
    """Gap between an n-point Riemann sum of |D_b(m pi t) - 1| and its mean.

    Returns (riemann_sum, integral, gap, bound) where
    riemann_sum = (1/n) sum_{r=1}^n |D_b(pi m r / n) - 1|, integral is
    the interval mean of |D_b - 1|, and gap <= bound = (m / n) * Var(D_b)
    because the composed integrand traverses the kernel's variation m
    times over the sample window.
    """
    if b < 0:
        raise ValueError("kernel order must be nonnegative")
    if m not in (2, 4):
        raise ValueError(f"step multiplier must be 2 or 4, got {m}")
    if n <= 2 * b:
        raise ValueError(f"need n > 2b, got n={n}, b={b}")
    if b == 0:
        return 0.0, 0.0, 0.0, 0.0
    r = np.arange(1, n + 1)
    values = np.abs(dirichlet_kernel(b, math.pi * m * r / n) - 1.0)
    riemann = float(values.sum()) / n
    integral = _abs_kernel_minus_one_mean(b)
    bound = m / n * total_variation(b)
    return riemann, integral, abs(riemann - integral), bound
