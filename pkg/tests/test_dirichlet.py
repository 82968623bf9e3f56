"""Kernel closed form vs cosine sum, quadrature vs scipy oracle, total
variation vs grid oracle, and the Riemann-gap bound."""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from circenergy.dirichlet import (
    EULER_GAMMA,
    analyze_kernel,
    dirichlet_kernel,
    lebesgue_bound,
    lebesgue_constant,
    riemann_sum_gap,
    total_variation,
    total_variation_bound,
)


def _kernel_cosine_sum(b, t):
    k = np.arange(1, b + 1)
    return 1.0 + 2.0 * np.cos(np.outer(np.atleast_1d(t), k)).sum(axis=1)


@pytest.mark.parametrize("b", [1, 2, 3, 8, 16, 64])
def test_closed_form_matches_cosine_sum(b):
    t = np.linspace(-7.0, 7.0, 4001)
    np.testing.assert_allclose(
        dirichlet_kernel(b, t), _kernel_cosine_sum(b, t), atol=1e-9 * (2 * b + 1)
    )


def test_kernel_special_values():
    assert dirichlet_kernel(2, 0.0) == pytest.approx(5.0)
    assert dirichlet_kernel(5, 0.0) == pytest.approx(11.0)
    assert dirichlet_kernel(5, 2.0 * math.pi) == pytest.approx(11.0)
    assert dirichlet_kernel(1, math.pi) == pytest.approx(-1.0)
    assert dirichlet_kernel(2, math.pi / 2) == pytest.approx(-1.0)
    assert dirichlet_kernel(0, 1.234) == 1.0


def test_kernel_even_and_periodic():
    t = np.linspace(0.01, 3.1, 200)
    np.testing.assert_allclose(dirichlet_kernel(7, -t), dirichlet_kernel(7, t), atol=1e-10)
    np.testing.assert_allclose(
        dirichlet_kernel(7, t + 2.0 * math.pi), dirichlet_kernel(7, t), atol=1e-8
    )


def test_kernel_rejects_negative_order():
    with pytest.raises(ValueError):
        dirichlet_kernel(-1, 0.5)


def test_lebesgue_closed_form_b1():
    # (1/pi) int_0^pi |1 + 2 cos t| dt = 1/3 + 2 sqrt(3)/pi
    assert lebesgue_constant(1) == pytest.approx(1.0 / 3.0 + 2.0 * math.sqrt(3.0) / math.pi, abs=1e-9)
    assert lebesgue_constant(0) == 1.0


@pytest.mark.parametrize("b", [1, 2, 5, 10, 25])
def test_lebesgue_against_scipy_quad(b):
    zeros = [2.0 * math.pi * k / (2 * b + 1) for k in range(1, b + 1)]
    oracle = quad(
        lambda t: abs(dirichlet_kernel(b, t)), 0.0, math.pi, points=zeros, limit=200
    )[0] / math.pi
    assert lebesgue_constant(b) == pytest.approx(oracle, abs=1e-8)


def test_lebesgue_increasing():
    values = [lebesgue_constant(b) for b in range(1, 41)]
    assert all(x < y for x, y in zip(values, values[1:]))


def test_lebesgue_bound_wide_range():
    for b in list(range(1, 61)) + [100, 150, 200]:
        assert lebesgue_constant(b) <= lebesgue_bound(b)
    # the log growth rate is right: bound stays within a constant of the value
    assert lebesgue_bound(200) - lebesgue_constant(200) < 3.0


def test_total_variation_b1_exact():
    # D_1 falls 3 -> -1 on [0, 2pi/3] and climbs back to 1 at pi
    assert total_variation(1) == pytest.approx(4.0, abs=1e-10)
    assert total_variation(0) == 0.0


@pytest.mark.parametrize("b", [2, 3, 10])
def test_total_variation_against_grid_oracle(b):
    t = np.linspace(0.0, math.pi, 400_001)
    values = dirichlet_kernel(b, t)
    grid_tv = float(np.abs(np.diff(values)).sum())
    exact = total_variation(b)
    assert grid_tv <= exact + 1e-9
    assert exact == pytest.approx(grid_tv, rel=1e-6)


def test_total_variation_bound_wide_range():
    for b in range(1, 101):
        assert total_variation(b) <= total_variation_bound(b)


def test_variation_grows_like_b_log_b():
    # Var(D_b) / (2b+1) should track ln b to within O(1)
    for b in (10, 50, 100):
        ratio = total_variation(b) / (2 * b + 1)
        assert math.log(b) - 1.0 < ratio < math.log(b) + 1.0 + EULER_GAMMA


def test_analyze_kernel_fields():
    analysis = analyze_kernel(7)
    assert analysis.b == 7
    assert 0 < analysis.lebesgue <= analysis.lebesgue_bound
    assert 0 < analysis.total_variation <= analysis.tv_bound


def test_mean_abs_kernel_minus_one_vs_lebesgue():
    # (1/pi) int |D_b - 1| differs from the Lebesgue constant by at most 1
    from circenergy.dirichlet import _abs_kernel_minus_one_mean

    for b in range(1, 31):
        mean = _abs_kernel_minus_one_mean(b)
        assert abs(mean - lebesgue_constant(b)) <= 1.0 + 1e-9


def test_riemann_gap_matches_quad_oracle():
    for b, m, n in [(3, 2, 500), (5, 4, 1000), (12, 2, 2000)]:
        riemann, integral, gap, bound = riemann_sum_gap(b, m, n)
        pieces = quad(
            lambda t: abs(dirichlet_kernel(b, t) - 1.0), 0.0, math.pi,
            points=[2.0 * math.pi * j / b for j in range(1, (b + 1) // 2 + 1) if 2 * j < b]
            + [(2 * j + 1) * math.pi / (b + 1) for j in range(b // 2 + 1) if (2 * j + 1) < b + 1],
            limit=400,
        )[0] / math.pi
        assert integral == pytest.approx(pieces, abs=1e-7)
        expected_sum = np.abs(dirichlet_kernel(b, math.pi * m * np.arange(1, n + 1) / n) - 1.0).mean()
        assert riemann == pytest.approx(float(expected_sum), rel=1e-12)
        assert gap == pytest.approx(abs(riemann - integral), rel=1e-12)
        assert bound == pytest.approx(m / n * total_variation(b), rel=1e-12)
        assert gap <= bound


def test_riemann_gap_validation_and_edge():
    assert riemann_sum_gap(0, 2, 100) == (0.0, 0.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        riemann_sum_gap(3, 3, 100)
    with pytest.raises(ValueError):
        riemann_sum_gap(60, 2, 100)


def test_bounds_reject_b_zero():
    with pytest.raises(ValueError):
        lebesgue_bound(0)
    with pytest.raises(ValueError):
        total_variation_bound(0)
