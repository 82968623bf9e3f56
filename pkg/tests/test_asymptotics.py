"""Limit constants against quadrature oracles and the published comparison values."""

import math

import pytest

from circenergy.asymptotics import (
    band_symmetric_limit,
    circulant_graph_limit,
    comparison_table,
    gnp_limit,
    is_hyperenergetic,
    kesten_energy,
    kesten_energy_numeric,
    regular_dense_limit,
    semicircle_abs_moment_numeric,
    tnd_average_bounds,
)
from circenergy.bounds import limit_energy


def test_circulant_graph_limit_values():
    assert circulant_graph_limit(0.5) == pytest.approx(1.0 / math.sqrt(math.pi), abs=1e-15)
    assert circulant_graph_limit(0.0) == 0.0
    assert circulant_graph_limit(1.0) == 0.0
    # matches the generic limit with sigma = sqrt(p(1-p))
    for p in (0.1, 0.3, 0.7):
        assert circulant_graph_limit(p) == pytest.approx(
            limit_energy(math.sqrt(p * (1 - p))), rel=1e-14
        )
    with pytest.raises(ValueError):
        circulant_graph_limit(1.5)


def test_gnp_limit_values():
    assert gnp_limit(0.5) == pytest.approx(4.0 / (3.0 * math.pi), abs=1e-15)
    assert gnp_limit(0.5) == pytest.approx(0.4244131815783876, abs=1e-12)


def test_band_symmetric_matches_semicircle_quadrature():
    for sigma in (0.5, 1.0, 2.0):
        closed = band_symmetric_limit(sigma)
        numeric = semicircle_abs_moment_numeric(sigma)
        assert closed == pytest.approx(8.0 * sigma / (3.0 * math.pi), rel=1e-15)
        assert numeric == pytest.approx(closed, abs=1e-8)


def test_kesten_closed_form_values():
    assert kesten_energy(2) == pytest.approx(4.0 / math.pi, abs=1e-15)
    assert kesten_energy(3) == pytest.approx(1.5254692923794966, rel=1e-12)
    with pytest.raises(ValueError):
        kesten_energy(1)


@pytest.mark.parametrize("d", [2, 3, 4, 7, 20, 400])
def test_kesten_closed_form_matches_quadrature(d):
    assert kesten_energy(d) == pytest.approx(kesten_energy_numeric(d), abs=1e-8)


def test_kesten_ratio_approaches_gnp_constant():
    # E/n ~ (8/(3 pi)) sqrt(d) for large d
    target = 8.0 / (3.0 * math.pi)
    assert abs(kesten_energy(400) / math.sqrt(400) - target) < 0.01
    # the ratio falls toward the dense constant from above
    ratios = [kesten_energy(d) / math.sqrt(d) for d in range(2, 50)]
    assert all(x > y > target for x, y in zip(ratios, ratios[1:]))


def test_regular_dense_limit():
    assert regular_dense_limit(10, 1000) == pytest.approx(
        8.0 / (3.0 * math.pi) * math.sqrt(10 * (1 - 0.01)), rel=1e-14
    )
    with pytest.raises(ValueError):
        regular_dense_limit(10, 10)


def test_tnd_average_bounds():
    lo, hi = tnd_average_bounds(3)
    assert lo == pytest.approx(1.0 / math.sqrt(3.0), abs=1e-15)
    assert hi == 1.0
    assert lo < hi


def test_is_hyperenergetic():
    # complete graph sits exactly at the threshold and does not count
    assert not is_hyperenergetic(8.0, 5)
    assert is_hyperenergetic(8.0 + 1e-9, 5)
    assert not is_hyperenergetic(4.0, 4)  # cycle C_4


def test_named_constant_ordering():
    # the true ordering of the constants this table compares
    chain = [
        4.0 / (3.0 * math.pi),          # G(n, 1/2) under n^(3/2)
        1.0 / math.sqrt(math.pi),       # circulant graph p=1/2 under n sqrt(b)
        1.0 / math.sqrt(3.0),           # tree-average lower end
        2.0 / math.sqrt(2.0 * math.pi), # gaussian band circulant, sigma=1/sqrt(2)
        8.0 / (3.0 * math.pi),          # band symmetric / Wigner, sigma=1
        1.0,                            # tree-average upper end
        2.0 / math.sqrt(math.pi),       # band circulant, sigma=1
    ]
    assert all(x < y for x, y in zip(chain, chain[1:]))
    # dense binomial vs band circulant at matched p: band wins per entry scale
    assert gnp_limit(0.5) < circulant_graph_limit(0.5)
    # band circulant beats band symmetric at the same entry variance
    assert band_symmetric_limit(1.0) < limit_energy(1.0)


def test_comparison_table_rows():
    rows = {row.ensemble: row for row in comparison_table(p=0.5, d=3, sigma=1.0)}
    assert set(rows) == {
        "circulant_graph", "gnp", "band_symmetric", "random_regular", "tree_average",
    }
    assert rows["circulant_graph"].constant == pytest.approx(1.0 / math.sqrt(math.pi), abs=1e-12)
    assert rows["tree_average"].constant_hi == 1.0
    assert rows["random_regular"].normalizer == "n"
    with_n = {row.ensemble for row in comparison_table(n=1000)}
    assert "dense_regular" in with_n
