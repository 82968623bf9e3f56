"""HTTP service: endpoint behavior, error mapping, and parity with the runners."""

import math

import pytest
from fastapi.testclient import TestClient

from circenergy import __version__
from circenergy.runners import run_expected_energy
from circenergy.schemas import ExpectedEnergyRequest
from circenergy.service import app

client = TestClient(app)


def test_health():
    response = client.get("/v1/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok", "version": __version__}


def test_energy_endpoint():
    response = client.post("/v1/energy", json={"n": 8, "coefficients": [1, 1]})
    assert response.status_code == 200
    body = response.json()
    assert body["version"] == "1"
    assert body["method"] == "direct"
    assert body["energy"] == pytest.approx(13.656854249492378)
    assert "eigenvalues" not in body  # excluded when not requested


def test_energy_endpoint_with_spectrum():
    response = client.post(
        "/v1/energy", json={"n": 8, "coefficients": [1, 1], "include_spectrum": True}
    )
    body = response.json()
    assert len(body["eigenvalues"]) == 8
    assert sum(abs(v) for v in body["eigenvalues"]) == pytest.approx(body["energy"])


def test_argument_error_maps_to_400():
    response = client.post("/v1/energy", json={"n": 4, "coefficients": [1, 1]})
    assert response.status_code == 400
    assert "band width" in response.json()["detail"]


def test_schema_error_maps_to_422():
    response = client.post("/v1/energy", json={"coefficients": [1, 1]})
    assert response.status_code == 422


def test_expected_energy_exact_endpoint():
    response = client.post(
        "/v1/expected-energy", json={"method": "exact", "n": 8, "b": 2}
    )
    body = response.json()
    assert body["raw_mean"] == pytest.approx(5.0 + 2.0 * math.sqrt(2.0))
    assert body["limit"] == pytest.approx(0.5641895835477563)


def test_expected_energy_parity_with_runner():
    request = {"n": 128, "b": 8, "trials": 60, "seed": 42}
    via_http = client.post("/v1/expected-energy", json=request).json()
    via_runner = run_expected_energy(ExpectedEnergyRequest(**request)).model_dump()
    assert via_http == via_runner


def test_bounds_endpoint():
    response = client.post(
        "/v1/bounds", json={"theorem": 1, "n": 4096, "b": 256, "dist": "bernoulli:0.5"}
    )
    body = response.json()
    assert body["total"] == pytest.approx(5.0916606618141484, rel=1e-10)
    response = client.post(
        "/v1/bounds",
        json={"theorem": 2, "b": 128, "delta": 1.3862269254527579, "support_bound": 1.0},
    )
    assert response.json()["terms"]["prob_bound"] == pytest.approx(0.0732625555549367, rel=1e-8)


def test_bounds_degenerate_rejected():
    response = client.post(
        "/v1/bounds", json={"theorem": 1, "n": 64, "b": 4, "dist": "bernoulli:1"}
    )
    assert response.status_code == 400
    assert "sigma" in response.json()["detail"]


def test_dirichlet_endpoint():
    response = client.post("/v1/dirichlet", json={"b_lo": 1, "b_hi": 3})
    rows = response.json()["rows"]
    assert [row["b"] for row in rows] == [1, 2, 3]
    assert rows[0]["total_variation"] == pytest.approx(4.0)


def test_deviation_endpoint():
    response = client.post(
        "/v1/deviation",
        json={"n": 64, "b": 8, "trials": 50, "deltas": [0.1, 2.0], "seed": 3},
    )
    body = response.json()
    assert len(body["points"]) == 2
    assert body["points"][1]["empirical"] == 0.0


def test_convergence_endpoint():
    response = client.post(
        "/v1/convergence", json={"schedule": [[64, 4], [128, 8]], "trials": 40}
    )
    body = response.json()
    assert [point["n"] for point in body["points"]] == [64, 128]
    assert body["limit"] == pytest.approx(0.5641895835477563)


def test_compare_endpoint():
    response = client.post("/v1/compare", json={})
    names = {row["ensemble"] for row in response.json()["rows"]}
    assert "circulant_graph" in names and "random_regular" in names


def test_toeplitz_gap_endpoint():
    response = client.post(
        "/v1/toeplitz-gap", json={"n": 64, "b": 4, "trials": 5, "seed": 2}
    )
    body = response.json()
    assert body["thm3_exact"] <= body["thm3_coarse"]
    assert body["mean_normalized_gap"] >= 0.0
