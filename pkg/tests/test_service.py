"""Tests for the FastAPI service endpoints."""

import math

import pytest
from fastapi.testclient import TestClient

from gyrospec.service.app import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


SAMPLE_SYSTEM = {
    "masses": [1.0, 1.0, 1.0],
    "positions": [
        [0.0, 1.0, 0.0, 0.0],
        [0.0, -0.5, 0.8660254037844387, 0.0],
        [0.0, -0.5, -0.8660254037844387, 0.0],
    ],
    "momenta": [
        [1.0770329614269007, 0.0, 0.4, 0.0],
        [1.0770329614269007, -0.3464101615137755, -0.2, 0.0],
        [1.0770329614269007, 0.3464101615137755, -0.2, 0.0],
    ],
    "units": "natural",
}


class TestHealth:
    def test_health(self, client):
        resp = client.get("/health")
        assert resp.status_code == 200
        assert resp.json()["status"] == "ok"


class TestSpectrumEndpoint:
    def test_kg_defaults(self, client):
        resp = client.post("/spectrum", json={"command": "kg", "l_max": 1})
        assert resp.status_code == 200
        body = resp.json()
        assert body["meta"]["command"] == "kg"
        row = next(r for r in body["rows"] if r["l"] == 1 and r["m"] == "0" and r["sign"] == "+")
        assert abs(row["E_closed"] - math.sqrt(3.0)) < 1e-12

    def test_dirac_spherical(self, client):
        resp = client.post("/spectrum", json={"command": "dirac", "l_max": 1})
        assert resp.status_code == 200
        mags = sorted({round(abs(r["E_numeric"]), 9) for r in resp.json()["rows"] if r["l"] == 1})
        assert mags == [round(math.sqrt(2.0), 9), round(math.sqrt(5.0), 9)]

    def test_nonabelian_request(self, client):
        resp = client.post(
            "/spectrum",
            json={
                "command": "dirac",
                "l_max": 1,
                "variant": "nonabelian",
                "v": [0.6, 0.0, 0.8],
                "params": {"inertia": [1.0, 1.0, 2.0]},
            },
        )
        assert resp.status_code == 200
        assert all(r["rel_diff"] <= 1e-10 for r in resp.json()["rows"])

    def test_bad_unit_vector_is_400(self, client):
        resp = client.post(
            "/spectrum",
            json={"command": "dirac", "variant": "nonabelian", "v": [1.0, 1.0, 0.0]},
        )
        assert resp.status_code == 400
        assert "unit" in resp.json()["detail"]

    def test_nonpositive_moment_is_400(self, client):
        resp = client.post(
            "/spectrum", json={"command": "kg", "params": {"inertia": [0.0, 1.0, 1.0]}}
        )
        assert resp.status_code == 400

    def test_l_max_validation_is_422(self, client):
        resp = client.post("/spectrum", json={"command": "kg", "l_max": 99})
        assert resp.status_code == 422


class TestScanEndpoint:
    def test_mass_scan(self, client):
        resp = client.post(
            "/scan",
            json={"axis": "mass", "start": 0.5, "stop": 1.5, "step": 0.5, "l_max": 0},
        )
        assert resp.status_code == 200
        rows = resp.json()["rows"]
        assert sorted({r["scan_value"] for r in rows}) == [0.5, 1.0, 1.5]

    def test_v3_scan_uses_dirac(self, client):
        resp = client.post(
            "/scan",
            json={
                "axis": "v3", "start": 0.0, "stop": 1.0, "step": 1.0, "l_max": 1,
                "params": {"inertia": [1.0, 1.0, 2.0]},
            },
        )
        assert resp.status_code == 200
        assert any(r["branch"] is not None for r in resp.json()["rows"])


class TestValidateEndpoint:
    def test_small_run_passes(self, client):
        resp = client.post(
            "/validate", json={"l_max": 4, "n_max": 4, "n_systems": 25, "seed": 7}
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["passed"] is True
        assert all(check["pass"] for check in body["checks"])
        assert "ladder_convention" in body["conventions"]
        assert abs(body["conventions"]["spin_orbit_fitted_strength"] - 2.0) < 1e-9


class TestCovariantEndpoint:
    def test_sample_triangle(self, client):
        resp = client.post(
            "/covariant",
            json={"system": SAMPLE_SYSTEM, "boost_velocity": [0.4, 0.0, 0.1]},
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["passed"] is True
        names = {check["name"] for check in body["checks"]}
        assert {"jacobi_identity", "W_dot_P", "B_dot_P", "mass_shell_rest",
                "mass_shell_boosted"} <= names
        assert "principal_moments" in body["quantities"]

    def test_degenerate_dumbbell_reported_as_expected(self, client):
        doc = {
            "masses": [1.0, 1.0],
            "positions": [[0.0, 1.0, 0.0, 0.0], [0.0, -1.0, 0.0, 0.0]],
            "momenta": [[1.0, 0.0, 0.0, 0.0], [1.0, 0.0, 0.0, 0.0]],
            "units": "natural",
        }
        resp = client.post("/covariant", json={"system": doc})
        assert resp.status_code == 200
        body = resp.json()
        assert body["passed"] is True
        assert body["quantities"].get("degenerate_inertia") is True
        assert any(c["name"] == "degenerate_inertia_detected" and c["passed"]
                   for c in body["checks"])

    def test_bad_units_rejected(self, client):
        doc = dict(SAMPLE_SYSTEM, units="si")
        resp = client.post("/covariant", json={"system": doc})
        assert resp.status_code == 422
