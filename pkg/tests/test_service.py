"""HTTP service endpoints against the in-process run layer."""

import json

import pytest
from fastapi.testclient import TestClient

from conical_ab.runs import RunConfig, run
from conical_ab.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


class TestHealth:
    def test_health(self, client):
        resp = client.get("/v1/health")
        assert resp.status_code == 200
        assert resp.json() == {"status": "ok"}


class TestClassifyEndpoint:
    def test_rows(self, client):
        resp = client.post("/v1/classify", json={"alpha": 2.0, "m_min": -2, "m_max": 2})
        assert resp.status_code == 200
        body = resp.json()
        assert body["exit_code"] == 0
        assert len(body["rows"]) == 5

    def test_matches_in_process_run(self, client):
        resp = client.post("/v1/classify", json={"alpha": 0.6, "phi": 0.25, "m": 0})
        local = run(RunConfig(command="classify", alpha=0.6, phi=0.25, m=0))
        assert resp.json()["rows"] == json.loads(json.dumps(local.rows))

    def test_validation_error(self, client):
        assert client.post("/v1/classify", json={"alpha": -1.0, "m": 0}).status_code == 422

    def test_m_range_requires_both_ends(self, client):
        assert client.post("/v1/classify", json={"alpha": 2.0, "m_min": -2}).status_code == 422


class TestRingEndpoint:
    def test_half_flux_pair(self, client):
        resp = client.post(
            "/v1/ring",
            json={"alpha": 1.0, "phi": 0.5, "mass": 1.0, "radius": 1.0,
                  "m_min": -1, "m_max": 0},
        )
        rows = resp.json()["rows"]
        assert [r["energy"] for r in rows] == [0.125, 0.125]


class TestBoundEndpoint:
    def test_no_bound_state_is_http_200_exit_3(self, client):
        resp = client.post("/v1/bound", json={"alpha": 1.5, "m": 0})
        assert resp.status_code == 200
        body = resp.json()
        assert body["exit_code"] == 3
        assert any("|1 - alpha| >= 1" in d["message"] for d in body["diagnostics"])

    def test_bound_both_modes(self, client):
        resp = client.post("/v1/bound", json={"alpha": 2.0, "m": 0, "mode": "both"})
        body = resp.json()
        assert body["exit_code"] == 0
        assert {r["source"] for r in body["rows"]} == {"numeric_root", "closed_form"}

    def test_gamma_sign_accepted(self, client):
        minus = client.post("/v1/bound", json={"alpha": 0.6, "m": 0, "mode": "root"}).json()
        plus = client.post(
            "/v1/bound", json={"alpha": 0.6, "m": 0, "mode": "root", "gamma_sign": "plus"}
        ).json()
        assert minus["rows"][0]["energy"] != plus["rows"][0]["energy"]


class TestOracleEndpoint:
    def test_small_grid_run(self, client):
        resp = client.post(
            "/v1/oracle",
            json={"alpha": 2.0, "m": 0, "grid_n": 1200, "a_values": [1.0]},
        )
        body = resp.json()
        assert body["exit_code"] == 0
        assert len(body["rows"]) == 1
        assert abs(body["rows"][0]["relative_gap"]) < 1e-3


class TestSweepEndpoint:
    def test_sweep(self, client):
        resp = client.post(
            "/v1/sweep",
            json={"sweep_param": "alpha", "sweep_start": 2.0, "sweep_stop": 3.0,
                  "sweep_count": 3, "m": 0},
        )
        body = resp.json()
        assert body["exit_code"] == 0
        assert [r["value"] for r in body["rows"]] == [2.0, 2.5, 3.0]
