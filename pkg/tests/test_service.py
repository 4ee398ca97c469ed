"""HTTP layer: routing, payload shapes, error mapping."""

import pytest
from fastapi.testclient import TestClient

from davenport import __version__
from davenport.errors import ComputationError
from davenport.service import handlers
from davenport.service.app import create_app


@pytest.fixture()
def client():
    return TestClient(create_app())


class TestHealth:
    def test_reports_version(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        assert response.json() == {"status": "ok", "version": __version__}


class TestComputeRoutes:
    def test_theorem_table(self, client):
        response = client.post("/table/theorem1", json={"jmax": 4})
        assert response.status_code == 200
        body = response.json()
        assert body["schedule"] == "mrrw1"
        assert len(body["rows"]) == 4
        assert body["rows"][1]["upper"] == pytest.approx(1.39562803, abs=1e-6)

    def test_bounds_eval_with_alias(self, client):
        response = client.post("/bounds/eval", json={"kind": "eb", "delta": 0.5})
        assert response.status_code == 200
        assert response.json() == {"kind": "elias-bassalygo", "delta": 0.5, "value": 0.0}

    def test_solve(self, client):
        response = client.post("/solve", json={"p": 1.0, "kind": "gv"})
        assert response.status_code == 200
        assert response.json()["total_display"] == "1.294"

    def test_exact_davenport(self, client):
        response = client.post("/exact/davenport", json={"rank": 3, "j": 1})
        assert response.status_code == 200
        assert response.json() == {"r": 3, "j": 1, "value": 4, "witness": [1, 2, 4]}

    def test_exact_decompose(self, client):
        response = client.post("/exact/decompose", json={"rank": 2, "elements": [1, 1, 2, 2]})
        assert response.status_code == 200
        body = response.json()
        assert body["max_disjoint"] == 2
        assert len(body["witness"]) == 2

    def test_counting_ratio(self, client):
        response = client.post(
            "/counting/ratio", json={"n": 12, "rank": 8, "j": 2, "mode": "exact"}
        )
        assert response.status_code == 200
        assert response.json()["exact_ratio"] == {
            "numerator": "177147", "denominator": "26611",
        }

    def test_counting_lower(self, client):
        response = client.post("/counting/lower", json={"rank": 3, "j": 2})
        assert response.status_code == 200
        assert response.json()["value"] == 5

    def test_corollary(self, client):
        response = client.post("/corollary", json={"rank": 100, "n": 2})
        assert response.status_code == 200
        body = response.json()
        assert body["value"] == pytest.approx(139.562803, abs=1e-3)
        assert body["asymptotic_in_r"] is True

    def test_verify_pcm(self, client):
        response = client.post("/verify/pcm", json={"trials": 6, "seed": 2})
        assert response.status_code == 200
        body = response.json()
        assert body["mismatches"] == 0
        assert body["failures"] == []


class TestErrorMapping:
    def test_parameter_error_is_400_with_kind(self, client):
        response = client.post("/exact/davenport", json={"rank": 9, "j": 1})
        assert response.status_code == 400
        detail = response.json()["detail"]
        assert detail["error_kind"] == "parameter"
        assert "rank" in detail["message"]

    def test_computation_error_is_400_with_kind(self, client, monkeypatch):
        def explode(req):
            raise ComputationError("budget exhausted")

        monkeypatch.setattr(handlers, "solve", explode)
        response = client.post("/solve", json={"p": 1.0, "kind": "hamming"})
        assert response.status_code == 400
        detail = response.json()["detail"]
        assert detail["error_kind"] == "computation"
        assert detail["message"] == "budget exhausted"

    def test_request_validation_stays_422(self, client):
        response = client.post("/exact/davenport", json={"rank": 0, "j": 1})
        assert response.status_code == 422

    def test_unknown_kind_maps_to_parameter(self, client):
        response = client.post("/bounds/eval", json={"kind": "nosuch", "delta": 0.1})
        assert response.status_code == 400
        assert response.json()["detail"]["error_kind"] == "parameter"
