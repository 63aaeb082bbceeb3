import json

import jsonschema
import pytest
from fastapi.testclient import TestClient

from starq.service import create_app
from starq.service import schemas as schema_module


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def _validate(payload, name):
    jsonschema.validate(payload, schema_module.bundle()[name])


def test_health(client):
    assert client.get("/health").json()["status"] == "ok"


def test_classify_endpoint(client):
    r = client.post("/classify", json={"weight": "(1,-1,1,-1)"})
    assert r.status_code == 200
    payload = r.json()
    _validate(payload, "verdict")
    assert payload["verdict"] == "bounded"
    assert payload["maximal"] == "(1,0,0,-1)"
    assert payload["word"] == [2]


def test_classify_parse_error(client):
    r = client.post("/classify", json={"weight": "oops"})
    assert r.status_code == 400
    payload = r.json()
    _validate(payload, "error")
    assert payload["error"]["code"] == "parse_error"


def test_orbit_json_and_dot(client):
    r = client.post("/orbit", json={"weight": "(0,0,0)"})
    assert r.status_code == 200
    payload = r.json()
    _validate(payload, "orbit")
    assert len(payload["vertices"]) == 4
    assert payload["maximal_vertices"] == ["(0,0,0)"]
    dot = client.post("/orbit", json={"weight": "(0,0,0)"}, params={"format": "dot"})
    assert dot.status_code == 200
    assert dot.text.startswith("digraph orbit {")
    assert '"(0,0,0)" -> "(-1,1,0)" [label="1"];' in dot.text


def test_orbit_cap(client):
    r = client.post("/orbit", json={"weight": "(3,2,1)", "cap": 2})
    assert r.json()["truncated"] is True


def test_orbit_cap_env_default(client, monkeypatch):
    monkeypatch.setenv("STARQ_ORBIT_CAP", "2")
    r = client.post("/orbit", json={"weight": "(3,2,1)"})
    assert r.json()["truncated"] is True
    monkeypatch.delenv("STARQ_ORBIT_CAP")
    r = client.post("/orbit", json={"weight": "(3,2,1)"})
    assert r.json()["truncated"] is False


def test_fock_primitive_check(client):
    r = client.post("/fock/check",
                    json={"n": 3, "samples": 5, "checks": ["primitive"]})
    payload = r.json()
    assert payload["passed"] is True
    assert payload["reports"][0]["check"] == "primitive"


def test_enumerate_endpoint(client):
    r = client.post("/enumerate", json={"weight": "(1,0,0,0,0,-1,-2)"})
    payload = r.json()
    _validate(payload, "enumerate")
    assert payload["count"] == 25
    err = client.post("/enumerate", json={"weight": "(-1/2,1/2,1/2)"})
    assert err.status_code == 400
    assert err.json()["error"]["code"] == "stabilizer_too_large"


def test_families_endpoint(client):
    r = client.post("/families", json={"weight": "(1,0,0,0,0,-1,-2)"})
    payload = r.json()
    _validate(payload, "families")
    assert len(payload["families"]) == 4
    assert payload["families"][1]["regularities"] == [2, 3, 4]
    dot = client.post(
        "/families", json={"weight": "(c,0,0,0)"}, params={"format": "dot"}
    )
    assert "dir=both" in dot.text


def test_gl_endpoints(client):
    r = client.post("/gl/classify", json={"weight": "(-1,1,0)"})
    payload = r.json()
    _validate(payload, "verdict")
    assert payload["verdict"] == "bounded" and payload["type"] == "1"
    r = client.post("/gl/arrow", json={"weight": "(2,0,0,0)", "label": 2})
    assert r.json()["target"] == "(2,-1,1,0)"
    r = client.post("/gl/arrow", json={"weight": "(2,0,0,0)", "label": 9})
    assert r.status_code == 400


def test_degree_endpoint(client):
    r = client.post("/degree", json={"weight": "(0,-1,-1,4)"})
    payload = r.json()
    _validate(payload, "degree")
    assert payload["degree"] == 3
    err = client.post("/degree", json={"weight": "(3,2,1)"})
    assert err.status_code == 400
    assert err.json()["error"]["code"] == "wrong_type"


def test_jh_endpoint(client):
    r = client.post("/jh", json={"n": 4, "c": "c", "k": 3})
    payload = r.json()
    _validate(payload, "jh")
    row = payload["rows"][0]
    assert row["module"] == "(0,0,0,c)"
    assert {e["weight"] for e in row["entries"]} == {
        "(0,0,0,c)", "(0,0,-1,c+1)", "(0,-1,-1,c+2)", "(-1,-1,-1,c+3)"
    }
    table = client.post("/jh", json={"n": 4, "c": "c", "k": 3},
                        params={"format": "table"})
    assert "(0,0,-1,c+1)^2" in table.text


def test_fock_check_endpoint(client):
    r = client.post("/fock/check", json={"n": 3, "samples": 10})
    payload = r.json()
    _validate(payload, "fock_check")
    assert payload["passed"] is True
    assert {rep["check"] for rep in payload["reports"]} == {
        "degree", "bracket", "odd_symmetry"
    }


def test_cuspidal_endpoint(client):
    r = client.post(
        "/cuspidal/validate",
        json={"weight": "(0,2,0)", "twists": ["1/2", "1/2"]},
    )
    payload = r.json()
    _validate(payload, "cuspidal")
    assert payload["anchor"] == "(1,3/2,-1/2)"
    err = client.post(
        "/cuspidal/validate", json={"weight": "(0,2,0)", "twists": ["1", "c"]}
    )
    assert err.status_code == 400
    assert err.json()["error"]["code"] == "integral_twist"


def test_selftest_endpoint_subset(client):
    r = client.post("/selftest", json={"criteria": [1, 2, 3]})
    payload = r.json()
    _validate(payload, "selftest")
    assert payload["passed"] is True
    assert [res["criterion"] for res in payload["results"]] == [1, 2, 3]


def test_shipped_schemas_match_models():
    assert schema_module.shipped() == schema_module.render()


def test_deterministic_responses(client):
    a = client.post("/jh", json={"n": 4, "c": "2", "k": 2}).content
    b = client.post("/jh", json={"n": 4, "c": "2", "k": 2}).content
    assert a == b


def test_schemas_endpoint(client):
    payload = client.get("/schemas").json()
    assert set(payload) == set(schema_module.bundle())
