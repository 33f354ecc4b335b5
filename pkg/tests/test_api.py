from fastapi.testclient import TestClient

from main import app

client = TestClient(app)


def test_health():
    r = client.get("/api/health")
    assert r.status_code == 200
    assert r.json()["status"] == "ok"


def test_construct_order_twelve():
    r = client.post("/api/construct", json={"order": 12})
    assert r.status_code == 200
    body = r.json()
    assert body["method"] == "paley-turyn"
    assert len(body["rows"]) == 12
    assert body["report"]["is_hadamard"] and body["report"]["is_symmetric"]
    assert body["ingredients"] == ["turyn 3 0++ -++ # ingredient"]


def test_construct_unresolved_order():
    r = client.post("/api/construct", json={"order": 68})
    assert r.status_code == 404


def test_construct_bad_method():
    r = client.post("/api/construct", json={"order": 12, "method": "magic"})
    assert r.status_code == 400


def test_search():
    r = client.post("/api/search", json={"kind": "doptimal", "n": 3, "limit": 1})
    assert r.status_code == 200
    assert r.json()["count"] == 1


def test_search_over_budget():
    r = client.post("/api/search", json={"kind": "propus", "n": 15, "budget": 100})
    assert r.status_code == 413


def test_verify_catalog_text():
    r = client.post("/api/verify", json={"text": "turyn 3 0++ -++\nturyn 3 0++ +++\n"})
    body = r.json()
    assert body["kind"] == "catalog"
    assert body["accepted"] == 1
    assert not body["ok"]


def test_verify_matrix_text():
    r = client.post("/api/verify", json={"text": "++\n+-\n"})
    body = r.json()
    assert body["kind"] == "matrix" and body["ok"]
    assert body["report"]["is_hadamard"]
