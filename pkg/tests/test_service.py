from fastapi.testclient import TestClient

from sigmahull.service.app import app

client = TestClient(app)

REP3 = {"field": {"p": 3, "e": 1}, "generator": {"rows": 1, "cols": 3, "entries": [1, 1, 1]}}
REP3_DUAL = {"field": {"p": 3, "e": 1}, "generator": {"rows": 2, "cols": 3, "entries": [1, 0, 2, 0, 1, 2]}}
EUCLID3 = {"s": 1, "perm": [1, 2, 3], "diag": [1, 1, 1]}
MP_SPEC = {
    "A": {"rows": 2, "cols": 2, "entries": [1, 1, 1, 2]},
    "constituents": [REP3, REP3_DUAL],
    "sigma": {
        "tau_hat": {"perm": [1, 2], "diag": [1, 1]},
        "tau_tilde": {"perm": [1, 2, 3], "diag": [1, 1, 1]},
        "s": 1,
    },
}


def test_health():
    assert client.get("/health").json() == {"status": "ok"}


def test_hull_endpoint():
    res = client.post("/hull", json={"code": REP3, "sigma": EUCLID3})
    assert res.status_code == 200
    body = res.json()
    assert body["hull_dim"] == 1
    assert body["hull_basis"]["entries"] == [1, 1, 1]
    assert (body["n"], body["k"], body["d"]) == (3, 1, 3)


def test_dual_endpoint():
    res = client.post("/dual", json={"code": REP3, "sigma": EUCLID3})
    assert res.status_code == 200
    body = res.json()
    assert (body["n"], body["k"], body["d"]) == (3, 2, 2)
    # the emitted code re-parses through the same endpoint (round trip)
    again = client.post("/dual", json={"code": body["code"], "sigma": EUCLID3})
    assert again.status_code == 200
    assert again.json()["code"]["generator"] == REP3["generator"]


def test_mp_endpoints():
    res = client.post("/mp/build", json={"spec": MP_SPEC})
    assert res.status_code == 200
    body = res.json()
    assert (body["n"], body["k"], body["d"]) == (6, 3, 3)
    assert body["claimed_bound"] == 2
    assert body["nonsingular_by_columns"] is True

    res = client.post("/mp/hull", json={"spec": MP_SPEC})
    assert res.json() == {"hull_dim": 2, "terms": [1, 1], "rho": [1, 2], "alphas": [2, 2]}

    res = client.post("/mp/check-dc", json={"spec": MP_SPEC})
    assert res.json() == {"property": "sigma_dual_containing", "result": False}
    res = client.post("/mp/check-so", json={"spec": MP_SPEC})
    assert res.json() == {"property": "sigma_self_orthogonal", "result": False}

    so_spec = dict(MP_SPEC, constituents=[REP3, REP3])
    res = client.post("/mp/check-so", json={"spec": so_spec})
    assert res.json()["result"] is True


def test_steer_endpoint():
    res = client.post(
        "/steer",
        json={"code": REP3, "sigma": EUCLID3, "target_h": 0, "code2": REP3},
    )
    assert res.status_code == 200
    body = res.json()
    assert body["achieved_h"] == 0
    assert len(body["witness"]["perm"]) == 3


def test_eaqecc_endpoint():
    res = client.post(
        "/eaqecc", json={"source": "hull", "code": REP3, "sigma": EUCLID3}
    )
    assert res.status_code == 200
    records = res.json()["records"]
    assert len(records) == 2
    assert {r["provenance"] for r in records} == {"hull(1)", "hull(2)"}

    res = client.post("/eaqecc", json={"source": "mp", "spec": MP_SPEC})
    body = res.json()
    assert len(body["records"]) == 6
    assert body["meta"]["hull_dim"] == 2
    # deterministic order: by h then provenance
    keys = [(r["h"], r["provenance"]) for r in body["records"]]
    assert keys == sorted(keys)


def test_verify_endpoint():
    res = client.post("/verify", json={"suite": "cor32", "trials": 10, "seed": 4})
    body = res.json()
    assert body["passed"] is True and body["instances"] == 10
    assert body["text"].startswith("suite: cor32")


def test_error_mapping():
    # domain error -> 400 with the exception kind
    res = client.post(
        "/steer",
        json={
            "code": {"field": {"p": 2}, "generator": {"rows": 1, "cols": 2, "entries": [1, 1]}},
            "sigma": {"s": 1, "perm": [1, 2], "diag": [1, 1]},
            "target_h": 0,
        },
    )
    assert res.status_code == 400
    assert res.json()["error"] == "FieldTooSmall"

    # validation error -> 422
    res = client.post("/hull", json={"code": REP3})
    assert res.status_code == 422

    # incompatible sizes -> 400 Incompatible
    res = client.post(
        "/hull", json={"code": REP3, "sigma": {"s": 1, "perm": [1, 2], "diag": [1, 1]}}
    )
    assert res.status_code == 400
    assert res.json()["error"] == "Incompatible"

    # unknown verify suite -> 400 ParseError
    res = client.post("/verify", json={"suite": "nope"})
    assert res.status_code == 400
    assert res.json()["error"] == "ParseError"
