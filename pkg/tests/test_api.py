import config


def test_health_check(client):
    response = client.get("/")
    assert response.status_code == 200
    assert response.json()["status"] == "ok"


def test_strata_endpoint(client):
    response = client.get("/api/v1/strata", params={"n": 4, "summary": True})
    assert response.status_code == 200
    assert response.json()["payload"]["total"] == 36


def test_out_of_range_is_422(client):
    response = client.get("/api/v1/strata", params={"n": 9})
    assert response.status_code == 422
    assert "9" in response.json()["detail"]


def test_fundamental_endpoint(client):
    payload = client.get("/api/v1/fundamental").json()["payload"]
    assert payload["orbit_count"] == 13


def test_moment_endpoint(client):
    body = {"matrix": [["1", "0"], ["0", "1"], ["1", "1"], ["1", "2"], ["1", "3"]]}
    data = client.post("/api/v1/moment", json=body).json()
    assert data["moment"] == ["5/8", "1/6", "7/24", "7/24", "5/8"]
    assert data["dmu_rank"] == 4
    assert data["polytope"]["type"] == "HYPERSIMPLEX"


def test_moment_from_plucker_and_sigma(client):
    sigma = client.post("/api/v1/moment", json={"sigma": [[1, 2], [1, 3], [2, 3]]}).json()
    assert sigma["regular_point"] is False
    plucker = client.post("/api/v1/moment", json={"plucker": sigma["plucker"]}).json()
    assert plucker["moment"] == sigma["moment"]


def test_moment_needs_exactly_one_source(client):
    assert client.post("/api/v1/moment", json={}).status_code == 422
    body = {"sigma": [[1, 2]], "matrix": [["1", "0"], ["0", "1"]]}
    assert client.post("/api/v1/moment", json=body).status_code == 422


def test_params_endpoints(client):
    checked = client.get("/api/v1/params/check-transitions", params={"samples": 5}).json()
    assert not any(checked["payload"]["failures"].values())

    virtual = client.get("/api/v1/params/virtual", params={"sigma": "12,13,14,15,23,24,25,34,35"}).json()
    assert virtual["payload"]["param_dim"] == 1

    embedded = client.post("/api/v1/params/embed", json={"triple": ["(2:1)", "(3:1)", "(3:2)"]}).json()
    assert embedded["payload"]["embedding"]["valid"] is True


def test_homology_endpoint(client):
    data = client.get("/api/v1/homology", params={"space": "X"}).json()["payload"]
    assert [d["degree"] for d in data["degrees"]] == [0, 6, 8]
    assert client.get("/api/v1/homology", params={"space": "nowhere"}).status_code == 422


def test_token_is_enforced_when_configured(client, monkeypatch):
    monkeypatch.setattr(config, "AUTH_TOKEN", "secret")
    assert client.get("/api/v1/fundamental").status_code == 401
    bad = client.get("/api/v1/fundamental", headers={"Authorization": "Bearer wrong"})
    assert bad.status_code == 401
    assert bad.json()["detail"] == "Invalid token."
    good = client.get("/api/v1/fundamental", headers={"Authorization": "Bearer secret"})
    assert good.status_code == 200
    assert client.get("/").status_code == 200
