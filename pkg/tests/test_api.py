from fastapi.testclient import TestClient

from app.main import app

client = TestClient(app)

HOLE = "1 0\n0 1\n-1 1\n-1 0\n0 -1\n1 -1\n"


def test_health():
    """Test the health endpoint."""
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "healthy"}


def test_gzz_from_preset():
    """Test computing GZZ from a preset."""
    response = client.post("/api/v1/polynomials/gzz", json={"preset": "zigzag:3"})
    assert response.status_code == 200

    data = response.json()
    assert data["polynomial"] == "5+5x+x^2+2y"
    assert data["graph"]["family"] == "benzenoid"
    assert data["graph"]["hexagons"] == 3


def test_gzz_from_text():
    """Test computing GZZ from uploaded file contents."""
    response = client.post("/api/v1/polynomials/gzz", json={"text": "0 0\n1 0\n", "family": "benzenoid"})
    assert response.status_code == 200
    assert response.json()["polynomial"] == "3+2x+y"


def test_zz_and_gc():
    """Test the ZZ slice and the GC polynomial."""
    zz = client.post("/api/v1/polynomials/zz", json={"preset": "zigzag:3"})
    assert zz.json()["polynomial"] == "5+5x+x^2"
    gc = client.post("/api/v1/polynomials/gc", json={"preset": "zigzag:3"})
    assert gc.json()["polynomial"] == "5+5x+x^2+2y"


def test_request_needs_one_source():
    """Test that a request with both or neither source is rejected."""
    assert client.post("/api/v1/polynomials/gzz", json={}).status_code == 422
    both = {"preset": "linear:1", "text": "0 0\n"}
    assert client.post("/api/v1/polynomials/gzz", json=both).status_code == 422


def test_hole_is_bad_request():
    """Test that a benzenoid with a hole returns 400."""
    response = client.post("/api/v1/polynomials/gzz", json={"text": HOLE})
    assert response.status_code == 400
    assert response.json()["detail"].startswith("HoleDetected")


def test_budget_is_413():
    """Test that exceeding a budget returns 413."""
    response = client.post("/api/v1/polynomials/gc", json={"preset": "c24", "max_resonance_vertices": 5})
    assert response.status_code == 413
    assert "BudgetExceeded" in response.json()["detail"]
    response = client.post("/api/v1/verification", json={"preset": "linear:3", "max_vertices": 4})
    assert response.status_code == 413


def test_verification_report():
    """Test a full verification run."""
    response = client.post("/api/v1/verification", json={"preset": "pyrene"})
    assert response.status_code == 200

    report = response.json()
    assert report["equal"] is True
    assert report["passed"] is True
    assert report["matchings"] == 6
    assert report["bijection"]["passed"] is True
    assert report["four_cycles"]["passed"] is True
    assert set(report["timings_ms"]) >= {"matchings", "resonance", "gzz", "gc", "bijection", "four_cycles"}


def test_resonance_graph_export():
    """Test the JSON resonance graph of naphthalene."""
    response = client.post("/api/v1/resonance-graph", json={"preset": "linear:2"})
    assert response.status_code == 200

    data = response.json()
    assert data["vertices"] == 3
    assert len(data["nodes"]) == 3
    assert len(data["edges"]) == 2
    assert all(len(node["edges"]) == 5 for node in data["nodes"])


def test_list_presets():
    """Test listing preset names."""
    response = client.get("/api/v1/presets")
    assert response.status_code == 200
    assert {"linear:1", "pyrene", "c20", "tube:2,2,1"} <= set(response.json())


def test_get_preset():
    """Test resolving a tubulene preset."""
    response = client.get("/api/v1/presets/tube:2,2,1")
    assert response.status_code == 200

    data = response.json()
    assert data["family"] == "tubulene"
    assert data["vertices"] == 16
    assert data["hexagons"] == 4
    assert data["text"] == "2 2 1\n"


def test_unknown_preset_is_404():
    """Test that an unknown preset returns 404."""
    response = client.get("/api/v1/presets/graphene")
    assert response.status_code == 404


def test_bad_chiral_vector_is_400():
    """Test that an invalid chiral vector returns 400."""
    response = client.get("/api/v1/presets/tube:1,0,1")
    assert response.status_code == 400
