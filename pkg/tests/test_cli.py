import json

import pytest
from click.testing import CliRunner

from app.cli import cli
from app.schemas.report import FourCycleReport
from app.services import verification_service

runner = CliRunner()

CORONENE_RING = "\n".join(f"{q} {r}" for q, r in [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]) + "\n"


def invoke(*args):
    return runner.invoke(cli, list(args))


@pytest.mark.parametrize("preset,expected", [
    ("linear:1", "2+x"),
    ("linear:2", "3+2x+y"),
    ("linear:3", "4+3x+2y"),
    ("zigzag:3", "5+5x+x^2+2y"),
])
def test_gzz(preset, expected):
    """Test the gzz command on presets."""
    result = invoke("gzz", "--preset", preset)
    assert result.exit_code == 0
    assert result.stdout.strip() == expected


def test_zz_drops_fused_pairs():
    """Test the zz command."""
    result = invoke("zz", "--preset", "zigzag:3")
    assert result.exit_code == 0
    assert result.stdout.strip() == "5+5x+x^2"


def test_gc_matches_gzz():
    """Test the gc command on anthracene and C20."""
    assert invoke("gc", "--preset", "linear:3").stdout.strip() == "4+3x+2y"
    assert invoke("gc", "--preset", "c20").stdout.strip() == "36"


def test_gc_json():
    """Test the JSON polynomial output."""
    result = invoke("gc", "--preset", "linear:2", "--json")
    data = json.loads(result.stdout)
    assert data["polynomial"] == "3+2x+y"
    assert data["graph"]["hexagons"] == 2


def test_gc_subgraphs():
    """Test the listing of convex subgraphs."""
    result = invoke("gc", "--preset", "linear:2", "--subgraphs")
    data = json.loads(result.stdout)
    assert data["polynomial"] == "3+2x+y"
    shapes = [(s["k"], s["l"]) for s in data["subgraphs"]]
    assert sorted(shapes) == [(0, 0)] * 3 + [(0, 1)] + [(1, 0)] * 2


def test_file_input(tmp_path):
    """Test reading a benzenoid file."""
    path = tmp_path / "naphthalene.benzenoid"
    path.write_text("# naphthalene\n0 0\n1 0\n")
    result = invoke("gzz", str(path))
    assert result.exit_code == 0
    assert result.stdout.strip() == "3+2x+y"


def test_hole_is_invalid_input(tmp_path):
    """Test that a ring of hexagons around a hole exits with code 1."""
    path = tmp_path / "ring.benzenoid"
    path.write_text(CORONENE_RING)
    result = invoke("gzz", str(path))
    assert result.exit_code == 1
    assert "HoleDetected" in result.stderr


def test_no_input_is_invalid():
    """Test that a command without a structure exits with code 1."""
    result = invoke("gzz")
    assert result.exit_code == 1
    assert "InputFormat" in result.stderr


def test_unknown_preset():
    """Test that an unknown preset exits with code 1."""
    result = invoke("gzz", "--preset", "graphene")
    assert result.exit_code == 1
    assert "UnknownPreset" in result.stderr


@pytest.mark.parametrize("preset", ["linear:3", "zigzag:3", "pyrene", "c20"])
def test_verify_passes(preset):
    """Test the verify command on small structures."""
    result = invoke("verify", "--preset", preset)
    assert result.exit_code == 0
    assert "equal: true" in result.stdout
    assert "bijection: pass" in result.stdout


def test_verify_json():
    """Test the JSON run report."""
    result = invoke("verify", "--preset", "linear:2", "--json")
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["equal"] and report["passed"]
    assert report["matchings"] == 3
    assert report["gzz"] == report["gc"]


def test_verify_budget():
    """Test that exceeding a budget exits with code 3."""
    assert invoke("verify", "--preset", "linear:3", "--max-vertices", "10").exit_code == 3
    assert invoke("verify", "--preset", "c24", "--max-resonance-vertices", "5").exit_code == 3


@pytest.mark.slow
def test_verify_c60_exceeds_default_budget():
    """Test that C60's 12500 matchings exceed the default resonance budget."""
    result = invoke("verify", "--preset", "c60")
    assert result.exit_code == 3
    assert "BudgetExceeded" in result.stderr


def test_gen():
    """Test canonical input files of presets."""
    result = invoke("gen", "linear:3")
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["0 0", "1 0", "2 0"]
    assert len(invoke("gen", "c20").stdout.splitlines()) == 20
    assert invoke("gen", "tube:2,2,1").stdout.strip() == "2 2 1"


def test_gen_rejects_bad_chiral_vector():
    """Test that an unusable chiral vector exits with code 1."""
    result = invoke("gen", "tube:1,0,1")
    assert result.exit_code == 1
    assert "InvalidChiralVector" in result.stderr


def test_gen_output_round_trips(tmp_path):
    """Test that a generated file reads back to the same polynomial."""
    path = tmp_path / "pyrene.benzenoid"
    assert invoke("gen", "pyrene", "-o", str(path)).exit_code == 0
    assert invoke("gzz", str(path)).stdout == invoke("gzz", "--preset", "pyrene").stdout


def test_resgraph_dot():
    """Test the DOT export of resonance graphs."""
    dot = invoke("resgraph", "--preset", "linear:2").stdout
    assert dot.startswith('graph "resonance" {')
    assert dot.count(" -- ") == 2
    assert invoke("resgraph", "--preset", "linear:1").stdout.count(" -- ") == 1


def test_resgraph_json_and_file(tmp_path):
    """Test the JSON export alongside a DOT file."""
    path = tmp_path / "c20.dot"
    result = invoke("resgraph", "--preset", "c20", "--json", "--dot", str(path))
    data = json.loads(result.stdout)
    assert data["vertices"] == 36
    assert data["edges"] == []
    assert path.read_text().count(" -- ") == 0


def test_search():
    """Test the polynomial search."""
    result = invoke("search", "3+2x+y", "--max-hexagons", "3")
    assert result.exit_code == 0
    assert len(result.stdout.splitlines()) == 1
    assert invoke("search", "7+y^3", "--max-hexagons", "2").exit_code == 1


def _failing_four_cycles(g, r):
    return FourCycleReport(cycles=1, passed=False, counterexample={"cycle": [0, 1, 3, 2], "reason": "forced"})


def test_failed_verify_json_is_one_document(monkeypatch):
    """Test that a failed run with --json prints a single parseable report and exits with code 2."""
    monkeypatch.setattr(verification_service, "verify_four_cycle_lemma", _failing_four_cycles)
    result = invoke("verify", "--preset", "linear:2", "--json")
    assert result.exit_code == 2
    report = json.loads(result.stdout)
    assert report["passed"] is False
    assert report["four_cycles"]["counterexample"]["reason"] == "forced"


def test_failed_verify_prints_counterexample(monkeypatch):
    """Test that a failed run prints the counterexample after the summary lines."""
    monkeypatch.setattr(verification_service, "verify_four_cycle_lemma", _failing_four_cycles)
    result = invoke("verify", "--preset", "linear:2")
    assert result.exit_code == 2
    assert "4-cycles: FAIL" in result.stdout
    _, _, failure = result.stdout.partition("{")
    assert json.loads("{" + failure)["counterexample"]["four_cycles"]["reason"] == "forced"


@pytest.mark.parametrize("command", ["gzz", "zz"])
def test_polynomial_commands_take_a_vertex_budget(command):
    """Test that gzz and zz honour --max-vertices."""
    assert invoke(command, "--preset", "linear:3", "--max-vertices", "10").exit_code == 3
    result = invoke(command, "--preset", "linear:3", "--max-vertices", "14")
    assert result.exit_code == 0
    assert result.stdout.strip().startswith("4+3x")


def test_verify_rejects_narrow_tube():
    """Test that a tube whose hexagons share two edges is invalid input."""
    result = invoke("verify", "--preset", "tube:1,1,1")
    assert result.exit_code == 1
    assert "InvalidTubulene" in result.stderr
