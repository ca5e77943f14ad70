"""Command-line interface: exit codes, output shapes, determinism."""

import json
import subprocess
import sys

import pytest

from lyubeznik import parse_ideal
from lyubeznik.cli import main

MIXED = "vars x y z\ngen x^2*y\ngen y^2*z\ngen x^3\ngen y^3\ngen z^3\n"
KOSZUL = "vars x y\ngen x\ngen y\n"
SQUARE_GRAPH = "vertex a b c d\nedge a b\nedge b c\nedge c d\nedge a d\n"


@pytest.fixture
def mixed_path(tmp_path):
    path = tmp_path / "mixed.ideal"
    path.write_text(MIXED)
    return str(path)


@pytest.fixture
def koszul_path(tmp_path):
    path = tmp_path / "koszul.ideal"
    path.write_text(KOSZUL)
    return str(path)


@pytest.fixture
def square_path(tmp_path):
    path = tmp_path / "square.graph"
    path.write_text(SQUARE_GRAPH)
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_text(capsys, mixed_path):
    code, out, err = run_cli(capsys, "analyze", mixed_path)
    assert code == 0 and err == ""
    assert "minimal resolution: yes" in out
    assert "obstruction: 0" in out
    assert "resolution length: 3" in out


def test_analyze_json_keys(capsys, mixed_path):
    code, out, _ = run_cli(capsys, "analyze", "--format", "json", mixed_path)
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["command"] == "analyze"
    assert payload["minimal"] is True
    assert payload["obsL"] == 0
    assert payload["l_length"] == payload["ps"] == 3
    assert payload["height"] == 3
    assert payload["ara"] == {"lower": 3, "upper": 3, "equality": True}
    assert "lyubeznik" not in payload  # only present with --search


def test_analyze_with_search_adds_classification(capsys, mixed_path):
    code, out, _ = run_cli(capsys, "analyze", "--format", "json",
                           "--search", "exhaustive", mixed_path)
    assert code == 0
    payload = json.loads(out)
    assert payload["lyubeznik"] is True
    assert payload["almost_lyubeznik"] is True
    assert payload["totally_lyubeznik"] is False


def test_json_outputs_are_byte_deterministic(capsys, mixed_path):
    outputs = set()
    for jobs in ("1", "2", "1"):
        code, out, _ = run_cli(capsys, "search", "--format", "json",
                               "--jobs", jobs, mixed_path)
        assert code == 0
        outputs.add(out)
    assert len(outputs) == 1


def test_search_text(capsys, mixed_path):
    code, out, _ = run_cli(capsys, "search", mixed_path)
    assert code == 0
    assert "total obstruction: 0" in out
    assert "lyubeznik: yes" in out
    assert "minimal orders: 8/120" in out


def test_order_override(capsys, mixed_path):
    code, out, _ = run_cli(capsys, "analyze", "--format", "json",
                           "--order", "1,3,4,2,5", mixed_path)
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == [1, 3, 4, 2, 5]
    assert payload["minimal"] is False
    assert payload["betti"] is None


def test_covers_and_complex_smoke(capsys, mixed_path):
    code, out, _ = run_cli(capsys, "covers", mixed_path)
    assert code == 0
    assert "clutter" in out
    code, out, _ = run_cli(capsys, "complex", "--format", "json", mixed_path)
    payload = json.loads(out)
    assert payload["f_vector"] == [1, 5, 7, 3]


def test_oracle_betti_and_verify(capsys, koszul_path):
    code, out, _ = run_cli(capsys, "oracle-betti", "--format", "json",
                           koszul_path)
    payload = json.loads(out)
    assert payload["graded"] == [[0, 0, 1], [1, 1, 2], [2, 2, 1]]
    code, out, _ = run_cli(capsys, "verify", "--format", "json", koszul_path)
    payload = json.loads(out)
    assert payload["resolves"] is True
    assert all(ok for _, ok in payload["multidegrees"])


def test_verify_with_prime_field(capsys, koszul_path):
    code, out, _ = run_cli(capsys, "verify", "--field", "p:2", koszul_path)
    assert code == 0 and "resolves the quotient: yes" in out
    code, out, err = run_cli(capsys, "verify", "--field", "p:6", koszul_path)
    assert code == 1 and "not a prime" in err


def test_radical_gens_output(capsys, mixed_path):
    code, out, _ = run_cli(capsys, "radical-gens", mixed_path)
    assert code == 0
    assert out.splitlines()[-3:] == [
        "g1 = x^2*y",
        "g2 = y^2*z + x^3*z^3",
        "g3 = x^3 + y^3 + z^3",
    ]


def test_graph_edge_ideal_round_trips(capsys, square_path):
    code, out, _ = run_cli(capsys, "graph", "--edge-ideal", square_path)
    assert code == 0
    ideal = parse_ideal(out)
    assert [str(m) for m in ideal.gens] == ["a*b", "b*c", "c*d", "a*d"]


def test_graph_check_props(capsys, square_path):
    code, out, _ = run_cli(capsys, "graph", "--check-props", square_path)
    assert code == 0
    assert "four-cycle-implies-not-lyubeznik: hypothesis=yes conclusion=yes" in out
    assert "no-path-of-4-edges-implies-lyubeznik: hypothesis=yes conclusion=no" in out
    assert "FINDING" in out


def test_graph_requires_a_mode(capsys, square_path):
    code, _, err = run_cli(capsys, "graph", square_path)
    assert code == 1
    assert "--edge-ideal" in err or "--check-props" in err


def test_missing_file_is_exit_one(capsys, tmp_path):
    code, _, err = run_cli(capsys, "analyze", str(tmp_path / "absent.ideal"))
    assert code == 1 and "lyubeznik:" in err


def test_parse_error_is_exit_one(capsys, tmp_path):
    path = tmp_path / "broken.ideal"
    path.write_text("vars x\ngen x^\n")
    code, _, err = run_cli(capsys, "analyze", str(path))
    assert code == 1
    assert "parse error" in err


def test_bad_order_is_exit_one(capsys, mixed_path):
    code, _, err = run_cli(capsys, "analyze", "--order", "1,2", mixed_path)
    assert code == 1 and "lyubeznik:" in err


def test_usage_error_is_exit_one(capsys, mixed_path):
    code, _, err = run_cli(capsys, "analyze", "--format", "yaml", mixed_path)
    assert code == 1


def test_search_refusal_is_exit_two(capsys, tmp_path):
    lines = ["vars " + " ".join(f"x{i}" for i in range(1, 10))]
    lines += [f"gen x{i}" for i in range(1, 10)]
    path = tmp_path / "wide.ideal"
    path.write_text("\n".join(lines) + "\n")
    code, _, err = run_cli(capsys, "search", str(path))
    assert code == 2
    assert "refused" in err and "--max-exhaustive" in err


def test_console_script_smoke(tmp_path):
    path = tmp_path / "koszul.ideal"
    path.write_text(KOSZUL)
    proc = subprocess.run([sys.executable, "-m", "lyubeznik.cli",
                           "analyze", "--format", "json", str(path)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["minimal"] is True
