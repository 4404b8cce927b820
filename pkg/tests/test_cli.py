import subprocess
import sys

import pytest

from conftest import K4_TEXT
from subreg.cli import run
from subreg.multigraph import parse_multigraph


@pytest.fixture
def k4_file(tmp_path):
    p = tmp_path / "k4.mg"
    p.write_text(K4_TEXT)
    return p


def test_analyze(k4_file, capsys):
    assert run(["analyze", str(k4_file)]) == 0
    out = capsys.readouterr().out
    assert "n: 4" in out and "girth: 3" in out and "cut-edges: -" in out


def test_bound(k4_file, capsys):
    assert run(["bound", str(k4_file)]) == 0
    assert "bound 0" in capsys.readouterr().out


def test_extract_with_cert_and_dot(k4_file, tmp_path, capsys):
    dot, cert = tmp_path / "k4.dot", tmp_path / "k4.cert"
    assert run(["extract", str(k4_file), "--dot", str(dot), "--cert", str(cert)]) == 0
    assert "omitted 0 / bound 0" in capsys.readouterr().out
    keys = [line.split(":")[0] for line in cert.read_text().splitlines()]
    assert keys == ["n", "m", "c", "d", "bound", "achieved", "equality", "classes"]
    text = dot.read_text()
    assert text.startswith("graph G {") and text.rstrip().endswith("}")


def test_generate_round_trips(tmp_path):
    out = tmp_path / "tree.mg"
    assert run(["generate", "tree", "--internal", "2", "--girth", "3", "-o", str(out), "--comment"]) == 0
    text = out.read_text()
    assert text.startswith("#")
    G = parse_multigraph(text)
    assert G.n == 22 and G.is_cubic()


def test_generate_gfamily(capsys):
    assert run(["generate", "gfamily", "--base", "k33", "--yhat", "3", "--explode", "4=k4:0"]) == 0
    G = parse_multigraph(capsys.readouterr().out)
    assert G.n == 7  # 5 vertices of K33 - y_hat, one swapped for the 3 of K4 - z


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["analyze", "/nonexistent/file.mg"],
        ["verify"],
        ["verify", "--enumerate", "9"],
        ["generate", "tree", "--internal", "0"],
        ["generate", "gfamily", "--base", "k4"],
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(argv) == 2


def test_malformed_file_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.mg"
    p.write_text("2 1\n0 5\n")
    assert run(["extract", str(p)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_verify_random_deterministic(capsys):
    assert run(["--seed", "5", "verify", "--random", "30", "--max-n", "10"]) == 0
    first = capsys.readouterr().out
    assert run(["--seed", "5", "verify", "--random", "30", "--max-n", "10"]) == 0
    assert capsys.readouterr().out == first


def test_seed_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("SUBREG_SEED", "17")
    assert run(["verify", "--random", "3", "--max-n", "6"]) == 0
    assert "seed 17" in capsys.readouterr().out
    monkeypatch.setenv("SUBREG_SEED", "nope")
    assert run(["verify", "--random", "1"]) == 2


def test_verify_enumerate_small(capsys):
    assert run(["verify", "--enumerate", "4"]) == 0
    assert "0 failed" in capsys.readouterr().out


def test_verify_file_with_oracle(k4_file, capsys):
    assert run(["verify", str(k4_file), "--oracle"]) == 0
    assert "oracle f2 = 4" in capsys.readouterr().out


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "subreg.cli", "casestudy", "badgraph"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "all claims hold" in proc.stdout
