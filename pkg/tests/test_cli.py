import json
import shutil
import subprocess
import sys

import pytest

from conftest import FIXTURES
from frobtft.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out)


@pytest.mark.parametrize(
    "argv,code",
    [
        (["check", "category", "fibonacci"], 0),
        (["check", "category", "trivial"], 0),
        (["check", "category", "ising"], 0),
        (["check", "category", "fibonacci_corrupt"], 1),
        (["check", "category", "ising_corrupt"], 1),
        (["check", "algebra", "dual_numbers"], 0),
        (["check", "algebra", "dual_numbers", "--require-special"], 1),
        (["check", "algebra", "m2", "--require-special"], 0),
        (["check", "algebra", "z2_group"], 0),
        (["check", "algebra", "z2_group_corrupt"], 1),
        (["zmatrix", "ising_unit"], 0),
        (["zmatrix", "z2_group", "pointed_z2", "--check-modular"], 0),
        (["zmatrix", "z2_group", "ising"], 2),
        (["correlator", "torus", "kz2"], 0),
        (["correlator", "torus", "dual_numbers"], 1),
        (["correlator", "disk", "m2", "--verify-cut", "diameter"], 0),
        (["correlator", "pants", "kz3", "--verify-independence", "3"], 0),
        (["verify", "factorization", "strip", "ks3", "across"], 0),
        (["verify", "factorization", "torus", "m2"], 0),
        (["verify", "triangulation-independence", "cylinder", "kxk"], 0),
        (["correlator", "sphere", "nope"], 2),
        (["correlator", "torus", "kz2", "--verify-cut", "nope"], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    got, report = run(capsys, *argv)
    assert got == code
    assert report["exit_status"] == code
    assert (report["failed"] != []) == (code == 1)


def test_usage_error_exits_two(capsys):
    assert main(["frobnicate"]) == 2
    assert "invalid choice" in capsys.readouterr().err


def test_report_shape(capsys):
    _, report = run(capsys, "check", "category", "fibonacci_corrupt")
    assert sorted(report) == ["command", "exit_status", "failed", "inputs", "results"]
    assert "pentagon" in report["failed"]
    assert "sha256:" in report["inputs"]["category"]


def test_values_in_reports(capsys):
    _, r = run(capsys, "correlator", "torus", "kz2")
    assert r["results"]["correlator"]["tensor"]["entries"] == ["2"]
    _, r = run(capsys, "zmatrix", "z2_group", "pointed_z2")
    assert r["results"]["z_tilde"]["matrix"] == [[1, 1], [1, 1]]
    _, r = run(capsys, "correlator", "torus", "dual_numbers")
    assert "special" in json.dumps(r["results"])


def test_output_is_byte_stable(capsys):
    argv = ["verify", "factorization", "cylinder", "kz3", "core"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


def test_output_file(capsys, tmp_path):
    p = tmp_path / "r.json"
    assert main(["--output", str(p), "check", "algebra", "kz2"]) == 0
    assert json.loads(p.read_text()) == json.loads(capsys.readouterr().out)


def test_timing_is_opt_in(capsys):
    _, r = run(capsys, "check", "algebra", "k")
    assert "timing" not in json.dumps(r)
    _, r = run(capsys, "--timing", "check", "algebra", "k")
    assert "seconds" in json.dumps(r)


def test_fixture_directory_override(capsys, tmp_path, monkeypatch):
    shutil.copytree(FIXTURES, tmp_path / "fx")
    # swap the good Fibonacci data for the corrupted one
    shutil.copy(tmp_path / "fx" / "categories" / "fibonacci_corrupt.json", tmp_path / "fx" / "categories" / "fibonacci.json")
    monkeypatch.setenv("FROBTFT_FIXTURES", str(tmp_path / "fx"))
    code, _ = run(capsys, "check", "category", "fibonacci")
    assert code == 1


def test_paths_are_accepted(capsys):
    code, _ = run(capsys, "check", "algebra", str(FIXTURES / "algebras" / "m2.json"))
    assert code == 0


def test_console_script():
    out = subprocess.run(
        [sys.executable, "-m", "frobtft.cli", "check", "category", "semion"], capture_output=True, text=True
    )
    assert out.returncode == 0
    assert json.loads(out.stdout)["command"] == "check category"
