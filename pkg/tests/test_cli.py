import json
import subprocess
import sys

import pytest

from hemifuzz.catalog import R1
from hemifuzz.cli import main
from hemifuzz.formats import serialize_hemiring


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.fixture
def files(tmp_path):
    (tmp_path / "r1.txt").write_text(serialize_hemiring(R1))
    (tmp_path / "bad.txt").write_text("hemiring\norder 2\nadd\n0 1\n0 1\nmul\n0 0\n0 1\n")
    (tmp_path / "short.txt").write_text("hemiring\norder 4\nadd\n0 1 2 3\n")
    (tmp_path / "collapse.hom").write_text("hom\nfrom R1\nto BOOL\nmap 0 1 1 1\n")
    (tmp_path / "bool.ifs").write_text("over 2\n0 1 0\n1 1/2 1/4\n")
    (tmp_path / "heavy.ifs").write_text("over 2\n0 1 0\n1 3/5 3/5\n")
    return tmp_path


def test_check(capsys):
    assert run(capsys, "check", "R1", "T123") == (0, "pass: IF left h-ideal\n")
    code, out = run(capsys, "check", "R1", "A1")
    assert code == 1
    assert "condition 5 violated at x=1 a=0 b=0 z=1\n" in out


def test_check_windowed(capsys):
    code, out = run(capsys, "check", "N_64", "MU2")
    assert code == 0 and "windowed" in out.splitlines()[0]
    code, out = run(capsys, "check", "N", "MU2", "--window", "32")
    assert code == 0
    code, _ = run(capsys, "check", "N", "MU2")
    assert code == 2


def test_normalize(capsys):
    code, out = run(capsys, "normalize", "R1", "A1")
    assert code == 1 and "x=1 (sum 13/10)" in out
    code, out = run(capsys, "normalize", "Z2", "A3")
    assert code == 0 and "3/5" in out


def test_file_commands(capsys, files):
    code, out = run(capsys, "validate", str(files / "r1.txt"))
    assert code == 0
    code, out = run(capsys, "validate", str(files / "bad.txt"))
    assert code == 1 and "violated at" in out
    code, out = run(capsys, "validate", str(files / "short.txt"))
    assert code == 2 and "line" in out
    code, out = run(capsys, "hideals", str(files / "r1.txt"))
    assert (code, out) == (0, "left h-ideals: 2\n{0,1,2}\n{0,1,2,3}\nmaximal: {0,1,2}\n")
    code, out = run(capsys, "aut", "B2B")
    assert (code, out) == (0, "automorphisms: 2\n0 1 2 3\n0 2 1 3\n")


def test_preimage(capsys, files):
    code, out = run(capsys, "preimage", str(files / "collapse.hom"), str(files / "bool.ifs"))
    assert code == 0 and "1/2 1/4" in out


def test_input_errors(capsys, files):
    assert run(capsys, "check", "R1", "nope")[0] == 2
    assert run(capsys, "check", "Z2", str(files / "heavy.ifs"))[0] == 2
    assert run(capsys, "check", "Z2", "A1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_levels_and_transform(capsys):
    code, out = run(capsys, "levels", "R1", "T123", "--alpha", "1", "--beta", "0")
    assert code == 0 and "{0,1,2}" in out
    assert run(capsys, "levels", "R1", "T123", "--alpha", "1", "--beta", "1/2")[0] == 2
    code, out = run(capsys, "transform", "Z2", "A3", "--fn", "square")
    assert code == 0 and "49/100" in out
    assert run(capsys, "transform", "Z2", "A3", "--fn", "affine")[0] == 1


def test_characteristic_and_maximal(capsys):
    assert run(capsys, "characteristic", "B2B", "B2B_SYM2")[0] == 0
    assert run(capsys, "characteristic", "B2B", "B2B_ASYM1")[0] == 1
    code, out = run(capsys, "maximal", "R1", "T123", "--grid", "0,1")
    assert "NotMaximal" in out
    code, out = run(capsys, "maximal", "Z2", "A3", "--grid", "0,1", "--depth", "0")
    assert "averaging" in out


def test_verify(capsys):
    code, out = run(capsys, "verify", "T3_11", "R1", "A1")
    assert code == 0 and out.startswith("T3_11 ") and "Confirmed" in out.splitlines()[0]
    code, out = run(capsys, "verify", "example1")
    assert "DISCREPANCY" in out
    code, out = run(capsys, "verify", "P3_7", "--sweep")
    assert code == 0 and "Confirmed (36 instances" in out.splitlines()[0]


def test_catalog(capsys):
    code, out = run(capsys, "catalog", "list")
    assert code == 0 and "R1" in out.split()
    code, out = run(capsys, "catalog", "show", "A3")
    assert "0 7/10 1/10" in out
    assert run(capsys, "catalog", "show", "XYZ")[0] == 2


def test_json(capsys):
    code, out = run(capsys, "--json", "check", "R1", "A1")
    doc = json.loads(out)
    assert code == 1 and doc["exit_code"] == 1 and doc["command"] == "check"
    _, plain = run(capsys, "check", "R1", "A1")
    assert doc["lines"] == plain.splitlines()


def test_module_entry_point_is_deterministic():
    argv = [sys.executable, "-m", "hemifuzz", "verify", "T4_3", "--sweep"]
    first = subprocess.run(argv, capture_output=True)
    second = subprocess.run(argv, capture_output=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout
