import json
import subprocess
import sys
from pathlib import Path

import pytest

from koszulkit.cli import run

DATA = Path(__file__).resolve().parents[1] / "src" / "koszulkit" / "data"


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_syzygies_json(capsys):
    code, out, _ = call(capsys, "syzygies", "--fixture", "g2n:5", "--max-weight", "6", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert {(e["p"], e["q"]): e["dim"] for e in payload["betti"]} == {(0, 0): 1, (1, 2): 5, (2, 3): 5, (3, 5): 1}
    assert payload["trusted_weights"] == list(range(7))


def test_deviations_of_polynomial_ring(capsys):
    code, out, _ = call(capsys, "deviations", "--fixture", "sv:3", "--order", "8")
    assert code == 0
    assert json.loads(out)["epsilon"] == [3, 0, 0, 0, 0, 0, 0, 0]


def test_bv_small(capsys):
    code, out, _ = call(capsys, "bv-small", "--max-weight", "7")
    payload = json.loads(out)
    assert code == 0
    assert payload["generator_series"] == [0, 0, 0, 5, 10, 24, 40, 70]
    assert all(e["p"] != 2 for e in payload["betti"])


def test_bv_small_fault_exit_code(capsys):
    argv = ["bv-small", "--max-weight", "6"] + [x for i in range(1, 6) for x in ("--drop-top-term", str(i))]
    code, out, _ = call(capsys, *argv)
    assert code == 1
    assert json.loads(out)["freeness"]["h2"]["5"] == 1


def test_input_errors(capsys, tmp_path):
    assert call(capsys, "syzygies", "--fixture", "nope:1")[0] == 2
    assert call(capsys, "syzygies", "--fixture", "g2n:3")[0] == 2
    bad = tmp_path / "bad.qpa"
    bad.write_text("generators: x\nrelation R = x*y\n")
    code, _, err = call(capsys, "validate", "--input", str(bad))
    assert code == 2 and "line 2" in err
    assert call(capsys, "check-g25", "--max-weight", "4")[0] == 2
    assert call(capsys, "frobnicate")[0] == 2


def test_validate_canonical(capsys):
    code, out, _ = call(capsys, "validate", "--fixture", f"file:{DATA / 'g25.qpa'}")
    payload = json.loads(out)
    assert code == 0 and payload["n"] == 10 and payload["m"] == 5


def test_hilbert_hint(capsys):
    code, out, _ = call(capsys, "hilbert", "--fixture", "g2n:5", "--order", "3")
    payload = json.loads(out)
    assert code == 0 and payload["numerator"] is None and "increase --order" in payload["hint"]
    code, out, _ = call(capsys, "hilbert", "--fixture", "g2n:5", "--order", "8")
    assert json.loads(out)["numerator"] == [1, 0, -5, 5, 0, -1]


def test_dual(capsys):
    code, out, _ = call(capsys, "dual", "--fixture", "sv:3", "--order", "5")
    payload = json.loads(out)
    assert code == 0 and payload["dual_dims"] == [1, 3, 3, 1, 0, 0]


def test_schur(capsys):
    code, out, _ = call(capsys, "schur", "(0|3)", "--power", "3", "--rows", "6", "--format", "text")
    assert code == 0
    assert out.strip() == "s_(10|54) + 2s_(20|53) + 3s_(21|52) + s_(21|43) + s_(210|510) + 2s_(210|420) + s_(210|321)"
    code, out, _ = call(capsys, "schur", "[1]", "[1]")
    assert [t["partition"] for t in json.loads(out)["expansion"]] == [[1, 1], [2]]


def test_csv_output(capsys):
    code, out, _ = call(capsys, "berkovits", "--fixture", "sv:2", "--max-weight", "3", "--format", "csv")
    assert code == 0 and out == "p,q,dim\n0,0,1\n"


def test_debug_matrices(capsys, tmp_path):
    code, _, _ = call(capsys, "syzygies", "--fixture", "sv:2", "--max-weight", "2", "--debug-matrices", str(tmp_path))
    assert code == 0
    assert sorted(p.name for p in tmp_path.iterdir())[0].endswith(".mtx")


def test_thread_count_does_not_change_output(capsys, monkeypatch):
    _, one, _ = call(capsys, "berkovits", "--fixture", "g2n:4", "--max-weight", "4", "--threads", "1")
    monkeypatch.setenv("KOSZULKIT_THREADS", "3")
    _, many, _ = call(capsys, "berkovits", "--fixture", "g2n:4", "--max-weight", "4")
    assert one == many


def test_output_bytes_are_deterministic():
    cmd = [sys.executable, "-m", "koszulkit.cli", "syzygies", "--fixture", "g2n:4", "--max-weight", "5"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["schema"] == 1


@pytest.mark.slow
def test_check_g25(capsys):
    code, out, _ = call(capsys, "check-g25", "--max-weight", "7")
    payload = json.loads(out)
    assert code == 0 and payload["passed"]
    assert payload["frobenius"]["resolution_basis"][1][1] == 1
