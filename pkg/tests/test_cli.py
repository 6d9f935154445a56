import json
import subprocess
import sys

import pytest

from ringlab.cli import main


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "ringlab", *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_classify_table():
    code, out, _ = run("classify", "--spec", "U(2,Z(4))", "--max-degree", "1")
    assert code == 0
    assert out.startswith("ring U(2,Z(4))")
    assert "StronglyNilIFP" in out and "Z(4)" in out


def test_classify_json(capsys):
    assert main(["classify", "--spec", "Z(6)", "--json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    by_prop = {r["property"]: r for r in rows}
    assert by_prop["Reduced"]["status"] == "Holds"
    # reduced, so inference upgrades the bounded search result to an exact verdict
    assert by_prop["Armendariz"]["bound"] is None
    assert "reduced-gives-armendariz" in by_prop["Armendariz"]["trace"]
    assert set(rows[0]) == {"ring", "property", "status", "bound", "witness", "trace", "citation"}


def test_classify_presentation_file(tmp_path, capsys):
    spec = tmp_path / "a.txt"
    spec.write_text("algebra p=2 gens=[x] commutative unital\nrel x^2\n")
    assert main(["classify", "--spec", str(spec), "--max-degree", "1"]) == 0
    out = capsys.readouterr().out
    assert "Commutative" in out and "Reduced" in out


def test_classify_corpus_id(capsys):
    assert main(["classify", "--spec", "trivial-z3", "--max-degree", "1"]) == 0
    assert "WeakIdealArmendariz" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    ["classify"],
    ["nonsense"],
    ["explain", "--spec", "Z(2)", "--property", "noetherian"],
    ["hunt", "--pairs", "Armendariz"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2


def test_bad_spec_exits_2(capsys):
    assert main(["classify", "--spec", "Z("]) == 2
    assert "error" in capsys.readouterr().err


def test_explain(capsys):
    assert main(["explain", "--spec", "T(Z(3))", "--property", "wia", "--max-degree", "1"]) == 0
    out = capsys.readouterr().out
    assert "WeakIdealArmendariz on T(Z(3)): Holds" in out
    assert "Reduced on Z(3)" in out


def test_explain_without_verdict_exits_1(capsys):
    spec = "algebra p=2 gens=[a,b] unital\npattern aa"
    assert main(["explain", "--spec", spec, "--property", "Abelian"]) == 1


def test_verify_paper_subset(tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run("verify-paper", "--strict", "--only", "z4", "z6", "--report", str(report))
    assert code == 0, out
    data = json.loads(report.read_text())
    assert data["summary"]["ok"] is True
    assert "summary:" in out


def test_verify_paper_strict_low_degree_exits_1():
    code, out, _ = run("verify-paper", "--strict", "--max-degree", "0", "--only", "z7-cubic-commutative")
    assert code == 1
    assert "MISMATCH z7-cubic-commutative Armendariz" in out


def test_verify_paper_lenient_low_degree_exits_0(tmp_path):
    report = tmp_path / "r.txt"
    code, _, _ = run("verify-paper", "--max-degree", "0", "--report", str(report))
    assert code == 0
    assert "bound-limited" in report.read_text()


def test_hunt_pairs(capsys):
    assert main(["hunt", "--max-order", "8", "--pairs", "wsc:sc", "Armendariz:Abelian"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "WeaklySemicommutative -/-> Semicommutative: U(2,Z(2)) (order 8)"
    assert out[1].endswith("skipped (catalog derives it)")


def test_lattice_dot(tmp_path):
    path = tmp_path / "out.dot"
    assert main(["lattice", "--dot", str(path)]) == 0
    dot = path.read_text()
    for box in ("Reduced", "Armendariz", "WeakIdealArmendariz", "StronglyNilIFP", "WeakArmendariz"):
        assert f'"{box}"' in dot
