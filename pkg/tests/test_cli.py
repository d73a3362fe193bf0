import json
import subprocess
import sys

import pytest

from pentagon import zoo
from pentagon.cli import main
from pentagon.io import parse_graph6, write_graph6_file


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "--graph", "icosahedron")
    lines = out.out.splitlines()
    assert code == 0
    assert lines[0] == "induced 5-cycles: 12"
    assert len(lines) == 13 and lines[1].startswith("[")
    code, out = run(capsys, "enumerate", "--graph", "icosahedron", "--k", "3", "--count-only")
    assert out.out.strip() == "induced 3-cycles: 20"


def test_apply_writes_outputs(capsys, tmp_path):
    dot, g6, prov = tmp_path / "o.dot", tmp_path / "o.g6", tmp_path / "p.json"
    code, out = run(capsys, "apply", "--graph", "dodecahedron", "--dot", str(dot), "--g6", str(g6),
                    "--provenance", str(prov))
    assert code == 0 and out.out.strip() == "order 12 size 30"
    assert dot.read_text().startswith("graph G {")
    assert parse_graph6(g6.read_bytes()).order == 12
    assert len(json.loads(prov.read_text())["provenance"]) == 12


def test_classify_json(capsys):
    code, out = run(capsys, "classify", "--graph", "dodecahedron", "--json")
    d = json.loads(out.out)
    assert code == 0
    assert (d["outcome"], d["preperiod"], d["period"]) == ("EventuallyPeriodic", 1, 1)


def test_classify_text_and_budgets(capsys):
    code, out = run(capsys, "classify", "--graph", "I1-paper", "--max-steps", "2")
    assert code == 0
    assert "ExpandingSuspected" in out.out and "orders: 13 14 17" in out.out
    code, out = run(capsys, "classify", "--graph", "cycle:5")
    assert "outcome: Vanishing vanish_step=2" in out.out


def test_cert(capsys, tmp_path):
    code, a = run(capsys, "cert", "--graph", "petersen")
    p = tmp_path / "pet.g6"
    g = zoo.petersen()
    write_graph6_file(p, [g.relabeled([3, 1, 4, 0, 5, 9, 2, 6, 8, 7])])
    code2, b = run(capsys, "cert", "--graph", str(p))
    assert code == code2 == 0
    assert a.out == b.out
    int(a.out.splitlines()[0], 16)


def test_evidence(capsys):
    code, out = run(capsys, "evidence", "--graph", "I1-paper", "--max-steps", "1")
    assert code == 0
    assert json.loads(out.out)["all_bounds_hold"] is True


def test_usage_errors(capsys):
    assert run(capsys, "enumerate")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "enumerate", "--graph", "nonesuch")[0] == 2
    assert run(capsys, "enumerate", "--graph", "cycle:5", "--k", "2")[0] == 2
    assert run(capsys, "enumerate", "--graph", "missing/file.g6")[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_parse_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("D~\n")
    assert run(capsys, "cert", "--graph", str(bad))[0] == 2


def test_survey_budgets_flag(capsys, tmp_path):
    src = tmp_path / "in.g6"
    write_graph6_file(src, [zoo.icosahedron(), zoo.i1_paper()])
    out = tmp_path / "out.jsonl"
    code, _ = run(capsys, "survey", "--in", str(src), "--out", str(out), "--budgets", "2,1000")
    rows = [json.loads(x) for x in out.read_text().splitlines()]
    assert code == 0
    assert [r["outcome"] for r in rows] == ["EventuallyPeriodic", "ExpandingSuspected"]
    assert rows[1]["orders"] == [13, 14, 17]
    assert run(capsys, "survey", "--in", str(src), "--out", str(out), "--budgets", "x")[0] == 2


def test_survey_error_record_exit(capsys, tmp_path):
    src = tmp_path / "in.g6"
    src.write_text("Bw\nD~\n")
    out = tmp_path / "out.jsonl"
    assert run(capsys, "survey", "--in", str(src), "--out", str(out))[0] == 1
    rows = [json.loads(x) for x in out.read_text().splitlines()]
    assert rows[0]["outcome"] == "Vanishing" and rows[1]["outcome"] == "Error"


def test_backend_flag(capsys):
    from pentagon import _backend

    before = _backend.active()
    try:
        assert run(capsys, "--backend", "python", "enumerate", "--graph", "petersen", "--count-only")[0] == 0
        assert _backend.active() == "python"
    finally:
        _backend.set_backend(before)


@pytest.mark.slow
def test_verify_paper_subprocess():
    proc = subprocess.run([sys.executable, "-m", "pentagon", "verify-paper"], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    lines = proc.stdout.splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("checks passed")
