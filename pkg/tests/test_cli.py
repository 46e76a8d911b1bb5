import io
import json
import subprocess
import sys

import pytest

from covertool import __version__
from covertool.cli import main


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_named(capsys):
    code, out, _ = run(["classify", "--named", "P4"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["tool"] == "covertool" and data["version"] == __version__
    assert data["classification"]["very_well_covered"] is True
    assert data["cm_vwc_labeling"] is not None


def test_ideal_from_stdin(capsys, monkeypatch):
    code, out, _ = run(["ideal", "cover"], capsys, stdin="x1 x2\nx2 x3\nx3 x4\nx4 x1\n", monkeypatch=monkeypatch)
    assert code == 0
    assert json.loads(out)["text"] == "(x1*x3, x2*x4)"


def test_ideal_from_file_graph6(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text("Bw\n")
    code, out, _ = run(["ideal", "edge", str(f)], capsys)
    assert json.loads(out)["text"] == "(x1*x2, x1*x3, x2*x3)"


def test_symbolic(capsys):
    code, out, _ = run(["symbolic", "-k", "2", "--named", "C5"], capsys)
    data = json.loads(out)
    assert code == 0 and data["max_degree"] == 6 and data["single_degree"] is False
    code, out, _ = run(["symbolic", "-k", "3", "--of", "edge", "--named", "C5"], capsys)
    assert "x1^3*x2^3" in json.loads(out)["text"]


def test_betti_field_and_cache(capsys, tmp_path, monkeypatch):
    monkeypatch.delenv("COVERTOOL_CACHE", raising=False)
    cache = tmp_path / "c.jsonl"
    argv = ["betti", "--named", "C4", "--field", "f5", "--cache", str(cache)]
    code, out, _ = run(argv, capsys)
    data = json.loads(out)
    assert code == 0 and data["field"] == "F5"
    assert data["table"]["entries"] == [{"i": 0, "j": 2, "beta": 2}, {"i": 1, "j": 4, "beta": 1}]
    assert len(cache.read_text().splitlines()) == 1
    run(argv, capsys)
    assert len(cache.read_text().splitlines()) == 1


def test_betti_env_cache(capsys, tmp_path, monkeypatch):
    env = tmp_path / "env.jsonl"
    monkeypatch.setenv("COVERTOOL_CACHE", str(env))
    run(["betti", "--named", "K2"], capsys)
    assert env.exists()


def test_betti_symbolic_needs_k(capsys):
    code, out, err = run(["betti", "--named", "C5", "--symbolic"], capsys)
    assert code == 2 and out == "" and "needs -k" in err


def test_verify_exit_codes(capsys):
    code, out, _ = run(["verify", "main", "--named", "C5", "-k", "2"], capsys)
    assert code == 0 and json.loads(out)["report"]["verdict"] == "pass"
    code, out, _ = run(["verify", "deletion", "--named", "C5", "--vertex", "x1", "-k", "2"], capsys)
    assert code == 0 and json.loads(out)["report"]["params"] == {"vertex": "x1", "k": 2}
    code, out, _ = run(["verify", "gk", "--named", "K2", "-k", "2"], capsys)
    assert json.loads(out)["report"]["params"] == {"r": 2}


def test_verify_fail_gives_one(capsys, monkeypatch):
    from covertool import cli
    from covertool.report import VerificationReport

    def fake(theorem, G, **kw):
        return VerificationReport.from_claims(theorem, G, {}, "Q", {"x": False})

    monkeypatch.setattr(cli, "run_check", fake)
    code, out, _ = run(["verify", "terai", "--named", "K2"], capsys)
    assert code == 1 and json.loads(out)["report"]["verdict"] == "fail"


def test_usage_errors(capsys):
    code, out, err = run(["classify", "--graph6", "!!"], capsys)
    assert code == 2 and out == "" and "error" in err
    code, _, err = run(["corpus", "--max-n", "9"], capsys)
    assert code == 2 and "limited" in err
    code, _, _ = run(["betti", "--named", "K2", "--field", "f4"], capsys)
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_sweep_and_corpus(capsys, tmp_path):
    code, out, _ = run(["sweep", "--max-n", "4", "--theorem", "colon", "--kmax", "4", "--jobs", "1", "--cache", str(tmp_path / "s.jsonl")], capsys)
    data = json.loads(out)
    assert code == 0 and data["graphs"] == 46 and data["fail"] == 0 and data["field"] == "Q"
    code, out, _ = run(["sweep", "--max-n", "4", "--theorem", "colon", "--kmax", "4", "--jobs", "1", "--cache", str(tmp_path / "s.jsonl")], capsys)
    assert json.loads(out)["cached"] == 46
    code, out, _ = run(["corpus", "--max-n", "3", "--dedup"], capsys)
    assert json.loads(out)["graph6"] == ["A_", "BW", "Bw"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "covertool", "classify", "--named", "C5"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["classification"]["unmixed"] is True
