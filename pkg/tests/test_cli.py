import json
import subprocess
import sys
from pathlib import Path

import pytest

from graftkl.cli import COMMANDS, main, run_command
from graftkl.formats import serialize_graft

from conftest import cycle4, path_abc

CORPUS = Path(__file__).parent / "data" / "corpus"


@pytest.fixture
def doc(tmp_path):
    def write(graft, name="g.graft"):
        p = tmp_path / name
        p.write_text(serialize_graft(graft))
        return str(p)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out else None), out.err


def test_cli_examples(capsys, doc):
    code, out, _ = run(capsys, "kl", doc(cycle4()))
    assert code == 0 and out["classes"] == [[1, 3], [2, 4]]
    code, out, _ = run(capsys, "nu", doc(path_abc()))
    assert code == 0 and out["nu"] == 2
    code, out, _ = run(capsys, "dist", doc(path_abc()), "--from", "a", "--to", "a")
    assert code == 0 and out["dist"] == 0


@pytest.mark.parametrize("command", [c for c in COMMANDS if c != "sebo"])
def test_every_command_runs(capsys, doc, command):
    code, out, _ = run(capsys, command, doc(path_abc()))
    assert code == 0
    assert out["format"] == "graftkl-result/1" and out["command"] == command


def test_sebo_command_and_join_file(capsys, doc, tmp_path):
    path = doc(cycle4())
    code, out, _ = run(capsys, "sebo", path, "--root", "1")
    assert code == 0
    assert out["level0"] == [1, 3]
    assert all(c["passed"] for c in out["checks"])

    join = tmp_path / "f.join"
    join.write_text("2 3\n4 1\n")
    code, out, _ = run(capsys, "sebo", path, "--root", "1", "--join", str(join))
    assert code == 0 and out["join"] == [[2, 3], [4, 1]]

    join.write_text("1 2\n2 3\n3 4\n4 1\n")
    code, _, err = run(capsys, "sebo", path, "--root", "1", "--join", str(join))
    assert code == 1 and "not a minimum join" in err


def test_usage_errors(capsys, doc):
    path = doc(path_abc())
    assert run(capsys, "sebo", path)[0] == 1
    assert run(capsys, "sebo", path, "--root", "z")[0] == 1
    assert run(capsys, "dist", path, "--from", "a")[0] == 1
    assert run(capsys, "verify", path, "--max-n", "2")[0] == 1
    assert run(capsys, "nu", path + ".missing")[0] == 1
    with pytest.raises(SystemExit) as info:
        main(["frobnicate", path])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        main(["nu", path, "--bogus"])
    assert info.value.code == 1


def test_parse_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.graft"
    bad.write_text("v a t\nv b\n")
    code, _, err = run(capsys, "nu", str(bad))
    assert code == 1 and "component" in err
    bad.write_text("v a\nq\n")
    code, _, err = run(capsys, "nu", str(bad))
    assert code == 1 and "2:1:" in err


def test_verify_passes_and_failure_exit(capsys, doc, monkeypatch):
    code, out, _ = run(capsys, "verify", doc(cycle4()), "--max-pairs", "3", "--seed", "5")
    assert code == 0 and out["passed"]
    from graftkl import checks
    monkeypatch.setitem(checks.CHECKS, "transitivity", lambda g: ["forced"])
    code, out, _ = run(capsys, "verify", doc(cycle4()))
    assert code == 2 and not out["passed"]


def test_draw_writes_dot(capsys, doc, tmp_path):
    target = tmp_path / "out.dot"
    code, _, _ = run(capsys, "kl", doc(cycle4()), "--draw", str(target))
    assert code == 0 and target.read_text().count("subgraph cluster_") == 2
    code, _, _ = run(capsys, "sebo", doc(path_abc()), "--root", "a", "--draw", str(target))
    assert code == 0 and "level 0" in target.read_text()


def test_run_command_direct():
    result, passed = run_command("refine", cycle4())
    assert passed and result["components"][0]["refines"]


def test_module_entry_point_reads_stdin():
    text = (CORPUS / "path3.graft").read_text()
    proc = subprocess.run([sys.executable, "-m", "graftkl", "nu", "-"], input=text,
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["nu"] == 2


def test_outputs_are_deterministic(capsys):
    for path in sorted(CORPUS.glob("*.graft")):
        first = run(capsys, "verify", str(path), "--max-pairs", "2", "--seed", "11")
        second = run(capsys, "verify", str(path), "--max-pairs", "2", "--seed", "11")
        assert first == second
