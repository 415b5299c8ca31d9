import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from checks import full_corpus_run
from relcat.certificates import check_file
from relcat.cli import main

GOLDEN = Path(__file__).parent / "golden"
REGEN = os.environ.get("RELCAT_REGEN_GOLDEN") == "1"

GOLDEN_RUNS = {
    "tc-report-s2": ["tc-report", "s2", "--formal"],
    "tc-report-cp2": ["tc-report", "cp2", "--formal"],
    "tc-report-s3xs3": ["tc-report", "s3xs3", "--formal"],
    "zcl-cp2": ["zcl", "cp2"],
    "msecat-s3-diagonal": ["msecat", "s3-diagonal", "--n-max", "2", "--cutoff", "12"],
}


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("slug", sorted(GOLDEN_RUNS))
def test_golden(slug, tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(capsys, GOLDEN_RUNS[slug] + ["--out", "report.json"])
    assert code == 0
    report = Path("report.json").read_text()
    if REGEN:
        GOLDEN.mkdir(exist_ok=True)
        (GOLDEN / f"{slug}.txt").write_text(out)
        (GOLDEN / f"{slug}.json").write_text(report)
    assert out == (GOLDEN / f"{slug}.txt").read_text()
    assert report == (GOLDEN / f"{slug}.json").read_text()
    doc = json.loads(report)
    assert doc["text"] == out.splitlines()
    for p in doc["certificates"]:
        assert check_file(p).ok, p


def test_exit_code_invalid_model(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    Path("bad.model").write_text("algebra a table\n  basis 1:0 x:1 y:2\n  d x = y\n"
                                 "  product x x = y\nend\n")
    code, out, _ = run(capsys, ["validate", "bad.model"])
    assert code == 1
    assert "commutativity at (x, x)" in out
    assert "result: invalid" in out


def test_exit_code_bad_input(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    Path("syn.model").write_text("algebra a free\n gen x 2\n d x = q\nend\n")
    code, _, err = run(capsys, ["zcl", "syn.model"])
    assert code == 2
    assert "line 3, col 8" in err and "'q'" in err
    code, _, err = run(capsys, ["zcl", "no-such-model"])
    assert code == 2 and "no such model" in err


def test_missing_section_is_input_error(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    code, _, err = run(capsys, ["msecat", "cp2-cp1"])
    assert code == 2
    assert "no section" in err


def test_tc_report_nonformal_not_exact(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(capsys, ["tc-report", "nonformal"])
    assert code == 0
    assert "(not exact)" in out
    assert "uncertified" in out


def test_msecat_size_guard_message(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(capsys, ["msecat", "s2-diagonal", "--cutoff", "8", "--max-tensor-dim", "9"])
    assert code == 0
    assert "stopped at n = 1: size limit" in out


def test_tc_report_msecat_defaults_to_diagonal(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(capsys, ["tc-report", "s3", "--msecat"])
    assert code == 0
    assert "module level: msecat(mu) = 1" in out
    code, out, _ = run(capsys, ["tc-report", "nonformal", "--msecat"])
    assert code == 0
    assert "module level: msecat(mu) > 0 (stopped at n = 1: size limit)" in out
    code, _, err = run(capsys, ["tc-report", "s2-sullivan", "--msecat"])
    assert code == 2 and "finite table source" in err


def test_nilker_lines(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(capsys, ["nilker", "cp2-cp1"])
    assert code == 0
    assert "relcat(f_0) <= nil(ker phi)" in out


def test_degree_one_warning(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    Path("e.model").write_text("algebra e free\n  gen t 1\nend\n")
    code, _, err = run(capsys, ["cohomology", "e.model"])
    assert code == 0
    assert "degree-1 generators (t)" in err


def test_module_entry_point(tmp_path):
    r = subprocess.run([sys.executable, "-m", "relcat", "list"], capture_output=True, text=True,
                       cwd=tmp_path)
    assert r.returncode == 0
    assert "s2-diagonal" in r.stdout.split()


def test_full_corpus_deterministic(tmp_path, monkeypatch):
    trees = []
    for sub in ("one", "two"):
        d = tmp_path / sub
        (d / "reports").mkdir(parents=True)
        monkeypatch.chdir(d)
        outputs = full_corpus_run()
        assert all(code == 0 for _, _, code, _ in outputs), [o[:3] for o in outputs if o[2]]
        files = {str(p.relative_to(d)): p.read_bytes() for p in sorted(d.rglob("*")) if p.is_file()}
        trees.append((outputs, files))
    assert trees[0][0] == trees[1][0]
    assert trees[0][1] == trees[1][1]
    # every certificate written by the run is accepted by the checker
    certs = [p for p in (tmp_path / "one" / "reports").iterdir() if ".json" in p.name
             and json.loads(p.read_text()).get("kind")]
    assert certs
    for p in certs:
        assert check_file(p).ok, p.name
