from __future__ import annotations

import json
import subprocess
import sys

import pytest

from schurlab.cli import EXIT_FAIL, EXIT_OK, EXIT_SIZE, EXIT_SPEC, exit_code, main


def _spec(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(p)


@pytest.mark.parametrize(
    "doc,expected",
    [
        ({"kind": "cyclic", "n": 6}, []),
        ({"kind": "extraspecial", "p": 2, "n": 2, "type": "+"}, [2, 2, 2, 2, 2]),
        ({"kind": "direct", "factors": [{"kind": "extraspecial", "p": 3, "n": 1, "type": "+"},
                                        {"kind": "cyclic", "n": 3}]}, [3, 3, 3, 3]),
    ],
)
def test_multiplier(tmp_path, capsys, doc, expected):
    code = main(["multiplier", _spec(tmp_path, "g.json", doc)])
    out = json.loads(capsys.readouterr().out)
    assert code == EXIT_OK
    assert out["multiplier"] == expected and "ms" in out and out["order"] > 0


def test_exit_codes(tmp_path, capsys):
    assert main(["multiplier", _spec(tmp_path, "bad.json", "{not json")]) == EXIT_SPEC
    assert main(["multiplier", _spec(tmp_path, "odd.json", {"kind": "teapot"})]) == EXIT_SPEC
    assert main(["multiplier", str(tmp_path / "missing.json")]) == EXIT_SPEC
    assert main(["multiplier", _spec(tmp_path, "big.json", {"kind": "cyclic", "n": 4096})]) == EXIT_SIZE
    capsys.readouterr()


def test_flags_validated():
    with pytest.raises(SystemExit):
        main(["--jobs", "0", "verify"])
    with pytest.raises(SystemExit):
        main(["verify", "--suite", "nonsense"])


def test_modulus_override(tmp_path, capsys):
    assert main(["--modulus", "16", "multiplier", _spec(tmp_path, "g.json", {"kind": "named", "name": "D8"})]) == 0
    assert json.loads(capsys.readouterr().out)["multiplier"] == [2]


def test_build(tmp_path, capsys):
    out_path = tmp_path / "b.json"
    assert main(["build", _spec(tmp_path, "g.json", {"kind": "named", "name": "Q8"}), "--out", str(out_path)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["order"] == 8 and doc["center"] == 2
    assert json.loads(out_path.read_text()) == doc


def test_exit_code_is_function_of_verdicts():
    assert exit_code([]) == EXIT_OK
    assert exit_code(["pass", "skipped"]) == EXIT_OK
    assert exit_code(["pass", "fail"]) == EXIT_FAIL


def _write_report(path, verdicts):
    results = [{"claim": f"c{i}", "instance": "x", "computed": {}, "verdict": v, "ms": 1.0}
               for i, v in enumerate(verdicts)]
    path.write_text(json.dumps({"schema": 1, "command": "verify paper", "results": results}))
    return str(path)


def test_report_command(tmp_path, capsys):
    good = _write_report(tmp_path / "good.json", ["pass", "skipped"])
    bad = _write_report(tmp_path / "bad.json", ["pass", "fail"])
    assert main(["report", good]) == EXIT_OK
    assert main(["report", good, bad]) == EXIT_FAIL
    out = capsys.readouterr().out.strip().splitlines()
    assert json.loads(out[-1])["failed"] == ["c1:x"]
    assert main(["report", _spec(tmp_path, "junk.json", {"x": 1})]) == EXIT_SPEC


def test_report_round_trip(tmp_path, capsys):
    src = _write_report(tmp_path / "r.json", ["pass"])
    out = tmp_path / "again.json"
    assert main(["report", src, "--out", str(out)]) == 0
    capsys.readouterr()
    first = json.loads(out.read_text())
    main(["report", str(out), "--out", str(out)])
    capsys.readouterr()
    assert json.loads(out.read_text()) == first


def test_console_script_verify_default_suite(tmp_path):
    out = tmp_path / "paper.json"
    proc = subprocess.run(
        [sys.executable, "-m", "schurlab.cli", "verify", "--suite", "paper", "--out", str(out)],
        capture_output=True, text=True, timeout=900,
    )
    assert proc.returncode == 0, proc.stderr[-2000:]
    doc = json.loads(proc.stdout)
    assert doc["failed"] == []
    claims = {r["claim"] for r in doc["results"]}
    assert {"heis-elem", "heis-minus-cyc", "inflation-quotient", "embeddings", "theta-kernel", "diagram", "jones", "extraspecial"} <= claims
    assert "passed" in proc.stderr
