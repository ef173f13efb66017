import csv
import io
import json
import subprocess
import sys

import pytest

from abelian_ideals.cli import IDEAL_CSV, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_ideals_text(capsys):
    code, out, _ = run(capsys, "ideals", "C2")
    assert code == 0
    assert out.startswith("C2: 4 Abelian ideals")
    assert "s0s1s0" in out


def test_ideals_json_round_trip(capsys):
    code, out, _ = run(capsys, "ideals", "B3", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["schema_version"] == "1" and rep["command"] == "ideals" and rep["ok"] is True
    assert rep["count"] == rep["expected"] == 8
    assert all("roots_eps" in I for I in rep["ideals"])
    assert json.dumps(rep, indent=2, sort_keys=True) + "\n" == out


def test_json_is_deterministic(capsys):
    _, a, _ = run(capsys, "long", "F4", "--format", "json", "--seed", "7")
    _, b, _ = run(capsys, "long", "F4", "--format", "json", "--seed", "99")
    assert a == b
    assert "elapsed_ms" not in json.loads(a)
    _, c, _ = run(capsys, "long", "F4", "--format", "json", "--timing")
    assert "elapsed_ms" in json.loads(c)


@pytest.mark.parametrize("cmd", ["ideals", "long", "rootlets"])
def test_csv_columns(capsys, cmd):
    code, out, _ = run(capsys, cmd, "G2", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == IDEAL_CSV == ["type", "ideal_index", "size", "long", "rootlet", "word"]
    assert all(r[0] == "G2" for r in rows[1:])
    assert len(rows) - 1 == {"ideals": 4, "long": 3, "rootlets": 3}[cmd]


def test_long(capsys):
    code, out, _ = run(capsys, "long", "F4", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["count"] == rep["expected"] == 4
    assert rep["d"] == 2 and rep["long_simple_roots"] == 2
    assert rep["maximal"] == [[[2, 4, 2, 1], [2, 4, 3, 1], [2, 4, 3, 2]]]


def test_long_simply_laced_is_usage_error(capsys):
    code, _, err = run(capsys, "long", "A3")
    assert code == 2 and "error" in err


def test_rootlets(capsys):
    code, out, _ = run(capsys, "rootlets", "C2", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["count"] == 3
    assert [r["rootlet"] for r in rep["rows"]] == [[2, 1], [0, 1], [0, 1]]


def test_dual(capsys):
    code, out, _ = run(capsys, "dual", "G2", "--format", "json")
    rep = json.loads(out)
    assert code == 0
    assert rep["long_ideals"] == rep["dual_candidates"] == 3
    assert rep["alternate_count"] == 2 and rep["predicates_agree"] is False
    code, out, _ = run(capsys, "dual", "B3")
    assert code == 0 and "bijection = yes" in out and "table: 7" in out
    assert run(capsys, "dual", "E6")[0] == 2


def test_verify_single_and_all(capsys):
    code, out, _ = run(capsys, "verify", "C3")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "--all", "--max-rank", "3", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["failed"] == 0
    assert [t["type"] for t in rep["types"]] == ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"]


def test_verify_usage(capsys):
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "verify", "B2", "--all")[0] == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    from abelian_ideals import cli
    from abelian_ideals.verify import Check

    monkeypatch.setattr(cli, "verify_type", lambda t: [Check("fake", False, "x", {"roots": []})])
    code, out, _ = run(capsys, "verify", "B2")
    assert code == 1 and "FAIL" in out and "witness" in out


def test_gl_oracle(capsys):
    code, out, _ = run(capsys, "gl-oracle", "4", "2")
    assert code == 0 and out.strip() == "count=12 formula=12 OK"
    code, out, _ = run(capsys, "gl-oracle", "6", "3", "--format", "json")
    assert json.loads(out)["count"] == 50
    assert run(capsys, "gl-oracle", "9", "4")[0] == 2
    assert run(capsys, "gl-oracle", "3", "5")[0] == 2


def test_bad_type(capsys):
    assert run(capsys, "ideals", "Q7")[0] == 2
    assert run(capsys, "ideals", "E9")[0] == 2


def test_argparse_errors():
    with pytest.raises(SystemExit) as e:
        main(["nonsense"])
    assert e.value.code == 2


def test_out_and_quiet(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "ideals", "A2", "--format", "json", "--out", str(target), "--quiet")
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["count"] == 4


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "abelian_ideals", "gl-oracle", "3", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "count=5 formula=5 OK"
