import csv
import io
import json
import subprocess
import sys

import pytest

from ryser.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_hadamard(capsys):
    code, out, _ = run(capsys, "verify", "1,-1,-1,-1")
    assert code == 0 and "hadamard   yes" in out


def test_verify_not_hadamard(capsys):
    code, out, _ = run(capsys, "verify", "1,1,1,1", "--format", "json")
    assert code == 1
    rep = json.loads(out)
    assert rep["is_circulant_hadamard"] is False
    assert rep["paf"] == [4, 4, 4, 4] and rep["row_sum"] == 4


def test_verify_bitstring(capsys):
    code, out, _ = run(capsys, "verify", "0111", "--format", "json")
    assert code == 0 and json.loads(out)["row"] == [1, -1, -1, -1]


def test_verify_bad_token(capsys):
    code, _, err = run(capsys, "verify", "1,2,1")
    assert code == 2 and "'2'" in err


def test_verify_file(tmp_path, capsys):
    p = tmp_path / "row.txt"
    p.write_text("1,-1,-1,-1\n")
    code, _, _ = run(capsys, "verify", str(p))
    assert code == 0


def test_verify_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("-1,-1,-1,1\n"))
    code, _, _ = run(capsys, "verify", "-")
    assert code == 0


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "1,-1,-1,-1")
    d = json.loads(out)
    assert code == 0
    assert d["e1"] == [1, -1] and d["e2"] == [-1, -1]
    assert (d["lambda1"], d["lambda2"]) == (0, -2)


def test_decompose_odd_length(capsys):
    code, _, err = run(capsys, "decompose", "1,-1,1")
    assert code == 2 and err.startswith("error:")


def test_conditions(capsys):
    code, out, _ = run(capsys, "conditions", "1,-1,-1,-1")
    prof = json.loads(out)["profile"]
    assert code == 0 and all(prof[k] for k in ("cond_a", "cond_b", "cond_c", "cond_d"))


def test_search_writes_reports(tmp_path, capsys):
    code, out, _ = run(capsys, "search", "--orders", "4,6-10", "--out", str(tmp_path))
    assert code == 0
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ["full_10.json", "full_4.json", "full_6.json", "full_8.json", "full_summary.csv"]
    rep = json.loads((tmp_path / "full_4.json").read_text())
    assert len(rep["hits"]) == 8 and rep["schema_version"] == "1"
    with open(tmp_path / "full_summary.csv") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["order", "mode", "examined", "hits", "elapsed_ms"]
    assert [r[0] for r in rows[1:]] == ["4", "6", "8", "10"]
    assert [r[3] for r in rows[1:]] == ["8", "0", "0", "0"]
    assert "-1,-1,-1,1" in out


def test_search_json_byte_round_trip(tmp_path, capsys):
    run(capsys, "search", "--orders", "4", "--out", str(tmp_path))
    text = (tmp_path / "full_4.json").read_text()
    assert json.dumps(json.loads(text), indent=2) + "\n" == text


def test_search_limit_writes_nothing(tmp_path, capsys):
    out_dir = tmp_path / "out"
    code, _, err = run(capsys, "search", "--orders", "4,36", "--out", str(out_dir))
    assert code == 3 and "limit" in err
    assert not out_dir.exists()


def test_search_campaign_modes(tmp_path, capsys):
    code, _, _ = run(capsys, "search", "--orders", "4,8", "--mode", "rank1_constrained",
                     "--no-prune-rowsum", "--out", str(tmp_path))
    assert code == 0
    assert len(json.loads((tmp_path / "rank1_constrained_4.json").read_text())["hits"]) == 8
    code, _, _ = run(capsys, "search", "--orders", "16", "--mode", "rank2_constrained")
    assert code == 0


def test_search_bad_orders(capsys):
    assert run(capsys, "search", "--orders", "x")[0] == 2
    assert run(capsys, "search", "--orders", "5", "--mode", "rank1_constrained")[0] == 2


def test_lemmas_single_suite(capsys):
    code, out, _ = run(capsys, "lemmas", "--suite", "rank1", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["suites"][0]["name"] == "rank1" and d["suites"][0]["passed"]


def test_lemmas_failing_suite_exit_code(capsys):
    code, out, _ = run(capsys, "lemmas", "--suite", "projection")
    assert code == 1 and "FAIL" in out


def test_lemmas_unknown_suite(capsys):
    code, _, err = run(capsys, "lemmas", "--suite", "nope")
    assert code == 2 and "available" in err


def test_plotkin(capsys):
    code, out, _ = run(capsys, "plotkin", "--m", "11", "--d", "6", "--oracle")
    d = json.loads(out)
    assert code == 0 and d["bound"] == 12 and d["oracle_size"] == 12


def test_plotkin_sweep(capsys):
    code, out, _ = run(capsys, "plotkin", "--m", "6", "--sweep")
    recs = json.loads(out)
    assert code == 0 and all(r["oracle_size"] <= r["bound"] for r in recs)


def test_plotkin_needs_d(capsys):
    assert run(capsys, "plotkin", "--m", "6")[0] == 2


def test_macwilliams(capsys):
    code, out, _ = run(capsys, "macwilliams", "--orders", "2,3,4")
    assert code == 0
    assert [r["count"] for r in json.loads(out)] == [2, 1, 4]


def test_macwilliams_limit(capsys):
    assert run(capsys, "macwilliams", "--orders", "30")[0] == 3


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ryser.cli", "verify", "1,-1,-1,-1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
