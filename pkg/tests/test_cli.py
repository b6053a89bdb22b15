import json
import subprocess
import sys

import pytest

from coideal_schur.cli import JobConfig, main, run


def invoke(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None)


def test_dim_report(capsys):
    code, doc = invoke(capsys, "--task", "dim", "--n", "4", "--d", "2")
    assert code == 0
    assert doc["schema"] == 1 and doc["status"] == "pass"
    assert doc["dimB"] == doc["dimA_sum"] == 36


def test_job_list(capsys):
    code, doc = invoke(capsys, "--task", "dim", "--n", "2,3", "--d", "1,2")
    assert code == 0
    assert [(j["params"]["n"], j["params"]["d"]) for j in doc["jobs"]] == [(2, 1), (2, 2), (3, 1), (3, 2)]
    assert [j["dimB"] for j in doc["jobs"]] == [2, 3, 5, 15]


def test_parallel_matches_serial(capsys):
    args = ("--task", "centralizer", "--n", "2,3", "--d", "1,2")
    _, serial = invoke(capsys, *args)
    code, par = invoke(capsys, *args, "--parallel", "2")
    assert code == 0 and serial == par


def test_iso_and_qcoord(capsys):
    for task in ("verify-iso", "qcoord-check"):
        code, doc = invoke(capsys, "--task", task, "--n", "2", "--d", "1")
        assert code == 0, doc
        assert all(c["status"] == "pass" for c in doc["details"]["checks"])


def test_counterexample_via_cli(capsys):
    code, doc = invoke(capsys, "--task", "cell-check", "--n", "2", "--d", "1", "--field", "gaussian", "--Q", "i")
    assert code == 0
    assert doc["details"]["quasi_hereditary"] is False


def test_reptype(capsys):
    code, doc = invoke(capsys, "--task", "reptype", "--n", "3", "--d", "6", "--p", "3", "--l", "2")
    assert code == 0 and doc["type"] == "tame"
    assert doc["params"]["l"] == 2


def test_skipped_exit_code(capsys):
    code, doc = invoke(capsys, "--task", "reptype", "--n", "3", "--d", "6", "--l", "1")
    assert code == 2 and doc["status"] == "skipped"


def test_failed_check_exit_code(capsys):
    code, doc = invoke(capsys, "--task", "verify-dj", "--n", "3", "--d", "2")
    assert code == 1 and doc["status"] == "fail"


def test_usage_errors(capsys):
    assert main(["--task", "dim", "--n", "2"]) == 2
    assert main(["--task", "dim", "--n", "x", "--d", "1"]) == 2
    assert main(["--task", "verify-iso", "--n", "2", "--d", "1", "--q", "0"]) == 2
    with pytest.raises(SystemExit):
        main(["--task", "nonsense"])


def test_json_file(tmp_path, capsys):
    path = tmp_path / "report.json"
    assert main(["--task", "conditions", "--n", "4", "--d", "2", "--json", str(path)]) == 0
    assert capsys.readouterr().out == ""
    doc = json.loads(path.read_text())
    assert doc["details"] == {"fB_invertible": True, "r_ge_d": True, "ell_ge_4_or_generic": True}


def test_run_directly():
    rep = run(JobConfig("dim", 2, 3))
    assert rep["dimB"] == 4 and rep["task"] == "dim"


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "coideal_schur.cli", "--task", "dim", "--n", "3", "--d", "1"], capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["dimB"] == 5
