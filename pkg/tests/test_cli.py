"""CLI contract: JSON shapes, exit codes, determinism."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from dsbranch.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_cascade_example_bytes(capsys):
    code, out = _run(capsys, "cascade", "--group", "su", "--p", "2", "--q", "3")
    assert code == 0
    assert out == '{"cascade":[["1","0","0","0","-1"],["0","1","0","-1","0"]]}\n'


def test_blattner_param_example_bytes(capsys):
    code, out = _run(
        capsys, "blattner-param", "--group", "sp", "--n", "4", "--lambda", "5,3,1,-2"
    )
    assert code == 0
    assert out == '{"Lambda":["6","5","3","-1"],"condition_1_2":false}\n'


def test_admissible_example(capsys):
    code, out = _run(
        capsys, "admissible", "--group", "su", "--p", "2", "--q", "3",
        "--subgroup", "su-q-block",
    )
    assert code == 0
    assert json.loads(out) == {"status": "Admissible", "certificate": "ConeKernelTrivial"}


def test_output_is_deterministic(capsys):
    args = ("chambers", "--group", "sp", "--n", "3")
    _, first = _run(capsys, *args)
    _, second = _run(capsys, *args)
    assert first == second
    payload = json.loads(first)
    assert len(payload["chambers"]) == 8


def test_pair_and_cone_shapes(capsys):
    code, out = _run(capsys, "pair", "--group", "sp", "--n", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["family"] == "sp"
    assert payload["params"] == [2]
    assert payload["cascade"] == [["2", "0"], ["0", "2"]]
    assert payload["rho_n"] == ["3/2", "3/2"]
    code, out = _run(capsys, "cone", "--group", "su", "--p", "2", "--q", "2")
    assert json.loads(out)["generators"] == [
        ["1", "0", "0", "-1"],
        ["1", "1", "-1", "-1"],
    ]


def test_domain_error_exit_2(capsys):
    code, out = _run(
        capsys, "blattner-param", "--group", "sp", "--n", "2", "--lambda", "2,2"
    )
    assert code == 2
    err = json.loads(out)["error"]
    assert err["code"] == "not-ghat-d"
    assert "message" in err


def test_arity_mismatch_exit_2(capsys):
    code, out = _run(capsys, "condition", "--group", "sp", "--n", "2", "--lambda", "1")
    assert code == 2
    assert json.loads(out)["error"]["code"] == "ambient-mismatch"


def test_usage_error_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["kmult", "--group", "sp", "--n", "2"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["pair", "--group", "su", "--p", "2"])  # missing --q
    assert exc.value.code == 1


def test_subgroup_exclusive_flags(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["admissible", "--group", "sp", "--n", "2"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(
            ["admissible", "--group", "sp", "--n", "2", "--subgroup", "torus",
             "--subgroup-file", "x.json"]
        )
    assert exc.value.code == 1


def test_subgroup_file(tmp_path, capsys):
    desc = {
        "name": "diag",
        "projection": [["1", "1"]],
        "h_type": "torus",
        "flags": {"is_torus": True, "contains_center": True},
    }
    path = tmp_path / "sub.json"
    path.write_text(json.dumps(desc), encoding="utf-8")
    code, out = _run(
        capsys, "admissible", "--group", "sp", "--n", "2", "--subgroup-file", str(path)
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["certificate"] == "CenterGrading"
    assert payload["eta"] == ["1"]
    code, out = _run(
        capsys, "admissible", "--group", "sp", "--n", "2", "--subgroup-file",
        str(tmp_path / "missing.json"),
    )
    assert code == 2
    assert json.loads(out)["error"]["code"] == "bad-input"


def test_subgroup_file_stdin():
    desc = {
        "name": "diag",
        "projection": [["1", "1"]],
        "h_type": "torus",
        "flags": {"is_torus": True, "contains_center": True},
    }
    proc = subprocess.run(
        [sys.executable, "-m", "dsbranch", "admissible", "--group", "sp", "--n", "2",
         "--subgroup-file", "-"],
        input=json.dumps(desc),
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "Admissible"


def test_mult_commands(capsys):
    code, out = _run(
        capsys, "kmult", "--group", "sp", "--n", "2", "--Lambda", "3,3", "--mu", "5,3"
    )
    assert code == 0 and json.loads(out) == {"mult": 1}
    code, out = _run(
        capsys, "blattner", "--group", "sp", "--n", "2", "--lambda", "2,1", "--mu", "4,4"
    )
    assert code == 0 and json.loads(out) == {"mult": 0}
    code, out = _run(
        capsys, "hmult", "--group", "sp", "--n", "2", "--subgroup", "torus",
        "--Lambda", "3,3", "--mu", "4,4",
    )
    assert code == 0 and json.loads(out) == {"complete": True, "mult": 1}
    code, out = _run(
        capsys, "ds-hmult", "--group", "sp", "--n", "2", "--subgroup", "torus",
        "--lambda", "2,1", "--mu", "5,3",
    )
    assert code == 0 and json.loads(out) == {"complete": True, "mult": 1}


def test_schmid_and_branch_commands(capsys):
    code, out = _run(capsys, "schmid", "--group", "sp", "--n", "2", "--degree", "2")
    assert code == 0
    assert json.loads(out)["terms"] == [
        {"degree": 2, "hw": ["2", "2"], "mult": 1},
        {"degree": 2, "hw": ["4", "0"], "mult": 1},
    ]
    code, out = _run(
        capsys, "branch", "--group", "su", "--p", "2", "--q", "3",
        "--subgroup", "su-p-block", "--weight", "1,0,0,0,-1",
    )
    assert code == 0
    assert json.loads(out)["terms"] == [{"hw": ["1/2", "-1/2"], "mult": 3}]


def test_pretty_output(capsys):
    code, out = _run(capsys, "cascade", "--group", "sp", "--n", "1", "--pretty")
    assert code == 0
    assert out == '{\n  "cascade": [\n    [\n      "2"\n    ]\n  ]\n}\n'


def test_version(capsys):
    code, out = _run(capsys, "--version")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema_version"] == "1"
    assert "version" in payload


def test_verify_paper_single_item(capsys):
    code, out = _run(capsys, "verify-paper", "--item", "sp4-counterexample")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["items"] == [{"name": "sp4-counterexample", "status": "pass"}]


def test_verify_paper_rejects_unknown_item():
    with pytest.raises(SystemExit) as exc:
        main(["verify-paper", "--item", "missing"])
    assert exc.value.code == 1
