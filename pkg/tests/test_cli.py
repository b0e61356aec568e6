import io
import json
import subprocess
import sys

import pytest

from geomcrystal.cli import main


@pytest.fixture
def ones(tmp_path):
    path = tmp_path / "ones.json"
    path.write_text('{"all": "1"}')
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_expand_v1(capsys, ones):
    code, out, _ = run(capsys, "expand", "--variety", "v1", "--point", ones)
    lines = dict(line.split() for line in out.splitlines())
    assert code == 0 and len(lines) == 32
    assert lines["------"] == "1" and lines["++++++"] == "1" and lines["++----"] == "14"
    assert out.splitlines()[0].startswith("++++++")


def test_expand_v2_json(capsys, ones):
    code, out, _ = run(capsys, "expand", "--variety", "v2", "--point", ones, "--json")
    coeffs = json.loads(out)["coefficients"]
    assert code == 0 and coeffs["+----+"] == "1" and len(coeffs) == 32


def test_stdin_point(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO('{"all": "1"}'))
    code, out, _ = run(capsys, "eval", "--fn", "gamma", "--variety", "v1", "--k", "0", "--point", "-")
    assert (code, out.strip()) == (0, "1")


@pytest.mark.parametrize("k, want", [("0", "14"), ("6", "3"), ("4", "4")])
def test_eval_epsilon(capsys, ones, k, want):
    code, out, _ = run(capsys, "eval", "--fn", "epsilon", "--variety", "v1", "--k", k, "--point", ones)
    assert (code, out.strip()) == (0, want)


def test_eval_json(capsys, ones):
    code, out, _ = run(capsys, "eval", "--fn", "gamma", "--variety", "v2", "--k", "5", "--point", ones, "--json")
    assert json.loads(out) == {"fn": "gamma", "variety": "v2", "k": 5, "value": "1"}


def test_act(capsys, ones):
    _, out, _ = run(capsys, "act", "--variety", "v1", "--k", "1", "--c", "3", "--point", ones)
    x = json.loads(out)["x"]
    assert x["1_1"] == "3" and sum(v == "1" for v in x.values()) == 14
    _, out, _ = run(capsys, "act", "--variety", "v1", "--k", "5", "--c", "4", "--point", ones)
    x = json.loads(out)["x"]
    assert (x["5_2"], x["5_1"]) == ("5/2", "8/5")


def test_act_e0_with_c_one_is_identity(capsys, tmp_path):
    path = tmp_path / "p.json"
    point = {"x": {k: f"{i + 2}/{i + 3}" for i, k in enumerate(["6_3", "4_4", "3_3", "2_2", "5_2", "4_3", "3_2", "6_2", "4_2", "5_1", "1_1", "2_1", "3_1", "4_1", "6_1"])}}
    path.write_text(json.dumps(point))
    code, out, _ = run(capsys, "act", "--variety", "v1", "--k", "0", "--c", "1", "--point", str(path))
    assert code == 0 and json.loads(out) == point


def test_sigma_bar_round_trip(capsys, ones, tmp_path):
    _, out, _ = run(capsys, "sigma-bar", "--point", ones)
    fwd = json.loads(out)
    assert fwd["a"] == "1" and fwd["y"]["5_3"] == "4" and fwd["y"]["6_1"] == "1"
    path = tmp_path / "y.json"
    path.write_text(json.dumps({"y": fwd["y"]}))
    _, out, _ = run(capsys, "sigma-bar-inv", "--point", str(path))
    assert set(json.loads(out)["x"].values()) == {"1"}


@pytest.mark.parametrize(
    "argv",
    [
        ["act", "--variety", "v2", "--k", "1", "--c", "2"],
        ["act", "--variety", "v1", "--k", "9", "--c", "2"],
        ["act", "--variety", "v1", "--k", "1", "--c", "0.5"],
        ["verify", "--suite", "nonsense"],
        ["verify", "--trials", "0"],
        ["eval", "--fn", "delta", "--variety", "v1", "--k", "1"],
        ["expand", "--variety", "v3"],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, ones, argv):
    if argv and argv[0] != "verify":
        argv = argv + ["--point", ones]
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_malformed_json_exits_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, out, err = run(capsys, "expand", "--variety", "v1", "--point", str(path))
    assert code == 2 and out == "" and "malformed JSON" in err
    code, _, _ = run(capsys, "expand", "--variety", "v1", "--point", str(tmp_path / "missing.json"))
    assert code == 2


def test_domain_errors_exit_3(capsys, ones, tmp_path):
    zero = tmp_path / "zero.json"
    zero.write_text('{"all": "0"}')
    code, _, err = run(capsys, "expand", "--variety", "v1", "--point", str(zero))
    assert code == 3 and "domain error" in err
    code, _, _ = run(capsys, "act", "--variety", "v1", "--k", "3", "--c", "0", "--point", ones)
    assert code == 3


def test_verify_trivial_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemma_sigma_bar", "--trials", "1", "--bound", "1")
    report = json.loads(out)
    assert code == 0 and report["pass"] and report["bound"] == 1
    assert report["checks"] == [
        {"name": "lemma_sigma_bar", "severity": "asserted", "trials": 1, "failures": 0, "counterexample": None, "ms": None}
    ]


def test_verify_full_suite_default_settings(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--trials", "100", "--seed", "42", "--bound", "20")
    report = json.loads(out)
    assert code == 0 and report["pass"]
    assert all(c["failures"] == 0 for c in report["checks"])


def test_verify_failure_exits_1(capsys, monkeypatch):
    from geomcrystal import d6, verify

    monkeypatch.setattr(verify, "act_e_v2", lambda k, c, q: d6.act_e_v2(k, c * 2, q))
    code, out, _ = run(capsys, "verify", "--suite", "prop_intertwine_24", "--trials", "2")
    assert code == 1 and json.loads(out)["pass"] is False


def _cli(*argv, env=None):
    return subprocess.run([sys.executable, "-m", "geomcrystal", *argv], capture_output=True, text=True, env=env)


def test_seed_environment_variable(monkeypatch):
    import os

    env = dict(os.environ, GEOMCRYSTAL_SEED="1234")
    r = _cli("verify", "--suite", "prop_inverse", "--trials", "2", env=env)
    assert json.loads(r.stdout)["seed"] == 1234
    r = _cli("verify", "--suite", "prop_inverse", "--trials", "2", "--seed", "5", env=env)
    assert json.loads(r.stdout)["seed"] == 5
    env["GEOMCRYSTAL_SEED"] = "abc"
    assert _cli("verify", "--suite", "prop_inverse", "--trials", "2", env=env).returncode == 2


def test_timing_is_opt_in(monkeypatch, capsys):
    monkeypatch.setenv("GEOMCRYSTAL_TIMING", "1")
    _, out, _ = run(capsys, "verify", "--suite", "prop_inverse", "--trials", "2")
    assert isinstance(json.loads(out)["checks"][0]["ms"], float)


def test_console_script_installed():
    r = subprocess.run(["geomcrystal", "--help"], capture_output=True, text=True)
    assert r.returncode == 0 and "sigma-bar-inv" in r.stdout
