import json
import subprocess
import sys

import pytest
from click.testing import CliRunner

from hermitex.cli import cli


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(cli, list(args))

    return invoke


def test_hermite(run):
    res = run("hermite", "--n", "2")
    assert res.exit_code == 0 and res.output.strip() == "-2, 0, 4"
    data = json.loads(run("hermite", "--n", "3", "--json").output)
    assert data["coefficients"] == ["0", "-12", "0", "8"]


def test_apply_w(run):
    assert run("apply-w", "--c", "-1/4", "--poly", "0,0,1").output.strip() == "-1/2, 0, 1"
    assert run("apply-w", "--c", "1/2", "--poly", "0,0,0,0,1").output.strip() == "3, 0, 6, 0, 1"
    data = json.loads(run("apply-w", "--c", "1/2", "--poly", "0,0,1", "--json").output)
    assert data["result"]["text"] == "1, 0, 1"


def test_gauss(run):
    res = run("gauss", "--u", "1/2", "--poly", "0,-12,0,8")
    assert res.output.strip() == "0, 0, 0, 8"
    data = json.loads(run("gauss", "--u", "1/2", "--poly", "0,0,0,1", "--x", "1", "--numeric", "--json").output)
    assert data["symbolic_value"] == 2.5
    assert abs(data["numeric_value"] - 2.5) < 1e-14


def test_gauss_errors(run):
    res = run("gauss", "--u", "-1", "--poly", "1", "--x", "0", "--numeric")
    assert res.exit_code == 2 and "symbolic path" in res.output
    assert run("gauss", "--u", "1", "--poly", "1", "--numeric").exit_code == 2


def test_quad_json(run):
    data = json.loads(run("quad", "--m", "2", "--json").output)
    assert [set(d) for d in data] == [{"node", "weight"}] * 2
    assert data[1]["node"] == pytest.approx(2 ** -0.5, rel=1e-16)


def test_genfunc(run):
    data = json.loads(run("genfunc", "--x", "0", "--t", "1", "--nmax", "40", "--json").output)
    assert data["egf_residual"] <= 1e-12 and data["transformed_residual"] <= 1e-12


def test_verify_exit_codes(run):
    assert run("verify", "--suite", "eq3b", "--nmax", "4").exit_code == 0
    assert run("verify", "--suite", "eq3b", "--nmax", "4", "--tol", "1e-30").exit_code == 1
    assert run("verify", "--nmax", "-3").exit_code == 2


def test_bad_polynomial(run):
    res = run("apply-w", "--c", "1", "--poly", "1/0")
    assert res.exit_code == 2 and "zero denominator at token 1" in res.output


def _proc(*args, env=None):
    import os

    full_env = dict(os.environ, **(env or {}))
    return subprocess.run([sys.executable, "-m", "hermitex", *args], capture_output=True, text=True, env=full_env)


def test_errors_go_to_stderr_only():
    p = _proc("hermite", "--n", "1000")
    assert p.returncode == 2 and p.stdout == "" and "exceeds cap" in p.stderr


def test_cap_env_var():
    assert _proc("hermite", "--n", "7", env={"HERMITEX_CAP": "5"}).returncode == 2
    assert _proc("hermite", "--n", "250", env={"HERMITEX_CAP": "300"}).returncode == 0
