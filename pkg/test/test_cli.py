import json
import os.path

import pytest

from log_algebraic.__main__ import cmd_dispatch
from log_algebraic.model.report import SCHEMA

CONFIG_FILE = os.path.join("test", "fixtures", "log-algebraic.ini")


def test_verify_holds(capsys):
    status, report = cmd_dispatch(
        ["verify", "-c", CONFIG_FILE, "--identity", "logalg1a", "--prec", "10"]
    )
    assert status == 0
    assert report.results.holds
    assert "logalg1a [QQ, O(t^10)]: holds" in capsys.readouterr().out


@pytest.mark.parametrize(
    "identity", ["wp", "xy-phi", "phi-differential", "phi-morphism", "honda"]
)
def test_verify_identities(identity):
    status, _ = cmd_dispatch(
        ["verify", "-c", CONFIG_FILE, "--identity", identity, "--prec", "8"]
    )
    assert status == 0


def test_verify_main_identities_with_beta():
    for identity in ["main-a", "main-b"]:
        status, report = cmd_dispatch(
            [
                "verify",
                "-c",
                CONFIG_FILE,
                "--identity",
                identity,
                "--beta",
                "1,-1@1",
                "--prec",
                "6",
            ]
        )
        assert status == 0
        assert report.results.detail.startswith("beta = u - u^2")


@pytest.mark.parametrize("curve", ["11a-eta", "11a-file", "11a-primes"])
def test_verify_with_curve_files(curve):
    status, _ = cmd_dispatch(
        ["verify", "-c", CONFIG_FILE, "--identity", "logalg1a", "--curve", curve, "--prec", "8"]
    )
    assert status == 0


def test_fast_profile():
    status, report = cmd_dispatch(
        ["verify", "-c", CONFIG_FILE, "--profile", "fast", "--identity", "wp"]
    )
    assert status == 0
    assert report.results.prec == 8


def test_curve_describe():
    status, report = cmd_dispatch(["curve", "describe", "-c", CONFIG_FILE, "--terms", "5"])
    assert status == 0
    assert report.results["name"] == "X0(11)"
    assert report.results["a_n"] == [1, -2, -1, 2, 1]


def test_modform_commands(capsys):
    status, report = cmd_dispatch(["modform", "coeffs", "-c", CONFIG_FILE, "--level", "11", "--prec", "6"])
    assert status == 0
    assert report.results["a_n"] == [1, -2, -1, 2, 1]
    assert "5 1" in capsys.readouterr().out

    status, report = cmd_dispatch(["modform", "phi", "-c", CONFIG_FILE, "--prec", "6"])
    assert status == 0
    assert report.results["lambda"] == "t - t^2 - 1/3*t^3 + 1/2*t^4 + 1/5*t^5 + O(t^6)"

    status, _ = cmd_dispatch(["modform", "xy", "-c", CONFIG_FILE, "--prec", "6"])
    assert status == 0

    status, report = cmd_dispatch(["modform", "honda", "-c", CONFIG_FILE, "--prec", "10"])
    assert status == 0
    assert report.results["integral"]


def test_lvalue_commands():
    status, report = cmd_dispatch(["lvalue", "-c", CONFIG_FILE, "--terms", "100"])
    assert status == 0
    assert abs(report.results["L"] - 0.2538418608) < 1e-9

    status, report = cmd_dispatch(
        ["lvalue", "twist", "-c", CONFIG_FILE, "--char", "quad:-3", "--terms", "200"]
    )
    assert status == 0
    assert abs(report.results["L"] - 1.6844963329) < 1e-9


def test_domain_error_exit_status(capsys):
    status, report = cmd_dispatch(["modform", "coeffs", "-c", CONFIG_FILE, "--level", "37"])
    assert status == 1
    assert report.results["error"] == "NoEtaProduct"
    assert "error: NoEtaProduct" in capsys.readouterr().err


def test_bad_beta_exit_status(capsys):
    status, _ = cmd_dispatch(
        ["verify", "-c", CONFIG_FILE, "--identity", "main-a", "--beta", "1,x@1"]
    )
    assert status == 1
    assert "Cannot parse beta" in capsys.readouterr().err


def test_unknown_profile():
    status, _ = cmd_dispatch(["curve", "describe", "-c", CONFIG_FILE, "--profile", "nope"])
    assert status == 1


def test_usage_errors():
    with pytest.raises(SystemExit) as e:
        cmd_dispatch([])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        cmd_dispatch(["lvalue", "twist", "-c", CONFIG_FILE])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        cmd_dispatch(["verify", "-c", CONFIG_FILE, "--identity", "no-such-identity"])
    assert e.value.code == 2


def test_json_to_file(tmp_path):
    output = str(tmp_path / "report.json")
    status, _ = cmd_dispatch(
        ["verify", "-c", CONFIG_FILE, "--identity", "logalg1a", "--prec", "8", "--json", output]
    )
    assert status == 0
    with open(output, "r", encoding="UTF-8") as f:
        found = json.load(f)
    assert found["schema"] == SCHEMA
    assert found["status"] == 0
    assert found["results"]["identity"] == "logalg1a"
    assert found["results"]["holds"] is True


def test_json_to_stdout(capsys):
    status, _ = cmd_dispatch(
        ["modform", "coeffs", "-c", CONFIG_FILE, "--level", "11", "--prec", "4", "--json"]
    )
    assert status == 0
    found = json.loads(capsys.readouterr().out)
    assert found["results"]["a_n"] == [1, -2, -1]


def test_json_is_reproducible(capsys):
    argv = ["verify", "-c", CONFIG_FILE, "--identity", "wp", "--prec", "8", "--json"]
    cmd_dispatch(argv)
    first = capsys.readouterr().out
    cmd_dispatch(argv)
    assert capsys.readouterr().out == first
