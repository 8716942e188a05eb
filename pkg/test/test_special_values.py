from fractions import Fraction
import io
import logging
import os.path

import pytest

from log_algebraic.adapter.logging import init_logger
from log_algebraic.command import example as command_example
from log_algebraic.command import selftest as command_selftest
from log_algebraic.model.config import Config
from log_algebraic.model.point import AffinePoint
from log_algebraic.model.special_values import run_example

LOG_FILE = os.path.join("test", "fixtures", "output", "log-algebraic.log")

EXACT_RESULTS = {
    "one": "Omega/5",
    "two": "(Omega - 2*Omega')/sqrt(-3)",
    "three": "(5/14)*(1 + sqrt(-3))*g(psi)*Omega",
}


@pytest.mark.slow
@pytest.mark.parametrize("which", ["one", "two", "three"])
def test_example(which):
    report = run_example(which, dps=30)
    assert report.ok, f"first failing quantity: {report.first_failure}"
    assert report.exact_result == EXACT_RESULTS[which]


@pytest.mark.slow
def test_example_one_intermediates():
    report = run_example("one", dps=30)
    found = {q.name: q.value for q in report.intermediates}
    assert found["2P"] == AffinePoint(Fraction(47, 3), Fraction(-121, 2))
    assert found["order of 2P"] == 5
    assert found["L / Omega"] == Fraction(1, 5)


@pytest.mark.slow
def test_example_report_json():
    report = run_example("two", dps=30)
    found = report.to_json()
    assert found["example"] == "two"
    assert found["ok"] is True
    assert found["first_failure"] is None
    assert found["inputs"]["character"] == "quad:-3"
    assert all("name" in q and "ok" in q for q in found["intermediates"])


@pytest.mark.slow
def test_example_command():
    init_logger(level=logging.DEBUG, log_file=LOG_FILE)
    out = io.StringIO()
    report = command_example.main(Config(name="test"), "three", out)
    assert report.ok
    assert "exact result: (5/14)*(1 + sqrt(-3))*g(psi)*Omega" in out.getvalue()


def test_unknown_example():
    with pytest.raises(ValueError):
        run_example("four")


def test_selftest_fast_subset():
    init_logger(level=logging.DEBUG, log_file=LOG_FILE)
    out = io.StringIO()
    checks = command_selftest.main(Config(name="test"), prec=8, target=out)
    assert all(c.passed for c in checks), [str(c) for c in checks if not c.passed]
    assert "mutation of a_5" in [c.name for c in checks]
    assert out.getvalue().rstrip().endswith(f"{len(checks)} passed, 0 failed")


@pytest.mark.slow
def test_selftest_full_suite():
    init_logger(level=logging.DEBUG, log_file=LOG_FILE)
    out = io.StringIO()
    checks = command_selftest.main(Config(name="test"), prec=20, target=out)
    assert all(c.passed for c in checks), [str(c) for c in checks if not c.passed]
    names = [c.name for c in checks]
    assert "honda to degree 30" in names
    assert "main-b beta = u - u^2" in names
    assert out.getvalue().rstrip().endswith(f"{len(checks)} passed, 0 failed")
