from fractions import Fraction
import os.path

import pytest

from log_algebraic.adapter import config_file
from log_algebraic.adapter.coeff_file import load_coeffs, parse_lines
from log_algebraic.command.util import coefficients, curve_data, resolve_curve
from log_algebraic.model.config import (
    BUILTIN_CURVES,
    Config,
    CurveSpec,
    EtaProductSource,
    FileSource,
    PrimesSource,
)
from log_algebraic.model.errors import InvalidEigenform, ParseError
from log_algebraic.model.newform import eta_product_coeffs

FIXTURES = os.path.join("test", "fixtures")
CONFIG_FILE = os.path.join(FIXTURES, "log-algebraic.ini")
CURVE_DIR = os.path.join(FIXTURES, "curves")
COEFFICIENT_DIR = os.path.join(FIXTURES, "coefficients")

X0_11_COEFFICIENTS = tuple(Fraction(c) for c in (0, -1, 1, -10, -20))


def test_parse_config_file():
    configs = config_file.parse_file(CONFIG_FILE, environ={})
    assert set(configs) == {"log-algebraic", "fast"}
    default = configs["log-algebraic"]
    assert default.prec == 16
    assert default.dps == 25
    assert default.terms == 400
    assert default.curve_dir == CURVE_DIR
    assert default.eta_products == {11: {1: 2, 11: 2}}
    fast = configs["fast"]
    assert fast.name == "fast"
    assert fast.prec == 8
    assert fast.terms == 200
    # inherited from the default section
    assert fast.dps == 25


def test_missing_config_file_gives_defaults():
    configs = config_file.parse_file(os.path.join(FIXTURES, "no-such-file.ini"), environ={})
    assert list(configs) == ["log-algebraic"]
    assert configs["log-algebraic"] == Config(name="log-algebraic")


def test_precision_from_environment():
    configs = config_file.parse_file(CONFIG_FILE, environ={config_file.PREC_VARIABLE: "12"})
    assert all(c.prec == 12 for c in configs.values())


def test_parse_eta_product():
    assert config_file.parse_eta_product("\n1 2\n11 2") == {1: 2, 11: 2}
    with pytest.raises(ValueError):
        config_file.parse_eta_product("")
    with pytest.raises(ValueError):
        config_file.parse_eta_product("1 2 3")
    with pytest.raises(ValueError):
        config_file.parse_eta_product("1 x")


def test_parse_curve_files():
    spec = config_file.parse_curve_file(os.path.join(CURVE_DIR, "11a-eta.ini"))
    assert spec.name == "11a-eta"
    assert spec.coefficients == X0_11_COEFFICIENTS
    assert spec.conductor == 11
    assert spec.sign == 1
    assert spec.source == EtaProductSource(((1, 2), (11, 2)))

    spec = config_file.parse_curve_file(os.path.join(CURVE_DIR, "11a-file.ini"))
    assert spec.source == FileSource(os.path.join(CURVE_DIR, "..", "coefficients", "11a.txt"))

    spec = config_file.parse_curve_file(os.path.join(CURVE_DIR, "11a-primes.ini"))
    assert isinstance(spec.source, PrimesSource)
    assert spec.source.primes[:3] == ((2, -2), (3, -1), (5, 1))


def test_parse_curve_section_errors():
    base = {"name": "E", "conductor": "11", "coefficients": "0 -1 1 -10 -20"}
    config_file.parse_curve_section(base)
    for (key, value) in [
        ("coefficients", "0 -1 1 -10"),
        ("coefficients_from", "modular-symbols"),
        ("coefficients_from", "file no-such-file.txt"),
        ("coefficients_from", "primes"),
        ("sign", "2"),
        ("conductor", "0"),
    ]:
        with pytest.raises(ValueError):
            config_file.parse_curve_section(dict(base, **{key: value}), FIXTURES)
    with pytest.raises(ValueError):
        config_file.parse_curve_section({"conductor": "11"})


def test_missing_curve_file():
    with pytest.raises(ValueError):
        config_file.parse_curve_file(os.path.join(CURVE_DIR, "no-such-curve.ini"))


def test_curve_spec():
    spec = BUILTIN_CURVES["11"]
    curve = spec.curve()
    assert curve.conductor == 11
    assert curve.discriminant == -161051
    with pytest.raises(ValueError):
        CurveSpec("E", X0_11_COEFFICIENTS[:4], 11)


def test_resolve_curve():
    config = build_config()
    assert resolve_curve("builtin:11", config) == BUILTIN_CURVES["11"]
    assert resolve_curve("11a-primes", config).name == "11a-primes"
    assert resolve_curve(os.path.join(CURVE_DIR, "11a-file.ini"), config).name == "11a-file"
    with pytest.raises(ValueError):
        resolve_curve("builtin:37", config)
    with pytest.raises(ValueError):
        resolve_curve("37a", config)


@pytest.mark.parametrize("name", ["builtin:11", "11a-eta", "11a-file", "11a-primes"])
def test_coefficient_sources_agree(name):
    config = build_config()
    spec = resolve_curve(name, config)
    assert coefficients(spec, config, 30).coeffs == eta_product_coeffs(11, 30).coeffs


def test_coefficient_file_too_short():
    config = build_config()
    with pytest.raises(ValueError):
        curve_data("11a-file", config, 40)


def test_load_coefficient_file():
    a = load_coeffs(os.path.join(COEFFICIENT_DIR, "11a.txt"), level=11)
    assert a.coeffs == eta_product_coeffs(11, 31).coeffs
    assert str(a.provenance).startswith("file ")


def test_coefficient_file_errors():
    with pytest.raises(InvalidEigenform):
        load_coeffs(os.path.join(COEFFICIENT_DIR, "bad_a6.txt"))
    with pytest.raises(ParseError) as e:
        load_coeffs(os.path.join(COEFFICIENT_DIR, "empty.txt"))
    assert "no coefficients" in str(e.value)
    with pytest.raises(ParseError) as e:
        load_coeffs(os.path.join(COEFFICIENT_DIR, "malformed.txt"))
    assert e.value.line == 3
    with pytest.raises(ParseError) as e:
        load_coeffs(os.path.join(COEFFICIENT_DIR, "gap.txt"))
    assert e.value.line == 3


def test_parse_lines():
    assert parse_lines(["# header", "1 1", "", "2 -2  # a_2", "3 -1"]) == [1, -2, -1]
    with pytest.raises(ParseError):
        parse_lines(["2 -2"])


# ------------------------------------------------------------------------------
# Helpers
# ------------------------------------------------------------------------------


def build_config(**kwargs) -> Config:
    return Config(name="test", curve_dir=CURVE_DIR, **kwargs)
