from configparser import ConfigParser
from fractions import Fraction
import os
import os.path
import shlex
from typing import Dict, List, Mapping, Optional, Tuple

from ..model.config import (
    CoefficientSource,
    Config,
    CurveSpec,
    EtaProductSource,
    FileSource,
    PrimesSource,
)

DEFAULT_SECTION = "log-algebraic"
ETA_PRODUCTS_SECTION = "eta-products"
CURVE_SECTION = "curve"
PREC_VARIABLE = "LOG_ALGEBRAIC_PREC"


def parse_file(
    file_name: str, environ: Optional[Mapping[str, str]] = None
) -> Dict[str, Config]:
    """
    Profiles by name. A missing file gives the built-in defaults; the
    environment variable LOG_ALGEBRAIC_PREC overrides the default truncation
    order of every profile.
    """
    p = ConfigParser(default_section=DEFAULT_SECTION)
    if os.path.exists(file_name):
        p.read([file_name])
    configs = parse_sections(p)
    prec = parse_int((os.environ if environ is None else environ).get(PREC_VARIABLE, ""))
    if prec is not None:
        for config in configs.values():
            config.prec = prec
    return configs


def parse_sections(p: ConfigParser) -> Dict[str, Config]:
    eta_products: Dict[int, Dict[int, int]] = {}
    if p.has_section(ETA_PRODUCTS_SECTION):
        eta_products = {
            int(level): parse_eta_product(value)
            for (level, value) in p.items(ETA_PRODUCTS_SECTION, raw=True)
            if level not in p.defaults()
        }
    profiles = [name for name in p.sections() if name != ETA_PRODUCTS_SECTION]
    return dict(
        [(DEFAULT_SECTION, parse_section(DEFAULT_SECTION, dict(p[DEFAULT_SECTION]), eta_products))]
        + [(name, parse_section(name, dict(p[name]), eta_products)) for name in profiles]
    )


def parse_section(
    name: str, section: Dict[str, str], eta_products: Dict[int, Dict[int, int]]
) -> Config:
    options = [
        ("name", name),
        ("log_file", parse_string(section.get("log_file", ""))),
        ("prec", parse_int(section.get("prec", ""))),
        ("dps", parse_int(section.get("dps", ""))),
        ("terms", parse_int(section.get("terms", ""))),
        ("tolerance", parse_float(section.get("tolerance", ""))),
        ("denom_bound", parse_int(section.get("denom_bound", ""))),
        ("point_tolerance", parse_float(section.get("point_tolerance", ""))),
        ("curve_dir", parse_string(section.get("curve_dir", ""))),
        ("eta_products", eta_products or None),
    ]
    return Config(**dict([(k, v) for (k, v) in options if v is not None]))  # type: ignore


def parse_string(s: str) -> Optional[str]:
    if len(s) == 0:
        return None
    return s.strip()


def parse_int(s: str) -> Optional[int]:
    ss = parse_string(s)
    if ss is None:
        return None
    return int(ss)


def parse_float(s: str) -> Optional[float]:
    ss = parse_string(s)
    if ss is None:
        return None
    return float(ss)


def parse_string_list(s: str) -> Optional[List[str]]:
    if len(s) == 0:
        return None
    ret: List[str] = []
    for line in s.split("\n"):
        pval = parse_string(line)
        if pval is not None:
            ret.append(pval)
    return ret


def parse_int_pairs(s: str, what: str) -> List[Tuple[int, int]]:
    """Lines of two integers, e.g. `d r_d` or `p a_p`."""
    ret: List[Tuple[int, int]] = []
    for line in parse_string_list(s) or []:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"Cannot parse as {what}: '{line}'")
        try:
            ret.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"Cannot parse as {what}: '{line}'") from None
    return ret


def parse_eta_product(s: str) -> Dict[int, int]:
    pairs = parse_int_pairs(s, "eta product factor 'd r_d'")
    if len(pairs) == 0:
        raise ValueError("Empty eta product")
    return dict(pairs)


# ------------------------------------------------------------------------------
# Curve files
# ------------------------------------------------------------------------------


def parse_curve_file(file_name: str) -> CurveSpec:
    if not os.path.exists(file_name):
        raise ValueError(f"Curve file does not exist: {file_name}")
    p = ConfigParser()
    p.read([file_name])
    if not p.has_section(CURVE_SECTION):
        raise ValueError(f"No [{CURVE_SECTION}] section in curve file {file_name}")
    return parse_curve_section(dict(p[CURVE_SECTION]), os.path.dirname(file_name))


def parse_curve_section(section: Dict[str, str], base_dir: str = ".") -> CurveSpec:
    name = parse_string(section.get("name", ""))
    if name is None:
        raise ValueError("Curve has no name")
    conductor = parse_int(section.get("conductor", ""))
    if conductor is None:
        raise ValueError(f"Curve {name} has no conductor")
    sign = parse_int(section.get("sign", "").replace("+", ""))
    return CurveSpec(
        name=name,
        coefficients=parse_coefficients(section.get("coefficients", ""), name),
        conductor=conductor,
        source=parse_source(section, base_dir, name),
        sign=1 if sign is None else sign,
    )


def parse_coefficients(s: str, name: str) -> Tuple[Fraction, ...]:
    parts = s.split()
    if len(parts) != 5:
        raise ValueError(f"Curve {name}: cannot parse coefficients e1 e2 e3 e4 e6: '{s.strip()}'")
    return tuple(Fraction(c) for c in parts)


def parse_source(section: Dict[str, str], base_dir: str, name: str) -> CoefficientSource:
    line = parse_string(section.get("coefficients_from", "")) or "eta-product"
    parts = shlex.split(line)
    if parts[0] == "eta-product":
        table = section.get("eta_product", "")
        if parse_string(table) is None:
            return EtaProductSource()
        return EtaProductSource(tuple(sorted(parse_eta_product(table).items())))
    if parts[0] == "file":
        if len(parts) != 2:
            raise ValueError(f"Curve {name}: cannot parse coefficient file directive: '{line}'")
        file_name = os.path.join(base_dir, parts[1])
        if not os.path.exists(file_name):
            raise ValueError(f"Curve {name}: coefficient file does not exist: {file_name}")
        return FileSource(file_name)
    if parts[0] == "primes":
        primes = parse_int_pairs(section.get("primes", ""), "prime data 'p a_p'")
        if len(primes) == 0:
            raise ValueError(f"Curve {name}: no prime data")
        return PrimesSource(tuple(primes))
    raise ValueError(f"Curve {name}: cannot parse coefficients_from directive: '{line}'")
