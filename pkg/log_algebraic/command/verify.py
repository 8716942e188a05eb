import sys
from typing import Optional, TextIO

from ..adapter.logging import get_logger
from ..model.config import Config
from ..model.errors import log_errors
from ..model.identity import (
    IDENTITIES,
    BetaPoly,
    IdentityReport,
    parse_beta,
    verify_honda,
    verify_logalg1a,
    verify_main_a,
    verify_main_b,
    verify_phi_differential,
    verify_phi_morphism,
    verify_wp_identities,
    verify_xy_phi,
)
from .util import curve_data

LOGGER = get_logger(__name__)

DEFAULT_BETA = "1@1"
MODES = ["exact", "specialize"]


@log_errors(LOGGER)
def main(
    config: Config,
    identity: str,
    curve_name: str,
    beta: Optional[str] = None,
    prec: Optional[int] = None,
    mode: str = "exact",
    target: Optional[TextIO] = sys.stdout,
) -> IdentityReport:
    if identity not in IDENTITIES:
        raise ValueError(f"Unknown identity '{identity}': expected one of {', '.join(IDENTITIES)}")
    prec = config.prec if prec is None else prec
    LOGGER.info(f"Start: {identity} for {curve_name} to O(t^{prec})")
    _, curve, a = curve_data(curve_name, config, prec)
    report = run(identity, a, curve, prec, parse_beta(beta or DEFAULT_BETA), mode)
    LOGGER.info(f"End: {identity}: {report.verdict} in {report.elapsed:.2f}s")
    if target is not None:
        print(report, file=target)
        print(f"    ({report.elapsed:.2f}s)", file=target)
    return report


def run(identity: str, a, curve, prec: int, beta: BetaPoly, mode: str = "exact") -> IdentityReport:
    if identity == "logalg1a":
        return verify_logalg1a(a, curve, prec)
    if identity == "wp":
        return verify_wp_identities(a, curve, prec)
    if identity == "main-a":
        return verify_main_a(beta, a, curve, prec)
    if identity == "main-b":
        return verify_main_b(beta, a, curve, prec, mode=mode)
    if identity == "xy-phi":
        return verify_xy_phi(a, curve, prec)
    if identity == "phi-differential":
        return verify_phi_differential(a, curve, prec)
    if identity == "phi-morphism":
        return verify_phi_morphism(a, curve, prec)
    if identity == "honda":
        return verify_honda(a, prec)
    raise ValueError(f"Unknown identity '{identity}': expected one of {', '.join(IDENTITIES)}")
