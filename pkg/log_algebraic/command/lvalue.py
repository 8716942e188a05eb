import sys
from typing import Any, Dict, Optional, TextIO

import mpmath

from ..adapter.logging import get_logger
from ..model.character import parse_character
from ..model.config import Config
from ..model.errors import log_errors
from ..model.lattice import periods
from ..model.lvalues import l1_rapid, l1_twisted
from .util import curve_data

LOGGER = get_logger(__name__)


@log_errors(LOGGER)
def plain(
    config: Config,
    curve_name: str,
    terms: Optional[int] = None,
    target: Optional[TextIO] = sys.stdout,
) -> Dict[str, Any]:
    terms = config.terms if terms is None else terms
    LOGGER.info(f"Start: L(E, 1) for {curve_name}, {terms} terms, {config.dps} digits")
    spec, curve, a = curve_data(curve_name, config, terms + 1)
    with mpmath.workdps(config.dps):
        value = l1_rapid(a, spec.sign, terms, conductor=spec.conductor)
        omega = periods(curve).omega
        results = {
            "curve": spec.name,
            "terms": terms,
            "L": value.value,
            "tail": value.tail,
            "omega": omega,
            "L/omega": value.value / omega,
        }
        text = [
            f"L(E, 1)     = {mpmath.nstr(value.value, config.dps - 5)}",
            f"tail bound  = {mpmath.nstr(value.tail, 3)}",
            f"Omega       = {mpmath.nstr(omega, config.dps - 5)}",
            f"L / Omega   = {mpmath.nstr(value.value / omega, 15)}",
        ]
    LOGGER.info(f"End: L(E, 1) = {text[0].split('=')[1].strip()}")
    if target is not None:
        print("\n".join(text), file=target)
    return results


@log_errors(LOGGER)
def twist(
    config: Config,
    curve_name: str,
    character: str,
    terms: Optional[int] = None,
    mode: str = "general",
    target: Optional[TextIO] = sys.stdout,
) -> Dict[str, Any]:
    terms = config.terms if terms is None else terms
    chi = parse_character(character)
    LOGGER.info(f"Start: L(E, {chi}, 1) for {curve_name}, {terms} terms, mode {mode}")
    spec, _, a = curve_data(curve_name, config, terms + 1)
    with mpmath.workdps(config.dps):
        value = l1_twisted(a, chi, spec.sign, terms, mode=mode, conductor=spec.conductor)
        results = {
            "curve": spec.name,
            "character": str(chi),
            "mode": mode,
            "terms": terms,
            "L": value.value,
            "tail": value.tail,
        }
        text = [
            f"L(E, {chi}, 1) = {mpmath.nstr(value.value, config.dps - 5)}",
            f"tail bound = {mpmath.nstr(value.tail, 3)}",
        ]
    LOGGER.info(f"End: {text[0]}")
    if target is not None:
        print("\n".join(text), file=target)
    return results
