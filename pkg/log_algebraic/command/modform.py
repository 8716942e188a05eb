import sys
from typing import Any, Dict, List, Optional, TextIO

from ..adapter.logging import get_logger
from ..model.config import Config
from ..model.errors import log_errors
from ..model.newform import NewformCoeffs, eta_product_coeffs
from ..model.parametrization import honda_group_law, modular_xy
from ..model.series import format_series
from .util import curve_data

LOGGER = get_logger(__name__)

# terms of the Honda law printed in text output
HONDA_DISPLAY_DEGREE = 5


def _coefficients(
    config: Config, level: Optional[int], curve_name: Optional[str], prec: int
) -> NewformCoeffs:
    if level is not None:
        return eta_product_coeffs(level, prec, config.eta_products)
    if curve_name is None:
        raise ValueError("Specify a level or a curve")
    _, _, a = curve_data(curve_name, config, prec)
    return a.truncated(prec)


@log_errors(LOGGER)
def coeffs(
    config: Config,
    level: Optional[int] = None,
    curve_name: Optional[str] = None,
    prec: Optional[int] = None,
    target: Optional[TextIO] = sys.stdout,
) -> Dict[str, Any]:
    prec = config.prec if prec is None else prec
    LOGGER.info(f"Start: coefficients to a_{prec - 1} of {curve_name or f'level {level}'}")
    a = _coefficients(config, level, curve_name, prec)
    LOGGER.info(f"End: coefficients from {a.provenance}")
    if target is not None:
        print(f"# {a.provenance}", file=target)
        for (n, c) in a.items():
            print(f"{n} {c}", file=target)
    return {"level": a.level, "source": str(a.provenance), "a_n": list(a.coeffs)}


@log_errors(LOGGER)
def phi(
    config: Config, curve_name: str, prec: Optional[int] = None, target: Optional[TextIO] = sys.stdout
) -> Dict[str, Any]:
    prec = config.prec if prec is None else prec
    LOGGER.info(f"Start: Phi of {curve_name} to O(t^{prec})")
    _, curve, a = curve_data(curve_name, config, prec)
    ps = modular_xy(a, curve, prec)
    LOGGER.info(f"End: Phi of {curve_name}")
    results = {"lambda": format_series(ps.lam), "Phi": format_series(ps.phi)}
    if target is not None:
        for (k, v) in results.items():
            print(f"{k} = {v}", file=target)
    return results


@log_errors(LOGGER)
def xy(
    config: Config, curve_name: str, prec: Optional[int] = None, target: Optional[TextIO] = sys.stdout
) -> Dict[str, Any]:
    prec = config.prec if prec is None else prec
    LOGGER.info(f"Start: X, Y of {curve_name} to O(q^{prec})")
    _, curve, a = curve_data(curve_name, config, prec)
    ps = modular_xy(a, curve, prec)
    LOGGER.info(f"End: X, Y of {curve_name}")
    results = {"X": format_series(ps.x), "Y": format_series(ps.y)}
    if target is not None:
        for (k, v) in results.items():
            print(f"{k} = {v}", file=target)
    return results


@log_errors(LOGGER)
def honda(
    config: Config, curve_name: str, prec: Optional[int] = None, target: Optional[TextIO] = sys.stdout
) -> Dict[str, Any]:
    prec = config.prec if prec is None else prec
    LOGGER.info(f"Start: Honda group law of {curve_name} to total degree {prec}")
    _, _, a = curve_data(curve_name, config, prec)
    law = honda_group_law(a, prec)
    LOGGER.info(f"End: Honda group law: {len(law.non_integral)} non-integral coefficients")

    low: List[str] = [
        f"{c} t1^{i} t2^{j}"
        for (i, j, c) in law.law.terms()
        if c != 0 and i + j <= HONDA_DISPLAY_DEGREE
    ]
    results = {
        "prec": prec,
        "integral": law.integral,
        "non_integral": [f"t1^{i} t2^{j}: {c}" for (i, j, c) in law.non_integral],
        "terms": low,
    }
    if target is not None:
        verdict = "all coefficients integral" if law.integral else "NOT integral"
        print(f"Honda group law to total degree {prec}: {verdict}", file=target)
        for term in results["non_integral"]:
            print(f"    {term}", file=target)
        print(f"terms of total degree <= {HONDA_DISPLAY_DEGREE}:", file=target)
        for term in low:
            print(f"    {term}", file=target)
    return results
