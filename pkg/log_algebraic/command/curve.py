import sys
from typing import Any, Dict, Optional, TextIO

import mpmath

from ..adapter.logging import get_logger
from ..model.config import Config
from ..model.errors import log_errors
from ..model.lattice import periods
from ..model.rings import format_rational
from .util import curve_data

LOGGER = get_logger(__name__)


@log_errors(LOGGER)
def describe(
    config: Config, curve_name: str, terms: int = 20, target: Optional[TextIO] = sys.stdout
) -> Dict[str, Any]:
    LOGGER.info(f"Start: describe {curve_name}")
    spec, curve, a = curve_data(curve_name, config, terms)
    with mpmath.workdps(config.dps):
        lattice = periods(curve)
        results = {
            "name": spec.name,
            "long_model": curve.long_model(),
            "short_model": curve.short_model(),
            "conductor": spec.conductor,
            "sign": spec.sign,
            "source": str(spec.source),
            "c4": curve.c4,
            "c6": curve.c6,
            "discriminant": curve.discriminant,
            "g2": curve.g2,
            "g3": curve.g3,
            "A": curve.a,
            "B": curve.b,
            "omega": lattice.omega,
            "omega_prime": lattice.omega_prime,
            "components": lattice.components,
            "a_n": [c for (n, c) in a.items() if n <= terms],
        }
    LOGGER.info(f"End: describe {curve_name}")

    if target is not None:
        print("-" * 80, file=target)
        print(f"Curve {spec.name}", file=target)
        print("-" * 80, file=target)
        print(f"long model   : {results['long_model']}", file=target)
        print(f"short model  : {results['short_model']}", file=target)
        print(f"conductor    : {spec.conductor}", file=target)
        print(f"sign         : {spec.sign:+d}", file=target)
        print(f"coefficients : {spec.source}", file=target)
        for key in ["c4", "c6", "discriminant", "g2", "g3", "A", "B"]:
            print(f"{key.ljust(12)} : {format_rational(results[key])}", file=target)
        print(f"Omega        : {mpmath.nstr(lattice.omega, 15)}", file=target)
        print(f"Omega'       : {mpmath.nstr(lattice.omega_prime, 15)}", file=target)
        print(f"components   : {lattice.components}", file=target)
        print(f"a_1 .. a_{terms} : {' '.join(str(c) for c in results['a_n'])}", file=target)
        print("-" * 80, file=target)
    return results
