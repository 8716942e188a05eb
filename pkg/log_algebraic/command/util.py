from typing import Tuple

from ..adapter import config_file
from ..adapter.coeff_file import load_coeffs
from ..adapter.logging import get_logger
from ..model.config import (
    BUILTIN_CURVES,
    Config,
    CurveSpec,
    EtaProductSource,
    FileSource,
    PrimesSource,
)
from ..model.curve import CurveModel
from ..model.newform import NewformCoeffs, eta_product_coeffs, hecke_expand

LOGGER = get_logger(__name__)

BUILTIN_PREFIX = "builtin:"

# a_n beyond the requested precision needed by the parametrization and the
# main identities
COEFFICIENT_MARGIN = 12


def resolve_curve(name: str, config: Config) -> CurveSpec:
    """`builtin:<label>`, a path ending in `.ini`, or a name in the curve directory."""
    if name.startswith(BUILTIN_PREFIX):
        label = name[len(BUILTIN_PREFIX) :]
        if label not in BUILTIN_CURVES:
            raise ValueError(
                f"No built-in curve '{label}': expected one of "
                + ", ".join(BUILTIN_PREFIX + k for k in BUILTIN_CURVES)
            )
        return BUILTIN_CURVES[label]
    if name.endswith(".ini"):
        return config_file.parse_curve_file(name)
    return config_file.parse_curve_file(config.curve_file(name))


def coefficients(spec: CurveSpec, config: Config, prec: int) -> NewformCoeffs:
    """a_n for n < prec from the curve's source."""
    source = spec.source
    LOGGER.debug(f"Coefficients of {spec.name} to a_{prec - 1} from {source}")
    if isinstance(source, EtaProductSource):
        table = dict(config.eta_products)
        if source.factors is not None:
            table[spec.conductor] = dict(source.factors)
        return eta_product_coeffs(spec.conductor, prec, table)

    if isinstance(source, FileSource):
        a = load_coeffs(source.file_name, level=spec.conductor)
        if a.prec < prec:
            raise ValueError(
                f"Coefficient file {source.file_name} has a_n only up to "
                f"a_{a.prec - 1}, need a_{prec - 1}"
            )
        return a.truncated(prec)

    if isinstance(source, PrimesSource):
        return hecke_expand(dict(source.primes), spec.conductor, prec)

    raise ValueError(f"Unknown coefficient source type: {type(source)}")


def curve_data(
    name: str, config: Config, prec: int
) -> Tuple[CurveSpec, CurveModel, NewformCoeffs]:
    spec = resolve_curve(name, config)
    return (spec, spec.curve(), coefficients(spec, config, prec + COEFFICIENT_MARGIN))
