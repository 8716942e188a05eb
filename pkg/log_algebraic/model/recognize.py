"""
Recognition of complex points as rational points, and orders of rational
torsion points.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Union

import mpmath

from ..adapter.logging import get_logger
from .curve import CurveModel
from .errors import SpuriousMatch
from .point import AffinePoint, Infinity, Point, is_on_curve, point_add, point_mul

LOGGER = get_logger(__name__)

DEFAULT_POINT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class NoMatch:
    coordinate: str
    value: str
    reason: str

    def __str__(self) -> str:
        return f"No rational match for {self.coordinate} = {self.value}: {self.reason}"


def _rational(value: Any, name: str, bound: int, tol: Any) -> Union[Fraction, NoMatch]:
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    value = mpmath.mpmathify(value)
    scale = max(1, abs(value))
    if abs(mpmath.im(value)) >= tol * scale:
        return NoMatch(name, mpmath.nstr(value, 12), "not real")
    re = mpmath.re(value)
    guess = Fraction(mpmath.nstr(re, mpmath.mp.dps)).limit_denominator(bound)
    residual = abs(re - mpmath.mpf(guess.numerator) / guess.denominator)
    if residual >= tol * scale:
        return NoMatch(
            name,
            mpmath.nstr(value, 12),
            f"nearest fraction {guess} is off by {mpmath.nstr(residual, 3)}",
        )
    return guess


def recognize_point(
    p: Point,
    curve: CurveModel,
    denominator_bound: int = 100,
    tol: Any = DEFAULT_POINT_TOLERANCE,
) -> Union[Point, NoMatch]:
    """
    Continued-fraction reconstruction of both coordinates under the bound,
    then an exact check that the rational point is on the curve.
    """
    if isinstance(p, Infinity):
        return p
    x = _rational(p.x, "x", denominator_bound, tol)
    if isinstance(x, NoMatch):
        return x
    y = _rational(p.y, "y", denominator_bound, tol)
    if isinstance(y, NoMatch):
        return y
    found = AffinePoint(x, y)
    if not is_on_curve(found, curve):
        raise SpuriousMatch(x, y)
    LOGGER.debug(f"Recognized {p} as {found}")
    return found


def torsion_order(p: Point, curve: CurveModel, limit: int = 12) -> Optional[int]:
    """Order of a rational point, or None above `limit` (Mazur: at most 12)."""
    q: Point = p
    for n in range(1, limit + 1):
        if isinstance(q, Infinity):
            return n
        q = point_add(q, p, curve, check=False)
    return None


def torsion_multiples(p: Point, curve: CurveModel, limit: int = 12) -> List[Point]:
    """p, 2p, ... up to the first multiple that is O."""
    order = torsion_order(p, curve, limit)
    if order is None:
        raise ValueError(f"{p} has no order <= {limit}")
    return [point_mul(p, k, curve) for k in range(1, order + 1)]


def is_near_infinity(p: Point, tol: Any = 1e-6) -> bool:
    """O, or an affine point whose x-coordinate has blown up past 1/tol^2."""
    if isinstance(p, Infinity):
        return True
    return abs(p.x) > 1 / mpmath.mpf(tol) ** 2

