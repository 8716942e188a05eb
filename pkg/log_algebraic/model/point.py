"""
Chord-tangent arithmetic on y^2 = x^3 + A x + B over an abstract field.

The field is one of the coefficient-ring adapters in `rings` (or a
`series.SeriesField`); it supplies constants, inversion and the equality test
(exact, to precision, or to tolerance).
"""

from dataclasses import dataclass
from typing import Any, Optional, Union

from .curve import CurveModel
from .errors import NotOnCurve
from .rings import CoefficientRing, QQ_RING


class Infinity:
    def __eq__(self, other):
        return isinstance(other, Infinity)

    def __hash__(self):
        return hash("Infinity")

    def __str__(self):
        return "O"

    def __repr__(self):
        return "Infinity()"


INFINITY = Infinity()


@dataclass(frozen=True)
class AffinePoint:
    x: Any
    y: Any

    def __str__(self):
        return f"({self.x}, {self.y})"


Point = Union[AffinePoint, Infinity]


def residual(p: AffinePoint, curve: CurveModel, field: CoefficientRing = QQ_RING) -> Any:
    a = field.convert(curve.a)
    b = field.convert(curve.b)
    return p.y * p.y - (p.x * p.x * p.x + a * p.x + b)


def is_on_curve(p: Point, curve: CurveModel, field: CoefficientRing = QQ_RING) -> bool:
    if isinstance(p, Infinity):
        return True
    lhs = p.y * p.y
    rhs = p.x * p.x * p.x + field.convert(curve.a) * p.x + field.convert(curve.b)
    return field.close(lhs, rhs)


def check_on_curve(p: Point, curve: CurveModel, field: CoefficientRing = QQ_RING) -> None:
    if not is_on_curve(p, curve, field):
        assert isinstance(p, AffinePoint)
        raise NotOnCurve(_format(p, field), field.format(residual(p, curve, field)))


def point_neg(p: Point, curve: Optional[CurveModel] = None) -> Point:
    if isinstance(p, Infinity):
        return p
    return AffinePoint(p.x, -p.y)


def point_add(
    p: Point,
    q: Point,
    curve: CurveModel,
    field: CoefficientRing = QQ_RING,
    *,
    check: bool = True,
) -> Point:
    if check:
        check_on_curve(p, curve, field)
        check_on_curve(q, curve, field)
    return _add(p, q, curve, field)


def point_double(p: Point, curve: CurveModel, field: CoefficientRing = QQ_RING) -> Point:
    if isinstance(p, Infinity):
        return p
    if field.is_zero(p.y):
        return INFINITY
    slope = (p.x * p.x * 3 + field.convert(curve.a)) * field.inverse(p.y * 2)
    return _from_slope(slope, p, p)


def point_mul(
    p: Point,
    m: int,
    curve: CurveModel,
    field: CoefficientRing = QQ_RING,
    *,
    check: bool = True,
) -> Point:
    if check:
        check_on_curve(p, curve, field)
    if m < 0:
        return point_mul(point_neg(p), -m, curve, field, check=False)
    result: Point = INFINITY
    base = p
    while m > 0:
        if m & 1:
            result = _add(result, base, curve, field)
        m >>= 1
        if m:
            base = point_double(base, curve, field)
    return result


def point_sum(
    terms, curve: CurveModel, field: CoefficientRing = QQ_RING, *, check: bool = True
) -> Point:
    """Sum of m*P over (m, P) pairs."""
    total: Point = INFINITY
    for (m, p) in terms:
        total = _add(total, point_mul(p, m, curve, field, check=check), curve, field)
    return total


def _add(p: Point, q: Point, curve: CurveModel, field: CoefficientRing) -> Point:
    if isinstance(p, Infinity):
        return q
    if isinstance(q, Infinity):
        return p
    if field.close(p.x, q.x):
        if field.is_zero(p.y + q.y):
            return INFINITY
        return point_double(p, curve, field)
    slope = (q.y - p.y) * field.inverse(q.x - p.x)
    return _from_slope(slope, p, q)


def _from_slope(slope: Any, p: AffinePoint, q: AffinePoint) -> AffinePoint:
    x = slope * slope - p.x - q.x
    return AffinePoint(x, slope * (p.x - x) - p.y)


def _format(p: AffinePoint, field: CoefficientRing) -> str:
    return f"({field.format(p.x)}, {field.format(p.y)})"
