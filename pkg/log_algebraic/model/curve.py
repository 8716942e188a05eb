"""
Weierstrass models over ℚ: the long model a curve is given in, its
invariants, and the change of variables to the short model that the formal
group and ℘ are expanded on.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Tuple

from .errors import SingularCurve
from .rings import format_rational, lift_scalar

Number = Fraction


@dataclass(frozen=True)
class CurveModel:
    """
    Long Weierstrass model y0^2 + e1 x0 y0 + e3 y0 = x0^3 + e2 x0^2 + e4 x0 + e6
    together with the short model y^2 = x^3 - (g2/4) x - (g3/4) it is carried
    to by `to_short`.
    """

    e1: Number
    e2: Number
    e3: Number
    e4: Number
    e6: Number
    conductor: Optional[int] = None
    name: str = ""

    @property
    def coefficients(self) -> Tuple[Number, ...]:
        return (self.e1, self.e2, self.e3, self.e4, self.e6)

    @property
    def b2(self) -> Number:
        return self.e1**2 + 4 * self.e2

    @property
    def b4(self) -> Number:
        return 2 * self.e4 + self.e1 * self.e3

    @property
    def b6(self) -> Number:
        return self.e3**2 + 4 * self.e6

    @property
    def c4(self) -> Number:
        return self.b2**2 - 24 * self.b4

    @property
    def c6(self) -> Number:
        return -self.b2**3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def discriminant(self) -> Number:
        return (self.c4**3 - self.c6**2) / 1728

    @property
    def g2(self) -> Number:
        return self.c4 / 12

    @property
    def g3(self) -> Number:
        return self.c6 / 216

    @property
    def a(self) -> Number:
        """x-coefficient A of the short model y^2 = x^3 + A x + B."""
        return -self.g2 / 4

    @property
    def b(self) -> Number:
        return -self.g3 / 4

    def to_short(self, x0: Any, y0: Any) -> Tuple[Any, Any]:
        """Long-model point to short-model point; works over any field."""
        k = _lifter(x0)
        return (x0 + k(self.b2 / 12), y0 + (x0 * k(self.e1) + k(self.e3)) / 2)

    def from_short(self, x: Any, y: Any) -> Tuple[Any, Any]:
        k = _lifter(x)
        x0 = x - k(self.b2 / 12)
        return (x0, y - (x0 * k(self.e1) + k(self.e3)) / 2)

    def short_residual(self, x: Any, y: Any) -> Any:
        k = _lifter(x)
        return y * y - (x * x * x + x * k(self.a) + k(self.b))

    def long_residual(self, x0: Any, y0: Any) -> Any:
        k = _lifter(x0)
        return (y0 * y0 + x0 * y0 * k(self.e1) + y0 * k(self.e3)) - (
            x0 * x0 * x0 + x0 * x0 * k(self.e2) + x0 * k(self.e4) + k(self.e6)
        )

    def short_model(self) -> str:
        return "y^2 = x^3" + _signed(self.a, "*x") + _signed(self.b, "")

    def long_model(self) -> str:
        lhs = "y^2" + _signed(self.e1, "*x*y") + _signed(self.e3, "*y")
        rhs = "x^3" + _signed(self.e2, "*x^2") + _signed(self.e4, "*x") + _signed(self.e6, "")
        return f"{lhs} = {rhs}"

    def __str__(self) -> str:
        return self.name or self.long_model()


def _lifter(like: Any):
    return lambda c: lift_scalar(like, c)


def _signed(c: Number, mono: str) -> str:
    if c == 0:
        return ""
    mag = abs(c)
    body = mono.lstrip("*") if mag == 1 and mono else f"{format_rational(mag)}{mono}"
    return f" - {body}" if c < 0 else f" + {body}"


def derive_invariants(
    e1: Any,
    e2: Any,
    e3: Any,
    e4: Any,
    e6: Any,
    *,
    conductor: Optional[int] = None,
    name: str = "",
) -> CurveModel:
    curve = CurveModel(
        Fraction(e1),
        Fraction(e2),
        Fraction(e3),
        Fraction(e4),
        Fraction(e6),
        conductor=conductor,
        name=name,
    )
    if curve.discriminant == 0:
        raise SingularCurve(curve.coefficients)
    return curve


def short_curve(a: Any, b: Any, *, name: str = "") -> CurveModel:
    """The curve y^2 = x^3 + a x + b."""
    return derive_invariants(0, 0, 0, a, b, name=name)
