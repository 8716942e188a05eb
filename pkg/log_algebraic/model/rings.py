"""
Coefficient rings for truncated series and fields for point arithmetic.

Elements are plain Python / sympy / mpmath values and are combined with the
usual operators; a ring object only knows how to build, convert, test and
print its elements. Rings are immutable singletons (apart from the complex
field, which carries a comparison tolerance) and safe to share.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Tuple

import mpmath
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, field
from sympy.polys.rings import PolyElement, ring

from .errors import NotAUnit, PoleAt, RingMismatch

POLY_RING, U = ring("u", QQ)
FRACTION_FIELD, UF = field("u", QQ)


def to_fraction(c: Any) -> Fraction:
    """Convert int, Fraction or a sympy ground-domain rational to a Fraction."""
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    try:
        return Fraction(int(c.numerator), int(c.denominator))
    except AttributeError:
        raise RingMismatch(type(c).__name__, "QQ") from None


def to_qq(c: Any) -> Any:
    f = to_fraction(c)
    return QQ(f.numerator, f.denominator)


def lift_scalar(like: Any, c: Any) -> Any:
    """Bring a rational constant to the type of `like` where Python won't mix them."""
    if not isinstance(c, (Fraction, int)):
        return c
    if isinstance(like, (mpmath.mpf, mpmath.mpc)):
        return mpmath.mpf(c.numerator) / c.denominator
    if isinstance(like, PolyElement):
        return like.ring.ground_new(to_qq(c))
    if isinstance(like, FracElement):
        return like.field.ground_new(to_qq(c))
    return c


def format_rational(c: Fraction) -> str:
    return str(c)


def format_polynomial(coeffs: Dict[int, Fraction], var: str = "u") -> str:
    """Ascending-power rendering, e.g. `u - u^2`."""
    parts = []
    for k in sorted(coeffs):
        c = coeffs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        mag = abs(c)
        if mono == "":
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


class CoefficientRing:
    name: str = "?"
    is_field: bool = False

    @property
    def zero(self) -> Any:
        raise NotImplementedError

    @property
    def one(self) -> Any:
        raise NotImplementedError

    def convert(self, c: Any) -> Any:
        raise NotImplementedError

    def is_zero(self, a: Any) -> bool:
        raise NotImplementedError

    def inverse(self, a: Any) -> Any:
        raise NotImplementedError

    def divide_by_integer(self, a: Any, n: int) -> Any:
        return a * self.convert(Fraction(1, n))

    def close(self, a: Any, b: Any) -> bool:
        return self.is_zero(a - b)

    def format(self, a: Any) -> str:
        return str(a)

    def is_atomic(self, a: Any) -> bool:
        """True when the printed form needs no parentheses as a factor."""
        return True

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class RationalField(CoefficientRing):
    name: str = "QQ"
    is_field: bool = True

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def convert(self, c: Any) -> Fraction:
        return to_fraction(c)

    def is_zero(self, a: Any) -> bool:
        return a == 0

    def inverse(self, a: Any) -> Fraction:
        if a == 0:
            raise NotAUnit(a)
        return 1 / Fraction(a)

    def divide_by_integer(self, a: Any, n: int) -> Fraction:
        return Fraction(a) / n


@dataclass(frozen=True)
class PolynomialRing(CoefficientRing):
    """ℚ[u], backed by sympy's sparse polynomial ring."""

    name: str = "QQ[u]"
    is_field: bool = False

    @property
    def zero(self) -> PolyElement:
        return POLY_RING.zero

    @property
    def one(self) -> PolyElement:
        return POLY_RING.one

    @property
    def gen(self) -> PolyElement:
        return U

    def convert(self, c: Any) -> PolyElement:
        if isinstance(c, PolyElement) and c.ring == POLY_RING:
            return c
        return POLY_RING.ground_new(to_qq(c))

    def from_coefficients(self, coeffs: Dict[int, Any]) -> PolyElement:
        return POLY_RING.from_dict({(k,): to_qq(c) for (k, c) in coeffs.items() if c != 0})

    def coefficients(self, a: PolyElement) -> Dict[int, Fraction]:
        return {k[0]: to_fraction(c) for (k, c) in a.items()}

    def degree(self, a: PolyElement) -> int:
        return max(self.coefficients(a), default=-1)

    def is_zero(self, a: Any) -> bool:
        return not a

    def inverse(self, a: PolyElement) -> PolyElement:
        if not a or not a.is_ground:
            raise NotAUnit(self.format(a))
        return self.convert(1 / to_fraction(a.LC))

    def evaluate(self, a: PolyElement, value: Fraction) -> Fraction:
        return sum(
            (c * value**k for (k, c) in self.coefficients(a).items()), Fraction(0)
        )

    def format(self, a: PolyElement) -> str:
        return format_polynomial(self.coefficients(a))

    def is_atomic(self, a: PolyElement) -> bool:
        return len(a) <= 1 and all(c > 0 for c in self.coefficients(a).values())


@dataclass(frozen=True)
class RationalFunctionField(CoefficientRing):
    """ℚ(u), backed by sympy's rational function field (reduced on construction)."""

    name: str = "QQ(u)"
    is_field: bool = True

    @property
    def zero(self) -> FracElement:
        return FRACTION_FIELD.zero

    @property
    def one(self) -> FracElement:
        return FRACTION_FIELD.one

    @property
    def gen(self) -> FracElement:
        return UF

    def convert(self, c: Any) -> FracElement:
        if isinstance(c, FracElement) and c.field == FRACTION_FIELD:
            return c
        if isinstance(c, PolyElement):
            total = FRACTION_FIELD.zero
            for (k, v) in c.items():
                total += FRACTION_FIELD.ground_new(to_qq(v)) * UF ** k[0]
            return total
        return FRACTION_FIELD.ground_new(to_qq(c))

    def is_zero(self, a: Any) -> bool:
        return not a.numer

    def inverse(self, a: FracElement) -> FracElement:
        if not a.numer:
            raise NotAUnit(0)
        return 1 / a

    def monic_parts(
        self, a: FracElement
    ) -> Tuple[Dict[int, Fraction], Dict[int, Fraction]]:
        """Numerator and denominator scaled so that the denominator is monic."""
        numer = {k[0]: to_fraction(c) for (k, c) in a.numer.items()}
        denom = {k[0]: to_fraction(c) for (k, c) in a.denom.items()}
        lc = denom[max(denom)]
        return (
            {k: c / lc for (k, c) in numer.items()},
            {k: c / lc for (k, c) in denom.items()},
        )

    def evaluate(self, a: FracElement, value: Fraction) -> Fraction:
        numer, denom = self.monic_parts(a)
        d = sum((c * value**k for (k, c) in denom.items()), Fraction(0))
        if d == 0:
            raise PoleAt(value)
        return sum((c * value**k for (k, c) in numer.items()), Fraction(0)) / d

    def format(self, a: FracElement) -> str:
        numer, denom = self.monic_parts(a)
        if denom == {0: Fraction(1)}:
            return format_polynomial(numer)
        return f"({format_polynomial(numer)})/({format_polynomial(denom)})"

    def is_atomic(self, a: FracElement) -> bool:
        numer, denom = self.monic_parts(a)
        return denom == {0: Fraction(1)} and len(numer) <= 1 and all(
            c > 0 for c in numer.values()
        )


@dataclass(frozen=True)
class ComplexField(CoefficientRing):
    """mpmath complex numbers; equality is closeness to a relative tolerance."""

    tolerance: float = 1e-9
    name: str = "CC"
    is_field: bool = True

    @property
    def zero(self) -> Any:
        return mpmath.mpc(0)

    @property
    def one(self) -> Any:
        return mpmath.mpc(1)

    def convert(self, c: Any) -> Any:
        if isinstance(c, Fraction):
            return mpmath.mpc(mpmath.mpf(c.numerator) / c.denominator)
        return mpmath.mpc(c)

    def is_zero(self, a: Any) -> bool:
        return abs(a) <= self.tolerance

    def close(self, a: Any, b: Any) -> bool:
        scale = max(1, abs(a), abs(b))
        return abs(a - b) <= self.tolerance * scale

    def inverse(self, a: Any) -> Any:
        if self.is_zero(a):
            raise NotAUnit(a)
        return 1 / a

    def format(self, a: Any) -> str:
        return mpmath.nstr(a, 12)

    def is_atomic(self, a: Any) -> bool:
        return False


QQ_RING = RationalField()
QQ_U = PolynomialRing()
QQ_U_FRACTIONS = RationalFunctionField()
