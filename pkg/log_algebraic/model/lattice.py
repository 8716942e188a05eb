"""
The period lattice of y^2 = x^3 + A x + B, the Weierstrass function on all of
ℂ, and detection of exact multiples of periods.

Ω is the least positive real period. With one real component Ω' is the
second generator with Re Ω' = Ω/2; with two components Ω' is purely
imaginary. In both cases Im Ω' < 0.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil
from typing import Any, Callable, Dict, Optional, Tuple

import mpmath
from sympy import Expr, Rational, Symbol

from ..adapter.logging import get_logger
from .curve import CurveModel, short_curve
from .errors import NotOnLine, PoleAt
from .formal_group import wp_derivative_half, wp_series
from .lvalues import eval_series, to_mpf
from .newform import NewformCoeffs
from .parametrization import lambda_series
from .point import AffinePoint, Infinity, point_double
from .rings import ComplexField
from .series import TruncatedSeries

LOGGER = get_logger(__name__)

OMEGA = Symbol("Omega", positive=True)
OMEGA_PRIME = Symbol("Omega'")

# series for ℘ are evaluated at points within this fraction of the shortest period
SERIES_RADIUS = Fraction(1, 4)

DEFAULT_TOLERANCE = 1e-6
DEFAULT_DENOMINATOR_BOUND = 60


@dataclass(frozen=True)
class PeriodLattice:
    omega: Any
    omega_prime: Any
    components: int

    def basis(self) -> Tuple[Any, Any]:
        """A Gauss-reduced basis (shortest vector first)."""
        b1, b2 = mpmath.mpc(self.omega), mpmath.mpc(self.omega_prime)
        while True:
            if abs(b2) < abs(b1):
                b1, b2 = b2, b1
            k = mpmath.nint(mpmath.re(b2 * mpmath.conj(b1)) / abs(b1) ** 2)
            if k == 0:
                return (b1, b2)
            b2 = b2 - k * b1

    @property
    def shortest(self) -> Any:
        return abs(self.basis()[0])

    def coordinates(self, z: Any) -> Tuple[Any, Any]:
        """Real (x, y) with z = x Ω + y Ω'."""
        z = mpmath.mpmathify(z)
        y = mpmath.im(z) / mpmath.im(self.omega_prime)
        x = (mpmath.re(z) - y * mpmath.re(self.omega_prime)) / self.omega
        return (x, y)

    def reduce(self, z: Any) -> Any:
        """z minus the nearest lattice point in the reduced basis."""
        b1, b2 = self.basis()
        z = mpmath.mpmathify(z)
        det = mpmath.im(mpmath.conj(b1) * b2)
        y = mpmath.im(mpmath.conj(b1) * z) / det
        x = mpmath.im(mpmath.conj(z) * b2) / det
        w = z - mpmath.nint(x) * b1 - mpmath.nint(y) * b2
        for candidate in (w - b1, w + b1, w - b2, w + b2):
            if abs(candidate) < abs(w):
                w = candidate
        return w

    def contains(self, z: Any, tolerance: Any = DEFAULT_TOLERANCE) -> bool:
        return abs(self.reduce(z)) < tolerance * self.shortest

    def __str__(self) -> str:
        return (
            f"Omega = {mpmath.nstr(self.omega, 12)}, "
            f"Omega' = {mpmath.nstr(self.omega_prime, 12)} ({self.components} real components)"
        )


def periods(curve: CurveModel, dps: Optional[int] = None) -> PeriodLattice:
    """Generators of the period lattice of the short model, by the AGM."""
    if dps is not None:
        with mpmath.workdps(dps):
            return periods(curve)
    a, b = to_mpf(curve.a), to_mpf(curve.b)
    roots = mpmath.polyroots([1, 0, a, b], maxsteps=200, extraprec=2 * mpmath.mp.prec)
    if curve.discriminant > 0:
        e1, e2, e3 = sorted((mpmath.re(r) for r in roots), reverse=True)
        omega = mpmath.pi / mpmath.agm(mpmath.sqrt(e1 - e3), mpmath.sqrt(e1 - e2))
        half = mpmath.pi / mpmath.agm(mpmath.sqrt(e1 - e3), mpmath.sqrt(e2 - e3))
        lattice = PeriodLattice(omega, mpmath.mpc(0, -half), 2)
    else:
        e1 = mpmath.re(min(roots, key=lambda r: abs(mpmath.im(r))))
        beta = mpmath.sqrt(3 * e1**2 + a)
        omega = 2 * mpmath.pi / mpmath.agm(2 * mpmath.sqrt(beta), mpmath.sqrt(2 * beta + 3 * e1))
        half = mpmath.pi / mpmath.agm(2 * mpmath.sqrt(beta), mpmath.sqrt(2 * beta - 3 * e1))
        lattice = PeriodLattice(omega, mpmath.mpc(omega / 2, -half), 1)
    LOGGER.debug(f"Periods of {curve}: {lattice}")
    return lattice


# ------------------------------------------------------------------------------
# Weierstrass function
# ------------------------------------------------------------------------------


@lru_cache(maxsize=16)
def _wp_pair(g2: Fraction, g3: Fraction, prec: int) -> Tuple[TruncatedSeries, TruncatedSeries]:
    return (wp_series(g2, g3, prec), wp_derivative_half(g2, g3, prec))


def _series_prec(ratio: Any) -> int:
    """Truncation order making (|z|/r)^prec negligible at working precision."""
    digits = mpmath.mp.dps + 5
    return max(8, 2 * ceil(digits / (2 * float(-mpmath.log10(ratio)))) + 4)


def wp_numeric(z: Any, lattice: PeriodLattice, g2: Any, g3: Any) -> Tuple[Any, Any]:
    """
    (℘(z), ℘'(z)). z is reduced modulo the lattice and halved until it is well
    inside the disc of convergence of the Laurent series; the halvings are
    undone by point doubling on y^2 = x^3 - (g2/4) x - (g3/4).
    """
    g2, g3 = Fraction(g2), Fraction(g3)
    w = lattice.reduce(z)
    r = lattice.shortest
    if abs(w) < mpmath.mpf(10) ** (-(mpmath.mp.dps // 2)) * r:
        raise PoleAt(mpmath.nstr(z, 12))

    halvings = 0
    while abs(w) > r * to_mpf(SERIES_RADIUS):
        w = w / 2
        halvings += 1
    wp, dwp = _wp_pair(g2, g3, _series_prec(to_mpf(SERIES_RADIUS)))
    point: Any = AffinePoint(eval_series(wp, w).value, eval_series(dwp, w).value)

    curve = short_curve(-g2 / 4, -g3 / 4)
    field = ComplexField(tolerance=mpmath.mpf(2) ** (16 - mpmath.mp.prec))
    for _ in range(halvings):
        point = point_double(point, curve, field)
        if isinstance(point, Infinity):
            raise PoleAt(mpmath.nstr(z, 12))
    return (point.x, 2 * point.y)


def parametrization_point(
    a: NewformCoeffs,
    lattice: PeriodLattice,
    curve: CurveModel,
    q: Any,
    terms: Optional[int] = None,
) -> AffinePoint:
    """P(q) = (℘(λ(q)), ℘'(λ(q))/2) with λ(q) = sum a_n q^n / n."""
    lam = eval_series(lambda_series(a, a.prec if terms is None else terms + 1), q)
    (x, dx) = wp_numeric(lam.value, lattice, curve.g2, curve.g3)
    return AffinePoint(x, dx / 2)


# ------------------------------------------------------------------------------
# Lattice multiples
# ------------------------------------------------------------------------------


@dataclass(frozen=True)
class Generator:
    name: str
    value: Callable[[PeriodLattice], Any]
    expression: Expr
    integral: bool = False


GENERATORS: Dict[str, Generator] = {
    g.name: g
    for g in [
        Generator("omega", lambda lat: lat.omega, OMEGA),
        Generator(
            "omega-prime",
            lambda lat: (lat.omega - 2 * lat.omega_prime) / 2,
            (OMEGA - 2 * OMEGA_PRIME) / 2,
        ),
        Generator("omega-integral", lambda lat: lat.omega, OMEGA, integral=True),
    ]
}


@dataclass(frozen=True)
class LatticeMultiple:
    value: Any
    generator: str
    multiple: Fraction
    residual: Any
    tolerance: Any

    @property
    def expression(self) -> Expr:
        m = Rational(self.multiple.numerator, self.multiple.denominator)
        return m * GENERATORS[self.generator].expression

    def __str__(self) -> str:
        return f"{self.expression} (residual {mpmath.nstr(self.residual, 3)})"


def lattice_multiple(
    v: Any,
    lattice: PeriodLattice,
    generator: str = "omega",
    denom_bound: int = DEFAULT_DENOMINATOR_BOUND,
    tolerance: Any = DEFAULT_TOLERANCE,
) -> LatticeMultiple:
    """
    The rational multiple (denominator <= `denom_bound`, integer for
    `omega-integral`) of the generator closest to v; the residual is measured
    in units of the generator.
    """
    if generator not in GENERATORS:
        raise ValueError(
            f"Unknown generator '{generator}': expected one of {', '.join(GENERATORS)}"
        )
    gen = GENERATORS[generator]
    ratio = mpmath.mpmathify(v) / gen.value(lattice)
    re = mpmath.re(ratio)
    if gen.integral:
        multiple = Fraction(int(mpmath.nint(re)))
    else:
        multiple = Fraction(mpmath.nstr(re, mpmath.mp.dps)).limit_denominator(denom_bound)
    residual = abs(ratio - to_mpf(multiple))
    LOGGER.debug(f"{mpmath.nstr(v, 12)} / {generator} = {mpmath.nstr(ratio, 12)} ~ {multiple}")
    if residual >= tolerance:
        raise NotOnLine(mpmath.nstr(v, 12), generator, mpmath.nstr(residual, 3), tolerance)
    return LatticeMultiple(v, generator, multiple, residual, tolerance)
