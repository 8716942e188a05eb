"""
End-to-end computations of special L-values of the curve of conductor 11
(y^2 + y = x^3 - x^2 - 10x - 20) as exact multiples of its periods:

* one: L(E, 1) = Ω/5, with the point P = P(e^(-2π/√11)) of order 10;
* two: the twist by the quadratic character of Q(√-3), L = (Ω - 2Ω')/√-3;
* three: the twist by a cubic character mod 7, L = (5/14)(1 + √-3) g(ψ) Ω.

Each driver records every intermediate quantity with the value it should
have, and the exact result found by lattice discreteness.
"""

from fractions import Fraction
from typing import Any, Callable, Dict, Optional

import mpmath
from sympy import Rational, sqrt

from ..adapter.logging import get_logger
from .character import (
    cubic_character,
    gauss_sum,
    quadratic_character,
    real_parts,
    beta_coefficients,
)
from .curve import CurveModel, derive_invariants
from .errors import DivergenceSuspected, LogAlgebraicError
from .identity import BetaPoly
from .lattice import (
    DEFAULT_DENOMINATOR_BOUND,
    OMEGA,
    OMEGA_PRIME,
    PeriodLattice,
    lattice_multiple,
    parametrization_point,
    periods,
    wp_numeric,
)
from .lvalues import eval_series, l1_rapid, l1_twisted, twist_scale, twisted_value
from .newform import NewformCoeffs, eta_product_coeffs
from .parametrization import modular_xy
from .point import AffinePoint, Infinity, point_add, point_double, point_neg, point_sum
from .recognize import NoMatch, is_near_infinity, recognize_point, torsion_order
from .report import ExampleReport
from .rings import ComplexField

LOGGER = get_logger(__name__)

EXAMPLES = ["one", "two", "three"]

# precision of the X, Y and Phi expansions evaluated at e^(-2π/√11)
XY_PREC = 60

# tolerance for deciding that complex points coincide or cancel
POINT_TOLERANCE = 1e-6


def x0_11() -> CurveModel:
    return derive_invariants(0, -1, 1, -10, -20, conductor=11, name="X0(11)")


def f0_99() -> CurveModel:
    """The quadratic twist of X0(11) by -3."""
    return derive_invariants(0, 0, 1, -3, -5, conductor=99, name="F0")


def _beta(coeffs: Dict[int, int]) -> BetaPoly:
    top = max(coeffs, default=0)
    return BetaPoly(tuple(coeffs.get(k, 0) for k in range(top + 1)))


def _field() -> ComplexField:
    return ComplexField(tolerance=POINT_TOLERANCE)


def _inputs(curve: CurveModel, a: NewformCoeffs, sign: int, terms: int) -> Dict[str, Any]:
    return {
        "curve": curve.long_model(),
        "conductor": curve.conductor,
        "sign": sign,
        "terms": terms,
        "dps": mpmath.mp.dps,
        "coefficients": str(a.provenance),
    }


def _coefficients(a: Optional[NewformCoeffs], terms: int) -> NewformCoeffs:
    if a is not None:
        return a
    return eta_product_coeffs(11, max(terms, XY_PREC + 4) + 1)


# ------------------------------------------------------------------------------
# L(E, 1)
# ------------------------------------------------------------------------------


def example_one(
    curve: Optional[CurveModel] = None,
    a: Optional[NewformCoeffs] = None,
    *,
    sign: int = 1,
    terms: int = 400,
    denom_bound: int = DEFAULT_DENOMINATOR_BOUND,
) -> ExampleReport:
    curve = x0_11() if curve is None else curve
    a = _coefficients(a, terms)
    n_level = curve.conductor or a.level
    report = ExampleReport("one", _inputs(curve, a, sign, terms))

    t0 = mpmath.exp(-2 * mpmath.pi / mpmath.sqrt(n_level))
    ps = modular_xy(a, curve, XY_PREC)
    x = eval_series(ps.x, t0)
    y = eval_series(ps.y, t0)
    report.add("X(t0)", x.value, mpmath.mpf("62.111554"), 1e-6)
    report.add("Y(t0)", y.value, mpmath.mpf("-488.826947"), 1e-6)
    try:
        phi = eval_series(ps.phi, t0)
        report.add("Phi(t0)", phi.value, mpmath.mpf("0.1270624598"), 1e-9)
        report.add("Phi(t0) + X(t0)/Y(t0)", phi.value + x.value / y.value, 0, 1e-9)
    except DivergenceSuspected as e:
        LOGGER.warning(f"Phi at t0: {e}; using X and Y")
        report.add("Phi(t0)", -x.value / y.value, mpmath.mpf("0.1270624598"), 1e-9)

    p = AffinePoint(x.value, y.value)
    report.add("P on E", abs(curve.short_residual(p.x, p.y)), 0, 1e-6 * abs(p.y) ** 2)
    two_p = point_double(p, curve, _field())
    rational = recognize_point(two_p, curve, denominator_bound=10, tol=1e-6)
    report.add("2P", rational, AffinePoint(Fraction(47, 3), Fraction(-121, 2)))
    order = torsion_order(rational, curve) if not isinstance(rational, NoMatch) else None
    report.add("order of 2P", order, 5)
    unmatched = recognize_point(p, curve, denominator_bound=100, tol=1e-6)
    report.add("P is not rational", str(unmatched), holds=isinstance(unmatched, NoMatch))

    lvalue = l1_rapid(a, sign, terms, conductor=n_level)
    lattice = periods(curve)
    report.add("L(E, 1)", lvalue.value, mpmath.mpf("0.2538418608"), 1e-9)
    report.add("Omega", lattice.omega, mpmath.mpf("1.2692093042"), 1e-9)

    wp, _ = wp_numeric(lvalue.value / 2, lattice, curve.g2, curve.g3)
    report.add("wp(L/2)", wp, x.value, 1e-6)

    multiple = lattice_multiple(lvalue.value, lattice, "omega", denom_bound)
    report.add("L / Omega", multiple.multiple, Fraction(1, 5))
    report.exact_result = str(multiple.expression)
    return report


# ------------------------------------------------------------------------------
# Quadratic twist
# ------------------------------------------------------------------------------


def example_two(
    curve: Optional[CurveModel] = None,
    a: Optional[NewformCoeffs] = None,
    *,
    sign: int = 1,
    terms: int = 400,
    denom_bound: int = DEFAULT_DENOMINATOR_BOUND,
) -> ExampleReport:
    curve = x0_11() if curve is None else curve
    a = _coefficients(a, terms)
    n_level = curve.conductor or a.level
    chi = quadratic_character(-3)
    report = ExampleReport("two", dict(_inputs(curve, a, sign, terms), character=str(chi)))

    lvalue = l1_twisted(a, chi, sign, terms, mode="quadratic", conductor=n_level)
    general = l1_twisted(a, chi, sign, terms, mode="general", conductor=n_level)
    report.add("L(E, chi, 1)", lvalue.value, mpmath.mpf("1.6844963329"), 1e-9)
    report.add("general formula", general.value, lvalue.value, 1e-12)

    lattice = periods(curve)
    report.add("Im Omega'", mpmath.im(lattice.omega_prime), mpmath.mpf("-1.4588166169"), 1e-9)
    report.add("Re Omega' - Omega/2", mpmath.re(lattice.omega_prime) - lattice.omega / 2, 0, 1e-12)

    beta = _beta(beta_coefficients(chi))
    report.add("beta", str(beta), "u - u^2")
    rho = mpmath.expjpi(mpmath.mpf(2) / 3)
    t3 = twist_scale(chi, n_level)
    v = twisted_value(beta, a, rho, t3, terms)
    report.add("(sqrt(-3)/2) L(E, chi, 1)", v, mpmath.sqrt(-3) / 2 * lvalue.value, 1e-9)

    q = parametrization_point(a, lattice, curve, rho * t3)
    q_bar = parametrization_point(a, lattice, curve, mpmath.conj(rho) * t3)
    report.add("x(Q)", q.x, mpmath.mpc("-2.055777", "1.071828"), 1e-6)
    report.add("y(Q)", q.y, mpmath.mpc("-0.336526", "-1.905429"), 1e-6)
    report.add("Q-bar is the conjugate of Q", q_bar.x, mpmath.conj(q.x), 1e-9)

    field = _field()
    doubled = [recognize_point(point_double(r, curve, field), curve, 10, 1e-6) for r in (q, q_bar)]
    torsion = AffinePoint(Fraction(47, 3), Fraction(-121, 2))
    report.add("2Q", doubled[0], torsion)
    report.add("2Q-bar", doubled[1], torsion)
    difference = point_add(q, point_neg(q_bar), curve, field, check=False)
    report.add(
        "Q - Q-bar has order 2",
        difference,
        holds=(
            not isinstance(difference, Infinity)
            and doubled[0] == doubled[1]
            and abs(difference.y) < POINT_TOLERANCE
        ),
    )
    if not isinstance(difference, Infinity):
        wp, _ = wp_numeric(v, lattice, curve.g2, curve.g3)
        report.add("wp((sqrt(-3)/2) L)", wp, difference.x, 1e-6)

    multiple = lattice_multiple(v, lattice, "omega-prime", denom_bound)
    report.add("multiple of (Omega - 2 Omega')/2", multiple.multiple, Fraction(1))
    exact = Rational(multiple.multiple.numerator, multiple.multiple.denominator) * (
        OMEGA - 2 * OMEGA_PRIME
    ) / sqrt(-3)
    report.add("exact value", _evaluate(exact, lattice), lvalue.value, 1e-9)
    report.exact_result = _times(multiple.multiple, "(Omega - 2*Omega')/sqrt(-3)")

    twisted_curve = f0_99()
    report.add(
        "real period of F0",
        periods(twisted_curve).omega,
        (lattice.omega - 2 * lattice.omega_prime) / mpmath.sqrt(-3),
        1e-9,
    )
    return report


# ------------------------------------------------------------------------------
# Cubic twist
# ------------------------------------------------------------------------------


def example_three(
    curve: Optional[CurveModel] = None,
    a: Optional[NewformCoeffs] = None,
    *,
    sign: int = 1,
    terms: int = 400,
    modulus: int = 7,
) -> ExampleReport:
    curve = x0_11() if curve is None else curve
    a = _coefficients(a, terms)
    n_level = curve.conductor or a.level
    psi = cubic_character(modulus)
    report = ExampleReport("three", dict(_inputs(curve, a, sign, terms), character=str(psi)))

    g = gauss_sum(psi)
    g_bar = gauss_sum(psi.conjugate())
    report.add("|g(psi)|^2", g * g.conjugate(), modulus, holds=g * g.conjugate() == modulus)
    report.add("g(psi) g(psi-bar)", g * g_bar, psi.parity * modulus, holds=g * g_bar == psi.parity * modulus)

    lvalue = l1_twisted(a, psi, sign, terms, mode="general", conductor=n_level)
    report.add("L(E, psi, 1)", lvalue.value, mpmath.mpc("1.997106", "1.328439"), 1e-6)

    first, second = real_parts(psi)
    beta1, beta2 = _beta(first), _beta(second)
    beta = _beta(beta_coefficients(psi))
    report.add("beta1", str(beta1), "2*u - u^2 - u^3 - u^4 - u^5 + 2*u^6")
    report.add("beta2", str(beta2), "-u^2 + u^3 + u^4 - u^5")
    report.add("beta", str(beta), "2*u + 2*u^2 - 4*u^3 - 4*u^4 + 2*u^5 + 2*u^6")

    zeta = mpmath.expjpi(mpmath.mpf(2) / modulus)
    t7 = twist_scale(psi, n_level)
    t1 = twisted_value(beta1, a, zeta, t7, terms)
    t2 = twisted_value(beta2, a, zeta, t7, terms)
    report.add("Im T1", mpmath.im(t1), 0, 1e-9)
    report.add("Im T2", mpmath.im(t2), 0, 1e-9)
    total = t1 - 3 * t2
    normalized = (1 - mpmath.sqrt(-3)) * g_bar.to_complex() * lvalue.value
    report.add("T = T1 - 3 T2", total, normalized, 1e-9)

    lattice = periods(curve)
    points = [
        (m, parametrization_point(a, lattice, curve, zeta**k * t7)) for (k, m) in beta.terms()
    ]
    combination = point_sum(points, curve, _field(), check=False)
    report.add(
        "2P1 + 2P2 - 4P3 - 4P4 + 2P5 + 2P6",
        combination,
        holds=is_near_infinity(combination, POINT_TOLERANCE),
    )
    report.add("T is a period", total, holds=lattice.contains(total))

    multiple = lattice_multiple(total, lattice, "omega-integral")
    report.add("T / Omega", multiple.multiple, Fraction(10))
    factor = multiple.multiple / (4 * psi.parity * modulus)
    exact = Rational(factor.numerator, factor.denominator) * (1 + sqrt(-3)) * OMEGA
    report.add(
        "exact value",
        _evaluate(exact, lattice) * g.to_complex(),
        lvalue.value,
        1e-9,
    )
    report.exact_result = f"({factor})*(1 + sqrt(-3))*g(psi)*Omega"
    return report


def _evaluate(expr: Any, lattice: PeriodLattice) -> Any:
    value = expr.subs({OMEGA: lattice.omega, OMEGA_PRIME: lattice.omega_prime})
    return mpmath.mpmathify(complex(value.evalf(mpmath.mp.dps)))


def _times(multiple: Fraction, text: str) -> str:
    if multiple == 1:
        return text
    return f"({multiple})*{text}"


DRIVERS: Dict[str, Callable[..., ExampleReport]] = {
    "one": example_one,
    "two": example_two,
    "three": example_three,
}


def run_example(which: str, dps: int = 30, **kwargs) -> ExampleReport:
    if which not in DRIVERS:
        raise ValueError(f"Unknown example '{which}': expected one of {', '.join(EXAMPLES)}")
    with mpmath.workdps(dps):
        LOGGER.info(f"Start: example {which} at {dps} digits")
        try:
            report = DRIVERS[which](**kwargs)
        except LogAlgebraicError as e:
            LOGGER.error(f"Example {which}: {e.name}: {e}")
            raise e
        LOGGER.info(f"End: example {which}: {'ok' if report.ok else 'failed'}")
        return report
