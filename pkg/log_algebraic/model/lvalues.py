"""
Floating evaluation of truncated series and the rapidly converging series
for L(E, 1) and its Dirichlet twists.

Everything here runs at the current mpmath precision; callers pick it with
`mpmath.workdps`. Sums are taken in ascending n so results are reproducible.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any, Optional, Sequence

import mpmath

from ..adapter.logging import get_logger
from .character import CyclotomicNumber, DirichletCharacter, gauss_sum
from .errors import BadTwist, DivergenceSuspected, NotPrimitive, PoleAt
from .newform import NewformCoeffs
from .series import TruncatedSeries

LOGGER = get_logger(__name__)

# nonzero terms per window of the geometric tail fit
TAIL_TERMS = 10

# a fitted term ratio above this marks an evaluation as heuristic
HEURISTIC_RATIO = 0.5

MODES = ["quadratic", "general"]


def to_mpf(c: Any) -> Any:
    if isinstance(c, Fraction):
        return mpmath.mpf(c.numerator) / c.denominator
    return mpmath.mpmathify(c)


@dataclass(frozen=True)
class SeriesValue:
    value: Any
    error: Any
    ratio: Any

    @property
    def heuristic(self) -> bool:
        return self.ratio > HEURISTIC_RATIO

    def __str__(self) -> str:
        flag = " (heuristic)" if self.heuristic else ""
        return f"{mpmath.nstr(self.value, 12)} ± {mpmath.nstr(self.error, 3)}{flag}"


def eval_series(
    s: TruncatedSeries, z: Any, tail_terms: int = TAIL_TERMS
) -> SeriesValue:
    """
    Horner evaluation of a series over ℚ at a complex point, with a tail
    estimate from comparing the largest terms of the last two windows of
    `tail_terms` nonzero terms.
    """
    z = mpmath.mpmathify(z)
    if z == 0 and not s.is_zero() and s.valuation < 0:
        raise PoleAt(z)
    if s.prec <= 0:
        raise ValueError(f"Cannot evaluate a series known only to O({s.var}^{s.prec})")
    if z == 0:
        return SeriesValue(to_mpf(s.coefficient(0)), mpmath.mpf(0), mpmath.mpf(0))

    acc = mpmath.mpf(0)
    for c in reversed(s.coeffs):
        acc = acc * z + to_mpf(c)
    value = acc * z**s.valuation

    r = abs(z)
    sizes = [(e, abs(to_mpf(c)) * r**e) for (e, c) in s.items()]
    window = min(tail_terms, len(sizes) // 2)
    if window == 0:
        return SeriesValue(value, mpmath.mpf(0), mpmath.mpf(0))
    late, early = sizes[-window:], sizes[-2 * window : -window]
    span = late[0][0] - early[0][0]
    ratio = (max(t for (_, t) in late) / max(t for (_, t) in early)) ** (mpmath.mpf(1) / span)
    if ratio >= 1:
        raise DivergenceSuspected(mpmath.nstr(ratio, 6))
    return SeriesValue(value, max(t for (_, t) in late) * ratio / (1 - ratio), ratio)


def eval_coefficients(coeffs: Sequence[Any], z: Any) -> Any:
    """sum c_n z^n for n >= 1, `coeffs[0]` being c_1."""
    z = mpmath.mpmathify(z)
    total = mpmath.mpf(0)
    zn = mpmath.mpf(1)
    for c in coeffs:
        zn *= z
        total += c * zn
    return total


# ------------------------------------------------------------------------------
# L-values
# ------------------------------------------------------------------------------


@dataclass(frozen=True)
class LValue:
    value: Any
    tail: Any
    terms: int

    @property
    def imaginary_residual(self) -> Any:
        return abs(mpmath.im(self.value))

    def __str__(self) -> str:
        return f"{mpmath.nstr(self.value, 12)} (tail <= {mpmath.nstr(self.tail, 3)}, {self.terms} terms)"


def _require_terms(a: NewformCoeffs, terms: int) -> None:
    if terms < 1:
        raise ValueError(f"Need at least one term, got {terms}")
    if a.prec <= terms:
        raise ValueError(f"Need a_n for n <= {terms}, have only up to a_{a.prec - 1}")


def _tail_bound(x: Any, terms: int) -> Any:
    # |a_n| / n <= d(n) / sqrt(n) <= 2
    return 2 * x ** (terms + 1) / (1 - x)


def l1_rapid(
    a: NewformCoeffs, sign: int = 1, terms: int = 400, conductor: Optional[int] = None
) -> LValue:
    """L(E, 1) = (1 + ε) sum a_n / n e^(-2πn/√N)"""
    if sign not in (1, -1):
        raise ValueError(f"The sign of the functional equation is ±1, got {sign}")
    _require_terms(a, terms)
    if sign == -1:
        return LValue(mpmath.mpf(0), mpmath.mpf(0), terms)
    n_level = a.level if conductor is None else conductor
    x = mpmath.exp(-2 * mpmath.pi / mpmath.sqrt(n_level))
    total = eval_coefficients([mpmath.mpf(c) / n for (n, c) in a.items() if n <= terms], x)
    LOGGER.debug(f"L(E, 1) from {terms} terms at x = {mpmath.nstr(x, 10)}")
    return LValue(2 * total, 2 * _tail_bound(x, terms), terms)


def twisted_sum(a: NewformCoeffs, chi: DirichletCharacter, x: Any, terms: int) -> Any:
    """S_χ = sum χ(n) a_n / n x^n"""
    values = chi.values_complex()
    return eval_coefficients(
        [values[n % chi.modulus] * c / n for (n, c) in a.items() if n <= terms], x
    )


def twist_scale(chi: DirichletCharacter, conductor: int) -> Any:
    return mpmath.exp(-2 * mpmath.pi / (chi.modulus * mpmath.sqrt(conductor)))


def root_factor(chi: DirichletCharacter, conductor: int, sign: int = 1) -> CyclotomicNumber:
    """C_χ = ε χ(-N) g(χ) / g(conj χ) = ε χ(-N) g(χ)^2 / (χ(-1) m), exactly."""
    g = gauss_sum(chi)
    return chi.value(-conductor) * g * g * Fraction(sign * chi.parity, chi.modulus)


def l1_twisted(
    a: NewformCoeffs,
    chi: DirichletCharacter,
    sign: int = 1,
    terms: int = 400,
    mode: str = "general",
    conductor: Optional[int] = None,
) -> LValue:
    """
    L(E, χ, 1) = S_χ + C_χ S_conj(χ) with the sums at x = e^(-2π/(m√N)). In
    `quadratic` mode χ must be real and the value is (1 + ε χ(-N)) S_χ.
    """
    n_level = a.level if conductor is None else conductor
    if gcd(chi.modulus, n_level) != 1:
        raise BadTwist(chi.modulus, n_level)
    if not chi.is_primitive():
        raise NotPrimitive(chi.modulus, chi.conductor())
    _require_terms(a, terms)
    x = twist_scale(chi, n_level)
    tail = _tail_bound(x, terms)
    s = twisted_sum(a, chi, x, terms)
    c = root_factor(chi, n_level, sign)
    LOGGER.debug(f"Twist by {chi}: S = {mpmath.nstr(s, 12)}, C = {c}")

    if mode == "quadratic":
        if not chi.is_real:
            raise BadTwist(chi.modulus, n_level, f"{chi} is not a real character")
        return LValue((1 + c.to_complex()) * s, 2 * tail, terms)
    if mode == "general":
        s_bar = twisted_sum(a, chi.conjugate(), x, terms)
        return LValue(s + c.to_complex() * s_bar, 2 * tail, terms)
    raise ValueError(f"Unknown mode '{mode}': expected one of {', '.join(MODES)}")


def twisted_value(beta: Any, a: NewformCoeffs, u: Any, t: Any, terms: int) -> Any:
    """sum a_n beta(u^n) / n t^n at complex u, t; `beta` has `.evaluate`."""
    _require_terms(a, terms)
    u = mpmath.mpmathify(u)
    t = mpmath.mpmathify(t)
    total = mpmath.mpf(0)
    un, tn = mpmath.mpf(1), mpmath.mpf(1)
    for (n, c) in a.items():
        if n > terms:
            break
        un *= u
        tn *= t
        if c:
            total += beta.evaluate(un) * c / n * tn
    return total