"""
The modular side: the Eichler integral lambda(t) = sum a_n t^n / n, Honda's
formal group built on it, the Laurent expansions X(q), Y(q) of the modular
parametrization in short-model coordinates, and Phi = -X/Y.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .bivariate import FormalGroupLaw, law_from_logarithm
from .curve import CurveModel
from .errors import NotParametrization
from .newform import NewformCoeffs
from .rings import QQ_RING
from .series import (
    TruncatedSeries,
    make_series,
    series_from_coefficients,
    shift,
    truncate,
)

# a_n needed beyond the requested precision by `modular_xy`
XY_EXTRA_COEFFICIENTS = 4


@dataclass(frozen=True)
class ParametrizationSeries:
    coeffs: NewformCoeffs
    curve: CurveModel
    prec: int
    x: TruncatedSeries
    y: TruncatedSeries
    phi: TruncatedSeries
    lam: TruncatedSeries

    @property
    def f(self) -> TruncatedSeries:
        return self.coeffs.q_series(self.prec)


@dataclass(frozen=True)
class HondaLaw:
    law: FormalGroupLaw
    non_integral: Tuple[Tuple[int, int, Fraction], ...]

    @property
    def integral(self) -> bool:
        return len(self.non_integral) == 0


def lambda_series(a: NewformCoeffs, prec: int) -> TruncatedSeries:
    """sum_{n < prec} (a_n / n) t^n"""
    _require(a, prec)
    return series_from_coefficients(
        QQ_RING, {n: Fraction(c, n) for (n, c) in a.items() if n < prec}, prec
    )


def honda_group_law(a: NewformCoeffs, prec: int) -> HondaLaw:
    """lambda^-1(lambda(t1) + lambda(t2)) to total degree prec, with its non-integral terms."""
    if prec < 2:
        raise ValueError(f"Precision must be at least 2, got {prec}")
    law = law_from_logarithm(lambda_series(a, prec))
    return HondaLaw(law=law, non_integral=tuple(law.non_integral()))


def modular_xy(a: NewformCoeffs, curve: CurveModel, prec: int) -> ParametrizationSeries:
    """
    X = q^-2 S with S = 1 + sum xi_k q^k. The relation q dX/dq = 2 Y f fixes
    Y = -q^-3 U / g with g = f/q and U = 1 + sum (2-k)/2 xi_k q^k, and the
    curve equation becomes U^2 = g^2 (S^3 + A q^4 S + B q^6). In degree k the
    unknown xi_k enters with coefficient -(k+1), so each degree determines the
    next coefficient. Every degree of the curve equation is then rechecked in full
    (degree 0 holds only for a_1 = ±1), and the pull-back to the long model
    must be integral.
    """
    if prec < 5:
        raise ValueError(f"Precision must be at least 5, got {prec}")
    size = prec + XY_EXTRA_COEFFICIENTS - 1
    _require(a, size + 1)

    g = [Fraction(a[n + 1]) for n in range(size)]
    g2 = [sum((g[i] * g[k - i] for i in range(k + 1)), Fraction(0)) for k in range(size)]
    A, B = curve.a, curve.b

    s: List[Fraction] = [Fraction(1)] + [Fraction(0)] * (size - 1)
    u: List[Fraction] = list(s)
    s2: List[Fraction] = list(s)
    t: List[Fraction] = list(s)
    for k in range(1, size):
        s2k = sum((s[i] * s[k - i] for i in range(1, k)), Fraction(0))
        tk = sum((s[i] * s2[k - i] for i in range(1, k)), Fraction(0)) + s2k
        if k >= 4:
            tk += A * s[k - 4]
        if k == 6:
            tk += B
        u2k = sum((u[i] * u[k - i] for i in range(1, k)), Fraction(0))
        gtk = sum((g2[i] * t[k - i] for i in range(1, k + 1)), Fraction(0)) + tk
        s[k] = (u2k - gtk) / (k + 1)
        s2[k] = s2k + 2 * s[k]
        t[k] = tk + 3 * s[k]
        u[k] = Fraction(2 - k, 2) * s[k]
    _check_curve_equation(g2, s, t, u)

    x = truncate(make_series(QQ_RING, -2, s, size - 2, "q"), prec)
    gs = make_series(QQ_RING, 0, g, size, "q")
    y = truncate(shift(make_series(QQ_RING, 0, u, size, "q") / gs, -3) * -1, prec)
    _check_integral(curve, x, y)

    phi = _phi(x, y)
    return ParametrizationSeries(
        coeffs=a,
        curve=curve,
        prec=prec,
        x=x,
        y=y,
        phi=phi,
        lam=lambda_series(a, phi.prec),
    )


def phi_series(ps: ParametrizationSeries) -> TruncatedSeries:
    """-X/Y in the formal parameter t."""
    return ps.phi


def _phi(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    phi = -x / y
    return make_series(phi.ring, phi.valuation, phi.coeffs, phi.prec, "t")


def _check_curve_equation(
    g2: List[Fraction], s: List[Fraction], t: List[Fraction], u: List[Fraction]
) -> None:
    """U^2 = g^2 T degree by degree, T = S^3 + A q^4 S + B q^6 being `t`."""
    for k in range(len(s)):
        residual = sum((u[i] * u[k - i] - g2[i] * t[k - i] for i in range(k + 1)), Fraction(0))
        if residual != 0:
            raise NotParametrization("curve equation", k - 6, residual)


def _check_integral(curve: CurveModel, x: TruncatedSeries, y: TruncatedSeries) -> None:
    x0, y0 = curve.from_short(x, y)
    for (name, series) in [("x", x0), ("y", y0)]:
        for (e, c) in series.items():
            if Fraction(c).denominator != 1:
                raise NotParametrization(name, e, c)


def _require(a: NewformCoeffs, prec: int) -> None:
    if a.prec < prec:
        raise ValueError(
            f"Need a_n for n < {prec}, have only up to a_{a.prec - 1} "
            f"(level {a.level}, {a.provenance})"
        )
