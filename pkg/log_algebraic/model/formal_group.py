"""
The formal group of the short model y^2 = x^3 + A x + B in the parameter
t = -x/y: formal coordinates, invariant differential, logarithm and
exponential, the Weierstrass function and the two-variable group law.
"""

from fractions import Fraction
from functools import lru_cache
from typing import Any, Tuple

from .bivariate import FormalGroupLaw, law_from_logarithm
from .curve import CurveModel
from .rings import QQ_RING
from .series import (
    TruncatedSeries,
    gen,
    ps_compose,
    ps_derive,
    ps_integrate,
    ps_reverse,
    series_from_coefficients,
    truncate,
    zero_series,
)

# extra terms carried by the w-expansion: x = t/w and y = -1/w lose them
XY_GUARD = 6


@lru_cache(maxsize=32)
def formal_xy(curve: CurveModel, prec: int) -> Tuple[TruncatedSeries, TruncatedSeries]:
    """
    x(t), y(t) to O(t^prec), from the fixed point of
    w = t^3 + A t w^2 + B w^3 where w = -1/y, followed by x = t/w, y = -1/w.
    """
    if prec < 1:
        raise ValueError(f"Precision must be at least 1, got {prec}")
    size = prec + XY_GUARD
    t = gen(QQ_RING, size)
    t3 = t**3
    a, b = curve.a, curve.b
    w = zero_series(QQ_RING, size)
    for _ in range(size):
        w2 = truncate(w * w, size)
        nxt = truncate(t3 + t * w2 * a + w2 * w * b, size)
        if nxt == w:
            break
        w = nxt
    inv_w = 1 / w
    return (truncate(t * inv_w, prec), truncate(-inv_w, prec))


def invariant_differential(curve: CurveModel, prec: int) -> TruncatedSeries:
    """dx / 2y as a power series in t (the coefficient of dt)."""
    x, y = formal_xy(curve, prec)
    return truncate(ps_derive(x) / (y * 2), prec)


@lru_cache(maxsize=32)
def formal_log_exp(curve: CurveModel, prec: int) -> Tuple[TruncatedSeries, TruncatedSeries]:
    if prec < 2:
        raise ValueError(f"Precision must be at least 2, got {prec}")
    log = truncate(ps_integrate(invariant_differential(curve, prec)), prec)
    return (log, ps_reverse(log))


def wp_series(g2: Any, g3: Any, prec: int) -> TruncatedSeries:
    """
    Laurent expansion 1/z^2 + sum c_k z^(2k) of the Weierstrass function,
    c_1 = g2/20, c_2 = g3/28, and for k >= 3
    c_k = 3 / ((2k+3)(k-2)) * sum_{m=1}^{k-2} c_m c_{k-1-m}.
    """
    if prec < 2:
        raise ValueError(f"Precision must be at least 2, got {prec}")
    g2, g3 = Fraction(g2), Fraction(g3)
    c = {1: g2 / 20, 2: g3 / 28}
    k = 3
    while 2 * k < prec:
        conv = sum((c[m] * c[k - 1 - m] for m in range(1, k - 1)), Fraction(0))
        c[k] = Fraction(3, (2 * k + 3) * (k - 2)) * conv
        k += 1
    coeffs = {-2: Fraction(1)}
    coeffs.update({2 * j: v for (j, v) in c.items() if 2 * j < prec})
    return series_from_coefficients(QQ_RING, coeffs, prec, var="z")


def wp_derivative_half(g2: Any, g3: Any, prec: int) -> TruncatedSeries:
    """℘'(z)/2, the y-coordinate partner of ℘ on the short model."""
    return ps_derive(wp_series(g2, g3, prec + 1)) / 2


@lru_cache(maxsize=32)
def group_law(curve: CurveModel, prec: int) -> FormalGroupLaw:
    if prec < 2:
        raise ValueError(f"Precision must be at least 2, got {prec}")
    log, _ = formal_log_exp(curve, prec)
    return law_from_logarithm(log)


def mult_by_m(curve: CurveModel, m: int, prec: int) -> TruncatedSeries:
    if prec < 1:
        raise ValueError(f"Precision must be at least 1, got {prec}")
    log, exp = formal_log_exp(curve, max(prec, 2))
    return truncate(ps_compose(exp, log * m), prec)
