from fractions import Fraction

import mpmath
import pytest

from log_algebraic.model.config import BUILTIN_CURVES
from log_algebraic.model.errors import NotOnCurve, SpuriousMatch
from log_algebraic.model.point import (
    INFINITY,
    AffinePoint,
    is_on_curve,
    point_add,
    point_double,
    point_mul,
    point_neg,
    point_sum,
)
from log_algebraic.model.recognize import (
    NoMatch,
    is_near_infinity,
    recognize_point,
    torsion_multiples,
    torsion_order,
)

CURVE = BUILTIN_CURVES["11"].curve()

# the image of the long-model point (5, 5)
TORSION = AffinePoint(Fraction(14, 3), Fraction(11, 2))
DOUBLE = AffinePoint(Fraction(47, 3), Fraction(-121, 2))


def test_torsion_point_on_both_models():
    assert CURVE.to_short(Fraction(5), Fraction(5)) == (TORSION.x, TORSION.y)
    assert CURVE.long_residual(Fraction(5), Fraction(5)) == 0
    assert is_on_curve(TORSION, CURVE)
    assert is_on_curve(DOUBLE, CURVE)


def test_doubling():
    assert point_double(TORSION, CURVE) == DOUBLE
    assert point_add(TORSION, TORSION, CURVE) == DOUBLE
    assert point_mul(TORSION, 2, CURVE) == DOUBLE


def test_order_five():
    assert point_mul(TORSION, 5, CURVE) == INFINITY
    assert point_mul(TORSION, 4, CURVE) == point_neg(TORSION)
    assert point_mul(TORSION, -2, CURVE) == point_neg(DOUBLE)
    assert point_add(TORSION, point_neg(TORSION), CURVE) == INFINITY
    assert torsion_order(TORSION, CURVE) == 5
    assert torsion_order(INFINITY, CURVE) == 1
    multiples = torsion_multiples(TORSION, CURVE)
    assert len(multiples) == 5
    assert multiples[1] == DOUBLE
    assert multiples[-1] == INFINITY


def test_point_sum():
    total = point_sum([(2, TORSION), (-1, DOUBLE), (3, INFINITY)], CURVE)
    assert total == INFINITY
    assert point_sum([(1, TORSION), (1, TORSION)], CURVE) == DOUBLE


def test_identity_element():
    assert point_add(INFINITY, TORSION, CURVE) == TORSION
    assert point_add(TORSION, INFINITY, CURVE) == TORSION
    assert point_mul(TORSION, 0, CURVE) == INFINITY


def test_not_on_curve():
    with pytest.raises(NotOnCurve):
        point_add(AffinePoint(Fraction(0), Fraction(0)), TORSION, CURVE)
    with pytest.raises(NotOnCurve):
        point_mul(AffinePoint(Fraction(1), Fraction(1)), 3, CURVE)


def test_recognize_rational_point():
    with mpmath.workdps(30):
        approx = AffinePoint(
            mpmath.mpc(mpmath.mpf(47) / 3, mpmath.mpf("1e-25")),
            mpmath.mpf(-121) / 2,
        )
        assert recognize_point(approx, CURVE) == DOUBLE
        assert recognize_point(INFINITY, CURVE) == INFINITY


def test_recognize_no_match():
    with mpmath.workdps(30):
        found = recognize_point(AffinePoint(mpmath.pi, mpmath.mpf(1)), CURVE, tol=1e-6)
        assert isinstance(found, NoMatch)
        assert found.coordinate == "x"
        found = recognize_point(AffinePoint(mpmath.mpf(2), mpmath.mpc(1, 1)), CURVE)
        assert isinstance(found, NoMatch)
        assert found.reason == "not real"


def test_recognize_spurious_match():
    with mpmath.workdps(30):
        with pytest.raises(SpuriousMatch):
            recognize_point(AffinePoint(mpmath.mpf(1), mpmath.mpf(1)), CURVE)


def test_near_infinity():
    assert is_near_infinity(INFINITY)
    assert is_near_infinity(AffinePoint(mpmath.mpf("1e20"), mpmath.mpf("1e30")))
    assert not is_near_infinity(AffinePoint(mpmath.mpf(47) / 3, mpmath.mpf(-121) / 2))
