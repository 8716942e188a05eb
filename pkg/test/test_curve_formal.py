from fractions import Fraction

from hypothesis import given, settings
import pytest

from examples.curve import g2_g3, long_curves, short_curves
from log_algebraic.model.curve import CurveModel, derive_invariants, short_curve
from log_algebraic.model.errors import SingularCurve
from log_algebraic.model.formal_group import (
    formal_log_exp,
    formal_xy,
    group_law,
    invariant_differential,
    mult_by_m,
    wp_derivative_half,
    wp_series,
)
from log_algebraic.model.point import AffinePoint, point_add
from log_algebraic.model.rings import QQ_RING
from log_algebraic.model.series import (
    SeriesField,
    TruncatedSeries,
    compare_series,
    gen,
    ps_compose,
    ps_derive,
    scale,
    truncate,
    with_var,
)

X0_11 = (0, -1, 1, -10, -20)


def test_x0_11_invariants():
    curve = derive_invariants(*X0_11, conductor=11)
    assert curve.c4 == 496
    assert curve.c6 == 20008
    assert curve.discriminant == -161051
    assert curve.g2 == Fraction(124, 3)
    assert curve.g3 == Fraction(2501, 27)
    assert curve.a == Fraction(-31, 3)
    assert curve.b == Fraction(-2501, 108)
    assert curve.short_model() == "y^2 = x^3 - 31/3*x - 2501/108"
    assert curve.long_model() == "y^2 + y = x^3 - x^2 - 10*x - 20"


def test_singular_curve():
    with pytest.raises(SingularCurve):
        derive_invariants(0, 0, 0, 0, 0)
    with pytest.raises(SingularCurve):
        short_curve(-3, 2)


@given(curve=long_curves())
@settings(deadline=None, max_examples=40)
def test_short_model_change_of_variables(curve: CurveModel):
    # the long model and short model cut out the same points
    x0, y0 = Fraction(3, 2), Fraction(-5, 7)
    x, y = curve.to_short(x0, y0)
    assert curve.from_short(x, y) == (x0, y0)
    assert curve.short_residual(x, y) == curve.long_residual(x0, y0)


def test_formal_coordinates():
    curve = derive_invariants(*X0_11)
    x, y = formal_xy(curve, 10)
    assert x.valuation == -2
    assert x.coefficient(-2) == 1
    assert x.coefficient(2) == -curve.a
    assert x.coefficient(4) == -curve.b
    assert y.coefficient(-3) == -1
    assert_same(y * y, x * x * x + x * curve.a + curve.b)


def test_invariant_differential():
    curve = derive_invariants(*X0_11)
    omega = invariant_differential(curve, 8)
    assert [omega.coefficient(e) for e in range(8)] == [
        1,
        0,
        0,
        0,
        2 * curve.a,
        0,
        3 * curve.b,
        0,
    ]


@given(curve=short_curves())
@settings(deadline=None, max_examples=20)
def test_log_and_exp_are_inverse(curve: CurveModel):
    log, exp = formal_log_exp(curve, 12)
    t = gen(QQ_RING, 12)
    assert_same(ps_compose(exp, log), t)
    assert_same(ps_derive(log), invariant_differential(curve, 11))


def test_wp_coefficients():
    wp = wp_series(Fraction(124, 3), Fraction(2501, 27), 6)
    assert wp.var == "z"
    assert wp.coefficient(-2) == 1
    assert wp.coefficient(0) == 0
    assert wp.coefficient(2) == Fraction(31, 15)
    assert wp.coefficient(4) == Fraction(2501, 756)


@given(g=g2_g3())
@settings(deadline=None, max_examples=20)
def test_wp_differential_equation(g):
    (g2, g3) = g
    wp = wp_series(g2, g3, 20)
    dwp = ps_derive(wp)
    assert_same(dwp * dwp, wp * wp * wp * 4 - wp * g2 - g3)
    assert_same(wp_derivative_half(g2, g3, 19) * 2, dwp)


@given(curve=short_curves())
@settings(deadline=None, max_examples=20)
def test_wp_of_formal_log_is_x(curve: CurveModel):
    prec = 12
    log, _ = formal_log_exp(curve, prec)
    x, _ = formal_xy(curve, prec)
    wp = wp_series(curve.g2, curve.g3, prec)
    assert_same(ps_compose(wp, log), x)


@given(curve=short_curves())
@settings(deadline=None, max_examples=10)
def test_group_law_axioms(curve: CurveModel):
    prec = 8
    law = group_law(curve, prec)
    t = gen(QQ_RING, prec)
    assert_same(law.rows[0], t)
    for i in range(prec):
        for j in range(prec - i):
            assert law.coefficient(i, j) == law.coefficient(j, i)
    lhs = law.evaluate(law.evaluate(t * 2, t * 3), -t)
    rhs = law.evaluate(t * 2, law.evaluate(t * 3, -t))
    assert_same(lhs, rhs)


def test_group_law_beyond_total_degree():
    law = group_law(derive_invariants(*X0_11), 4)
    with pytest.raises(ValueError):
        law.coefficient(2, 2)


def test_multiplication_by_m():
    curve = derive_invariants(*X0_11)
    t = gen(QQ_RING, 10)
    law = group_law(curve, 10)
    assert_same(mult_by_m(curve, 2, 10), law.evaluate(t, t))
    assert_same(mult_by_m(curve, 3, 10), law.fold([t, t, t]))
    assert_same(mult_by_m(curve, -1, 10), -t)
    assert_same(mult_by_m(curve, 1, 10), t)


@given(curve=long_curves())
@settings(deadline=None, max_examples=10)
def test_multiplication_is_a_homomorphism(curve: CurveModel):
    prec = 8
    (two, three, six) = [mult_by_m(curve, m, prec) for m in (2, 3, 6)]
    assert_same(ps_compose(two, three), six)
    assert_same(ps_compose(three, two), six)
    neg = mult_by_m(curve, -1, prec)
    assert_same(ps_compose(neg, neg), gen(QQ_RING, prec))


@pytest.mark.parametrize("prec", [6, 12])
def test_formal_group_is_stable_under_more_precision(prec):
    curve = derive_invariants(*X0_11)
    (log, exp) = formal_log_exp(curve, prec)
    (more_log, more_exp) = formal_log_exp(curve, prec + 10)
    assert log.prec == exp.prec == prec
    assert compare_series(log, truncate(more_log, prec)) is None
    assert compare_series(exp, truncate(more_exp, prec)) is None
    law = group_law(curve, prec)
    more = group_law(curve, prec + 10)
    for i in range(prec):
        for j in range(prec - i):
            assert law.coefficient(i, j) == more.coefficient(i, j)


@pytest.mark.parametrize("c1, c2", [(1, 2), (Fraction(1, 2), -3), (2, 2)])
def test_chord_and_tangent_matches_group_law(c1, c2):
    # (x(t1), y(t1)) + (x(t2), y(t2)) = (x(F(t1, t2)), y(F(t1, t2))) on t1 = c1 t, t2 = c2 t
    curve = derive_invariants(*X0_11)
    prec = 15
    (x, y) = formal_xy(curve, prec)
    law = group_law(curve, prec)
    t = gen(QQ_RING, prec)
    p = AffinePoint(scale(x, c1), scale(y, c1))
    q = AffinePoint(scale(x, c2), scale(y, c2))
    total = point_add(p, q, curve, SeriesField(QQ_RING, prec), check=False)
    s = law.evaluate(t * c1, t * c2)
    for (found, expected) in [(total.x, ps_compose(x, s)), (total.y, ps_compose(y, s))]:
        assert min(found.prec, expected.prec) > 4
        assert_same(found, expected)


# ------------------------------------------------------------------------------
# Helpers
# ------------------------------------------------------------------------------


def assert_same(lhs: TruncatedSeries, rhs: TruncatedSeries):
    if lhs.var != rhs.var:
        rhs = with_var(rhs, lhs.var)
    found = compare_series(lhs, rhs)
    assert found is None, f"coefficient of {lhs.var}^{found[0]}: {found[1]} != {found[2]}"
