from fractions import Fraction

import pytest

from log_algebraic.model.config import BUILTIN_CURVES
from log_algebraic.model.errors import NotParametrization
from log_algebraic.model.formal_group import formal_xy
from log_algebraic.model.newform import eta_product_coeffs
from log_algebraic.model.parametrization import (
    honda_group_law,
    lambda_series,
    modular_xy,
    phi_series,
)
from log_algebraic.model.series import (
    compare_series,
    format_series,
    ps_compose,
    truncate,
    with_var,
)

CURVE = BUILTIN_CURVES["11"].curve()
A = eta_product_coeffs(11, 60)

X_COEFFICIENTS = [1, 2, Fraction(11, 3), 5, 8, 1, 7]


def test_lambda_series():
    assert format_series(lambda_series(A, 6)) == "t - t^2 - 1/3*t^3 + 1/2*t^4 + 1/5*t^5 + O(t^6)"


def test_lambda_needs_enough_coefficients():
    with pytest.raises(ValueError):
        lambda_series(eta_product_coeffs(11, 5), 10)


def test_modular_x():
    ps = modular_xy(A, CURVE, 6)
    assert ps.x.var == "q"
    assert ps.x.valuation == -2
    assert [ps.x.coefficient(e) for e in range(-2, 5)] == X_COEFFICIENTS


def test_modular_y_on_curve():
    ps = modular_xy(A, CURVE, 20)
    x, y = ps.x, ps.y
    assert y.coefficient(-3) == -1
    assert compare_series(y * y, x * x * x + x * CURVE.a + CURVE.b) is None


def test_long_model_pull_back_is_integral():
    ps = modular_xy(A, CURVE, 20)
    x0, y0 = CURVE.from_short(ps.x, ps.y)
    assert x0.coefficient(0) == 4
    assert all(Fraction(c).denominator == 1 for (_, c) in x0.items())
    assert all(Fraction(c).denominator == 1 for (_, c) in y0.items())


def test_phi_is_a_parameter():
    ps = modular_xy(A, CURVE, 20)
    phi = phi_series(ps)
    assert phi.var == "t"
    assert phi.valuation == 1
    assert phi.coefficient(1) == 1


def test_formal_coordinates_at_phi():
    # X(q) = x(Phi(q)) where x(t) is the formal coordinate
    ps = modular_xy(A, CURVE, 16)
    x, _ = formal_xy(CURVE, 16)
    found = compare_series(ps_compose(x, ps.phi), with_var(ps.x, "t"))
    assert found is None


def test_modular_xy_precision():
    with pytest.raises(ValueError):
        modular_xy(A, CURVE, 4)
    with pytest.raises(ValueError):
        modular_xy(eta_product_coeffs(11, 10), CURVE, 20)


def test_honda_law_is_integral():
    honda = honda_group_law(A, 16)
    assert honda.integral
    assert honda.law.coefficient(1, 0) == 1
    assert honda.law.coefficient(0, 1) == 1
    assert honda.law.coefficient(1, 1) == 2


@pytest.mark.parametrize("prec", [6, 12])
def test_modular_xy_is_stable_under_more_precision(prec):
    ps = modular_xy(A, CURVE, prec)
    more = modular_xy(A, CURVE, prec + 10)
    for (short, long) in [(ps.phi, more.phi), (ps.x, more.x), (ps.y, more.y)]:
        assert long.prec > short.prec
        assert compare_series(short, truncate(long, short.prec)) is None


def test_leading_coefficient_must_be_one():
    with pytest.raises(NotParametrization) as e:
        modular_xy(A.with_coefficient(1, 2), CURVE, 8)
    assert e.value.series == "curve equation"
    assert e.value.exponent == -6
    assert e.value.coefficient == -3
    assert "residual -3 at q^-6" in str(e.value)
