from fractions import Fraction

from hypothesis import given, settings
import hypothesis.strategies as hyp
import pytest

from examples.series import rational_functions, reversible, series, units
from log_algebraic.model.errors import (
    CompositionDomain,
    LogarithmicTerm,
    NotAUnit,
    NotReversible,
    RingMismatch,
)
from log_algebraic.model.rings import QQ_RING, QQ_U, QQ_U_FRACTIONS
from log_algebraic.model.series import (
    TruncatedSeries,
    compare_series,
    constant,
    format_series,
    from_line,
    gen,
    make_series,
    map_coefficients,
    monomial,
    ps_compose,
    ps_derive,
    ps_integrate,
    ps_inv,
    ps_reverse,
    ps_reverse_lagrange,
    ps_sub,
    scale,
    series_from_coefficients,
    shift,
    to_line,
    truncate,
    with_var,
)


@pytest.mark.parametrize("ring", [QQ_RING, QQ_U], ids=str)
@given(data=hyp.data())
@settings(deadline=None, max_examples=50)
def test_ring_axioms(ring, data):
    (a, b, c) = [data.draw(series(ring=ring, max_prec=8)) for _ in range(3)]
    assert_same((a + b) + c, a + (b + c))
    assert_same(a + b, b + a)
    assert_same((a * b) * c, a * (b * c))
    assert_same(a * b, b * a)
    assert_same(a * (b + c), a * b + a * c)
    assert_same(a - a, constant(QQ_RING, 0, a.prec))


@given(a=rational_functions(), b=rational_functions())
@settings(deadline=None, max_examples=50)
def test_rational_functions_stay_reduced(a, b):
    found = [a + b, a - b, a * b]
    if a.numer:
        found.append(b / a)
    for c in found:
        assert c.numer.gcd(c.denom).is_ground
        _, denom = QQ_U_FRACTIONS.monic_parts(c)
        assert denom[max(denom)] == 1


def test_monic_parts():
    u = QQ_U_FRACTIONS.gen
    c = (u * 2) / (u * 2 + 4)
    assert QQ_U_FRACTIONS.monic_parts(c) == ({1: 1}, {0: 2, 1: 1})
    assert QQ_U_FRACTIONS.format(c) == "(u)/(2 + u)"
    assert QQ_U_FRACTIONS.monic_parts(u / 3) == ({1: Fraction(1, 3)}, {0: 1})


@given(s=units())
@settings(deadline=None, max_examples=50)
def test_inverse(s: TruncatedSeries):
    assert_same(s * ps_inv(s), constant(QQ_RING, 1, s.prec))


@given(s=reversible())
@settings(deadline=None, max_examples=50)
def test_reverse_is_compositional_inverse(s: TruncatedSeries):
    r = ps_reverse(s)
    t = gen(QQ_RING, s.prec)
    assert_same(ps_compose(s, r), t)
    assert_same(ps_compose(r, s), t)


@given(s=reversible(max_prec=12))
@settings(deadline=None, max_examples=50)
def test_reverse_agrees_with_lagrange_inversion(s: TruncatedSeries):
    assert ps_reverse(s) == ps_reverse_lagrange(s)


@given(s=series())
@settings(deadline=None, max_examples=50)
def test_derive_integrate(s: TruncatedSeries):
    assert_same(ps_derive(ps_integrate(s)), s)
    integral = ps_integrate(s)
    assert integral.prec == s.prec + 1
    assert integral.coefficient(0) == 0


def test_laurent_arithmetic():
    t = gen(QQ_RING, 8)
    s = 1 / t**2 + t
    assert s.valuation == -2
    assert s.prec == 5
    assert s.coefficient(-2) == 1
    assert s.coefficient(1) == 1
    assert_same(s * t**2, constant(QQ_RING, 1, 8) + t**3)


def test_composition_precision():
    # an outer series known to O(t^4) composed with an inner one of valuation 2
    outer = series_from_coefficients(QQ_RING, [0, 1, 1, 1], 4)
    inner = monomial(QQ_RING, 1, 2, 20)
    composed = ps_compose(outer, inner)
    assert composed.prec == 8
    assert [composed.coefficient(e) for e in range(8)] == [0, 0, 1, 0, 1, 0, 1, 0]


def test_scale_and_shift():
    s = series_from_coefficients(QQ_RING, [0, 1, 1, 1], 4)
    scaled = scale(s, 2)
    assert [scaled.coefficient(e) for e in range(4)] == [0, 2, 4, 8]
    shifted = shift(s, -1)
    assert shifted.valuation == 0
    assert shifted.prec == 3


def test_sub_and_map_coefficients():
    s = series_from_coefficients(QQ_RING, [1, 2, 3], 3)
    assert ps_sub(s, s) == series_from_coefficients(QQ_RING, [], 3)
    u = QQ_U.gen
    lifted = map_coefficients(s, lambda c: c * u, QQ_U)
    assert lifted.ring == QQ_U
    assert lifted.coefficient(2) == 3 * u


def test_polynomial_coefficients():
    u = QQ_U.gen
    s = series_from_coefficients(QQ_U, {1: u, 2: u**2 - u}, 4)
    assert s.ring == QQ_U
    t = gen(QQ_RING, 4)
    assert_same(s + t, series_from_coefficients(QQ_U, {1: u + 1, 2: u**2 - u}, 4))


def test_format_series():
    s = series_from_coefficients(
        QQ_RING, {1: 1, 2: -1, 3: Fraction(-1, 3), 4: Fraction(1, 2)}, 5
    )
    assert format_series(s) == "t - t^2 - 1/3*t^3 + 1/2*t^4 + O(t^5)"
    assert format_series(s, show_prec=False) == "t - t^2 - 1/3*t^3 + 1/2*t^4"
    assert str(make_series(QQ_RING, 3, [], 3)) == "O(t^3)"


def test_line_codec():
    s = series_from_coefficients(QQ_RING, {-2: 1, 0: Fraction(11, 3), 1: 5}, 3)
    line = to_line(s)
    assert line == "-2;3;1,0,11/3,5"
    assert from_line(line) == s


def test_truncate():
    s = series_from_coefficients(QQ_RING, [1, 2, 3, 4, 5], 5)
    assert truncate(s, 3) == series_from_coefficients(QQ_RING, [1, 2, 3], 3)
    assert truncate(s, 10) == s


def test_compare_series_first_mismatch():
    a = series_from_coefficients(QQ_RING, [1, 2, 3, 4], 4)
    b = series_from_coefficients(QQ_RING, [1, 2, 5, 4], 6)
    assert compare_series(a, b) == (2, 3, 5)
    assert compare_series(a, b, upto=2) is None


# ------------------------------------------------------------------------------
# Errors
# ------------------------------------------------------------------------------


def test_not_a_unit():
    with pytest.raises(NotAUnit):
        ps_inv(make_series(QQ_RING, 0, [], 4))


def test_not_reversible():
    t = gen(QQ_RING, 6)
    with pytest.raises(NotReversible):
        ps_reverse(t**2)


def test_composition_domain():
    with pytest.raises(CompositionDomain):
        ps_compose(gen(QQ_RING, 4), constant(QQ_RING, 1, 4))


def test_logarithmic_term():
    t = gen(QQ_RING, 6)
    with pytest.raises(LogarithmicTerm):
        ps_integrate(1 / t)


def test_variable_mismatch():
    with pytest.raises(RingMismatch):
        gen(QQ_RING, 4) + with_var(gen(QQ_RING, 4), "z")


# ------------------------------------------------------------------------------
# Helpers
# ------------------------------------------------------------------------------


def assert_same(lhs: TruncatedSeries, rhs: TruncatedSeries):
    found = compare_series(lhs, rhs)
    assert found is None, f"coefficient of t^{found[0]}: {found[1]} != {found[2]}"
