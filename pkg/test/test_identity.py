from fractions import Fraction

import pytest

from log_algebraic.model.config import BUILTIN_CURVES
from log_algebraic.model.errors import DegenerateSum
from log_algebraic.model.identity import (
    BetaPoly,
    main_b_sides,
    parse_beta,
    specialize_twisted_harmonic,
    twisted_harmonic,
    twisted_harmonic_by_rearrangement,
    verify_honda,
    verify_logalg1a,
    verify_main_a,
    verify_main_b,
    verify_morphism_differential,
    verify_phi_differential,
    verify_phi_morphism,
    verify_wp_identities,
    verify_xy_phi,
)
from log_algebraic.model.newform import NewformCoeffs, eta_product_coeffs
from log_algebraic.model.parametrization import modular_xy
from log_algebraic.model.rings import QQ_RING, QQ_U_FRACTIONS
from log_algebraic.model.series import compare_series, map_coefficients

CURVE = BUILTIN_CURVES["11"].curve()
A = eta_product_coeffs(11, 60)

BETAS = [
    BetaPoly((0, 1)),
    BetaPoly((0, 1, -1)),
    BetaPoly((0, 2, 2, -4, -4, 2, 2)),
]


def test_logalg1a():
    report = verify_logalg1a(A, CURVE, 20)
    assert report.holds
    assert report.mismatch is None
    assert report.verdict == "holds"


@pytest.mark.parametrize("index", [5, 7])
def test_corrupted_coefficient_is_located(index):
    reference = modular_xy(A, CURVE, 12)
    mutated = A.with_coefficient(index, A[index] + 1)
    report = verify_logalg1a(mutated, CURVE, 12, reference)
    assert not report.holds
    assert report.mismatch.exponent == index
    assert report.verdict == f"fails at t^{index}"


def test_wp_identities():
    assert verify_wp_identities(A, CURVE, 16).holds


def test_xy_phi():
    assert verify_xy_phi(A, CURVE, 16).holds


def test_phi_differential():
    assert verify_phi_differential(A, CURVE, 16).holds


@pytest.mark.parametrize("k", [2, 3, -1])
def test_morphism_differential(k):
    assert verify_morphism_differential(CURVE, k, 12).holds


def test_phi_morphism():
    report = verify_phi_morphism(A, CURVE, 10, samples=2, seed=7)
    assert report.holds
    assert report.detail.startswith("2 random lines")


def test_honda():
    report = verify_honda(A, 20)
    assert report.holds
    assert report.ring == "ZZ"


def test_honda_non_integral():
    # lambda = t + t^2/2 has t1^2 t2^2 coefficient -5/2 in its group law
    a = NewformCoeffs(level=0, coeffs=(1, 1, 0, 0, 0, 0, 0))
    report = verify_honda(a, 8)
    assert not report.holds
    assert report.mismatch.exponent == 4
    assert report.mismatch.rhs == "an integer"


@pytest.mark.parametrize("beta", BETAS, ids=str)
def test_main_a(beta):
    assert verify_main_a(beta, A, CURVE, 14).holds


def test_main_a_order_of_summands():
    beta = BETAS[2]
    order = list(reversed(range(len(beta.terms()))))
    assert verify_main_a(beta, A, CURVE, 12, order=order).holds


@pytest.mark.parametrize("beta", BETAS[:2], ids=str)
def test_main_b_exact(beta):
    assert verify_main_b(beta, A, CURVE, 8).holds


def test_main_b_specialized():
    values = [Fraction(2), Fraction(-1, 3)]
    assert verify_main_b(BETAS[1], A, CURVE, 8, mode="specialize", values=values).holds


def test_main_b_degenerate():
    with pytest.raises(DegenerateSum):
        verify_main_b(BetaPoly((0,)), A, CURVE, 8)


def test_main_b_unknown_mode():
    with pytest.raises(ValueError):
        verify_main_b(BETAS[0], A, CURVE, 8, mode="numeric")


def test_main_b_modes_agree_off_the_identity():
    reference = modular_xy(A, CURVE, 16)
    mutated = A.with_coefficient(5, A[5] + 1)
    u = Fraction(2)
    lhs, rhs = main_b_sides(BETAS[1], mutated, CURVE, 8, reference)
    assert compare_series(lhs, rhs, 8) is not None
    residual = lhs - rhs

    at_u = map_coefficients(residual, lambda c: QQ_U_FRACTIONS.evaluate(c, u), QQ_RING)
    lhs_u, rhs_u = main_b_sides(BETAS[1], mutated, CURVE, 8, reference, u=u)
    assert compare_series(at_u, lhs_u - rhs_u, 8) is None

    exact = verify_main_b(BETAS[1], mutated, CURVE, 8, reference)
    special = verify_main_b(BETAS[1], mutated, CURVE, 8, reference, mode="specialize", values=[u])
    assert not exact.holds and not special.holds
    assert exact.mismatch.exponent == special.mismatch.exponent


# a_5 moves lambda at t^5; ℘ starts at t^-2, so ℘(lambda) moves at t^2
@pytest.mark.parametrize(
    "verify,exponent",
    [
        (lambda a, ref: verify_logalg1a(a, CURVE, 12, ref), 5),
        (lambda a, ref: verify_main_a(BETAS[1], a, CURVE, 12, ref), 5),
        (lambda a, ref: verify_wp_identities(a, CURVE, 12, ref), 2),
        (lambda a, ref: verify_main_b(BETAS[1], a, CURVE, 8, ref), 2),
    ],
    ids=["logalg1a", "main-a", "wp", "main-b"],
)
def test_mutation_is_detected_at_first_affected_degree(verify, exponent):
    reference = modular_xy(A, CURVE, 16)
    report = verify(A.with_coefficient(5, A[5] + 1), reference)
    assert not report.holds
    assert report.mismatch.exponent == exponent


def test_twisted_harmonic_rearrangement():
    for beta in BETAS:
        lhs = twisted_harmonic(beta, A, 12)
        rhs = twisted_harmonic_by_rearrangement(beta, A, 12)
        assert compare_series(lhs, rhs) is None


def test_specialized_twisted_harmonic():
    beta = BETAS[1]
    s = specialize_twisted_harmonic(beta, A, 4, Fraction(2))
    # a_n (2^n - 4^n) / n
    assert [s.coefficient(n) for n in range(4)] == [0, -2, 12, Fraction(56, 3)]


def test_parse_beta():
    assert parse_beta("1@1") == BetaPoly((0, 1))
    assert parse_beta("1,-1@1") == BetaPoly((0, 1, -1))
    assert parse_beta("2,0,3") == BetaPoly((2, 0, 3))
    assert str(parse_beta("1,-1@1")) == "u - u^2"
    for bad in ["", "@2", "1,x@1", "1@-1"]:
        with pytest.raises(ValueError):
            parse_beta(bad)


def test_beta_polynomial():
    beta = BETAS[2]
    assert beta.degree == 6
    assert beta.evaluate(1) == 0
    assert not beta.is_zero()
    assert BetaPoly((0, 0)).is_zero()


def test_report_json():
    reference = modular_xy(A, CURVE, 8)
    report = verify_logalg1a(A.with_coefficient(5, 2), CURVE, 8, reference)
    found = report.to_json()
    assert found["identity"] == "logalg1a"
    assert found["holds"] is False
    assert found["mismatch"]["exponent"] == 5
    assert found["mismatch"]["label"] == "Phi"
    assert "elapsed" not in found


@pytest.mark.slow
@pytest.mark.parametrize("verify", [verify_logalg1a, verify_wp_identities], ids=["logalg1a", "wp"])
def test_identities_to_degree_30(verify):
    assert verify(A, CURVE, 30).holds


@pytest.mark.slow
def test_honda_to_degree_30():
    assert verify_honda(A, 30).holds


@pytest.mark.slow
@pytest.mark.parametrize("beta", BETAS, ids=str)
def test_main_a_to_degree_20(beta):
    assert verify_main_a(beta, A, CURVE, 20).holds


@pytest.mark.slow
@pytest.mark.parametrize("beta", BETAS[:2], ids=str)
def test_main_b_to_degree_12(beta):
    assert verify_main_b(beta, A, CURVE, 12).holds
