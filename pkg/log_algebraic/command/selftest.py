"""
The acceptance suite as a pass/fail matrix. Below FULL_PREC only the fast
subset runs: golden series, the one-variable identities, the mutation check
and the cheap numerics.
"""

from dataclasses import dataclass
from fractions import Fraction
import sys
from time import perf_counter
from typing import Any, Callable, Dict, List, Optional, TextIO, Tuple

import mpmath

from ..adapter.logging import get_logger
from ..model.character import cubic_character, gauss_sum
from ..model.config import BUILTIN_CURVES, Config
from ..model.errors import LogAlgebraicError
from ..model.formal_group import wp_series
from ..model.identity import (
    BetaPoly,
    IdentityReport,
    verify_honda,
    verify_logalg1a,
    verify_main_a,
    verify_main_b,
    verify_wp_identities,
)
from ..model.lvalues import l1_rapid
from ..model.newform import NewformCoeffs, eta_product_coeffs
from ..model.parametrization import modular_xy
from ..model.special_values import EXAMPLES, run_example

LOGGER = get_logger(__name__)

FULL_PREC = 20

# index of the coefficient corrupted by the mutation check
MUTATED_INDEX = 5

GOLDEN_COEFFICIENTS = [1, -2, -1, 2, 1, 2, -2, 0, -2, -2]
GOLDEN_WP = {2: Fraction(31, 15), 4: Fraction(2501, 756)}
GOLDEN_X = [Fraction(1), Fraction(2), Fraction(11, 3), Fraction(5), Fraction(8), Fraction(1), Fraction(7)]

MAIN_A_BETAS = [
    BetaPoly((0, 1)),
    BetaPoly((0, 1, -1)),
    BetaPoly((0, 2, 2, -4, -4, 2, 2)),
]
MAIN_B_BETAS = [BetaPoly((0, 1)), BetaPoly((0, 1, -1))]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""
    elapsed: float = 0.0

    def to_json(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}

    def __str__(self) -> str:
        mark = "pass" if self.passed else "FAIL"
        text = f"[{mark}] {self.name.ljust(28)} ({self.elapsed:.2f}s)"
        return f"{text}  {self.detail}" if self.detail else text


def main(
    config: Config, prec: Optional[int] = None, target: Optional[TextIO] = sys.stdout
) -> List[Check]:
    prec = config.prec if prec is None else prec
    fast = prec < FULL_PREC
    LOGGER.info(f"Start: selftest at prec {prec}{' (fast)' if fast else ''}")
    checks = [_run(name, fn) for (name, fn) in suite(config, prec, fast)]
    failed = [c for c in checks if not c.passed]
    LOGGER.info(f"End: selftest: {len(checks) - len(failed)} passed, {len(failed)} failed")
    if target is not None:
        for check in checks:
            print(check, file=target)
        print(f"{len(checks) - len(failed)} passed, {len(failed)} failed", file=target)
    return checks


def _run(name: str, fn: Callable[[], Tuple[bool, str]]) -> Check:
    start = perf_counter()
    try:
        (passed, detail) = fn()
    except LogAlgebraicError as e:
        LOGGER.error(f"{name}: {e.name}: {e}")
        (passed, detail) = (False, f"{e.name}: {e}")
    return Check(name, passed, detail, perf_counter() - start)


def _identity(report: IdentityReport) -> Tuple[bool, str]:
    return (report.holds, "" if report.holds else str(report.mismatch))


def suite(config: Config, prec: int, fast: bool) -> List[Tuple[str, Callable[[], Tuple[bool, str]]]]:
    spec = BUILTIN_CURVES["11"]
    curve = spec.curve()
    a = eta_product_coeffs(spec.conductor, max(prec, 30, config.terms) + 16)

    checks: List[Tuple[str, Callable[[], Tuple[bool, str]]]] = [
        ("golden coefficients", lambda: _golden_coefficients(a)),
        ("golden wp", lambda: _golden_wp(curve)),
        ("golden X", lambda: _golden_x(a, curve)),
        ("logalg1a", lambda: _identity(verify_logalg1a(a, curve, prec))),
        ("wp identities", lambda: _identity(verify_wp_identities(a, curve, prec))),
        ("mutation of a_5", lambda: _mutation(a, curve, prec)),
        ("gauss sum norm", _gauss_sum_norm),
        ("L(E, 1)", lambda: _l1(a, config)),
    ]
    if fast:
        checks.append(("main-a beta = u", lambda: _identity(verify_main_a(MAIN_A_BETAS[0], a, curve, prec))))
        return checks

    checks.extend(
        (f"main-a beta = {beta}", lambda beta=beta: _identity(verify_main_a(beta, a, curve, 20)))
        for beta in MAIN_A_BETAS
    )
    checks.extend(
        (f"main-b beta = {beta}", lambda beta=beta: _identity(verify_main_b(beta, a, curve, 12)))
        for beta in MAIN_B_BETAS
    )
    checks.append(("honda to degree 30", lambda: _identity(verify_honda(a, 30))))
    checks.extend(
        (f"example {which}", lambda which=which: _example(which, config)) for which in EXAMPLES
    )
    return checks


def _golden_coefficients(a: NewformCoeffs) -> Tuple[bool, str]:
    found = [a[n] for n in range(1, len(GOLDEN_COEFFICIENTS) + 1)]
    return (found == GOLDEN_COEFFICIENTS, f"a_1 .. a_10 = {found}")


def _golden_wp(curve) -> Tuple[bool, str]:
    wp = wp_series(curve.g2, curve.g3, 6)
    found = {e: wp.coefficient(e) for e in GOLDEN_WP}
    return (found == GOLDEN_WP and wp.coefficient(-2) == 1, f"z^2, z^4: {found[2]}, {found[4]}")


def _golden_x(a: NewformCoeffs, curve) -> Tuple[bool, str]:
    x = modular_xy(a, curve, 6).x
    found = [x.coefficient(e) for e in range(-2, -2 + len(GOLDEN_X))]
    return (found == GOLDEN_X, "X = " + ", ".join(str(c) for c in found))


def _mutation(a: NewformCoeffs, curve, prec: int) -> Tuple[bool, str]:
    reference = modular_xy(a, curve, max(prec, 5))
    mutated = a.with_coefficient(MUTATED_INDEX, a[MUTATED_INDEX] + 1)
    report = verify_logalg1a(mutated, curve, prec, reference)
    if report.holds or report.mismatch is None:
        return (False, "corrupted coefficient went unnoticed")
    return (
        report.mismatch.exponent == MUTATED_INDEX,
        f"logalg1a fails at t^{report.mismatch.exponent}",
    )


def _gauss_sum_norm() -> Tuple[bool, str]:
    psi = cubic_character(7)
    g = gauss_sum(psi)
    norm = g * g.conjugate()
    return (norm == 7, f"|g(psi)|^2 = {norm}")


def _l1(a: NewformCoeffs, config: Config) -> Tuple[bool, str]:
    with mpmath.workdps(config.dps):
        value = l1_rapid(a, 1, 400, conductor=11).value
        return (
            abs(value - mpmath.mpf("0.2538418608")) < 1e-9,
            f"L(E, 1) = {mpmath.nstr(value, 12)}",
        )


def _example(which: str, config: Config) -> Tuple[bool, str]:
    report = run_example(which, dps=config.dps)
    failure = report.first_failure
    return (report.ok, report.exact_result if failure is None else f"first failure: {failure}")
