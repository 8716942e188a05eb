"""
Executable log-algebraic identities. Each verifier expands both sides as
truncated series (over ℚ, ℚ[u] or ℚ(u)) and compares them coefficientwise,
returning an IdentityReport with the first mismatch, if any.

Verifiers accept an optional `reference` parametrization. The modular side
(Phi, X, Y) is then taken from the reference rather than recomputed from
`a`, so that a corrupted coefficient sequence is compared against the true
parametrization of the curve.
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction
from random import Random
from time import perf_counter
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..adapter.logging import get_logger
from .curve import CurveModel
from .errors import DegenerateSum
from .formal_group import (
    formal_log_exp,
    formal_xy,
    group_law,
    invariant_differential,
    mult_by_m,
    wp_derivative_half,
    wp_series,
)
from .newform import NewformCoeffs
from .parametrization import (
    ParametrizationSeries,
    honda_group_law,
    lambda_series,
    modular_xy,
)
from .point import AffinePoint, Infinity, point_sum
from .rings import QQ_RING, QQ_U, QQ_U_FRACTIONS, CoefficientRing, format_polynomial
from .series import (
    SeriesField,
    TruncatedSeries,
    change_ring,
    common_ring,
    compare_series,
    gen,
    ps_compose,
    ps_derive,
    scale,
    series_from_coefficients,
    shift,
    truncate,
    with_var,
    zero_series,
)

LOGGER = get_logger(__name__)

IDENTITIES = [
    "logalg1a",
    "wp",
    "main-a",
    "main-b",
    "xy-phi",
    "phi-differential",
    "phi-morphism",
    "honda",
]

# extra precision carried by the points P(u^k t) in the main (b) comparison
POINT_MARGIN = 4

SPECIALIZATION_VALUES = [
    Fraction(2),
    Fraction(-3),
    Fraction(1, 2),
    Fraction(5, 3),
    Fraction(-7, 4),
    Fraction(3),
    Fraction(-1, 3),
]


@dataclass(frozen=True)
class BetaPoly:
    """beta = sum m_k u^k with integer m_k; `coeffs[k]` is m_k."""

    coeffs: Tuple[int, ...]

    def terms(self) -> List[Tuple[int, int]]:
        return [(k, m) for (k, m) in enumerate(self.coeffs) if m != 0]

    @property
    def degree(self) -> int:
        return max((k for (k, _) in self.terms()), default=-1)

    def is_zero(self) -> bool:
        return len(self.terms()) == 0

    def evaluate(self, u: Any) -> Any:
        return sum((m * u**k for (k, m) in self.terms()), 0 * u)

    def polynomial(self):
        return QQ_U.from_coefficients(dict(self.terms()))

    def __str__(self) -> str:
        return format_polynomial({k: Fraction(m) for (k, m) in self.terms()})


def parse_beta(spec: str) -> BetaPoly:
    """`m_a,m_(a+1),...@a`: consecutive coefficients starting at power a (default 0)."""
    body, _, start = spec.strip().partition("@")
    offset = int(start) if start.strip() else 0
    if offset < 0:
        raise ValueError(f"Cannot parse beta: negative start power in '{spec}'")
    try:
        values = [int(v) for v in body.split(",") if v.strip()]
    except ValueError:
        raise ValueError(f"Cannot parse beta: '{spec}'") from None
    if len(values) == 0:
        raise ValueError(f"Cannot parse beta: no coefficients in '{spec}'")
    return BetaPoly(tuple([0] * offset + values))


@dataclass(frozen=True)
class Mismatch:
    exponent: int
    lhs: str
    rhs: str
    label: str = ""

    def __str__(self) -> str:
        where = f"{self.label}: " if self.label else ""
        return f"{where}coefficient of t^{self.exponent}: {self.lhs} != {self.rhs}"


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    prec: int
    holds: bool
    ring: str = "QQ"
    mismatch: Optional[Mismatch] = None
    detail: str = ""
    elapsed: float = field(default=0.0, compare=False)

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else f"fails at t^{self.mismatch.exponent}" if self.mismatch else "fails"

    def to_json(self) -> Dict[str, Any]:
        """Without the elapsed time, so that repeated runs compare equal."""
        return {
            "identity": self.identity,
            "prec": self.prec,
            "ring": self.ring,
            "holds": self.holds,
            "verdict": self.verdict,
            "mismatch": None
            if self.mismatch is None
            else {
                "label": self.mismatch.label,
                "exponent": self.mismatch.exponent,
                "lhs": self.mismatch.lhs,
                "rhs": self.mismatch.rhs,
            },
            "detail": self.detail,
        }

    def __str__(self) -> str:
        text = f"{self.identity} [{self.ring}, O(t^{self.prec})]: {self.verdict}"
        if self.mismatch is not None:
            text = f"{text}\n    {self.mismatch}"
        if self.detail:
            text = f"{text}\n    {self.detail}"
        return text


def _timed(fn: Callable[..., IdentityReport]) -> Callable[..., IdentityReport]:
    def _run(*args, **kwargs) -> IdentityReport:
        start = perf_counter()
        report = replace(fn(*args, **kwargs), elapsed=perf_counter() - start)
        LOGGER.info(f"{report.identity} to O(t^{report.prec}): {report.verdict}")
        return report

    _run.__name__ = fn.__name__
    _run.__doc__ = fn.__doc__
    return _run


def _compare(
    identity: str,
    pairs: Sequence[Tuple[str, TruncatedSeries, TruncatedSeries]],
    prec: int,
    detail: str = "",
) -> IdentityReport:
    """Compare each (label, lhs, rhs) below t^prec; the first mismatch wins."""
    ring: CoefficientRing = QQ_RING
    checked = prec
    for (label, lhs, rhs) in pairs:
        ring = common_ring(lhs.ring, rhs.ring)
        checked = min(checked, lhs.prec, rhs.prec)
        LOGGER.debug(f"{identity} {label}: lhs O(t^{lhs.prec}), rhs O(t^{rhs.prec})")
        found = compare_series(lhs, rhs, prec)
        if found is not None:
            (e, a, b) = found
            mismatch = Mismatch(e, ring.format(a), ring.format(b), label)
            return IdentityReport(identity, prec, False, str(ring), mismatch, detail)
    if checked < prec:
        detail = (detail + "; " if detail else "") + f"compared to O(t^{checked})"
    return IdentityReport(identity, prec, True, str(ring), None, detail)


def _reference(
    a: NewformCoeffs,
    curve: CurveModel,
    prec: int,
    reference: Optional[ParametrizationSeries],
) -> ParametrizationSeries:
    if reference is not None and reference.prec >= prec:
        return reference
    return modular_xy(a, curve, max(prec, 5))


# ------------------------------------------------------------------------------
# Twisted harmonic series
# ------------------------------------------------------------------------------


def twisted_harmonic(beta: BetaPoly, a: NewformCoeffs, prec: int) -> TruncatedSeries:
    """sum_{n < prec} a_n beta(u^n) / n t^n over ℚ[u]"""
    coeffs = {}
    for (n, an) in a.items():
        if n >= prec or an == 0:
            continue
        coeffs[n] = QQ_U.from_coefficients(
            {k * n: Fraction(m * an, n) for (k, m) in beta.terms()}
        )
    return series_from_coefficients(QQ_U, coeffs, prec)


def twisted_harmonic_by_rearrangement(
    beta: BetaPoly, a: NewformCoeffs, prec: int
) -> TruncatedSeries:
    """sum_k m_k lambda(u^k t)"""
    lam = lambda_series(a, prec)
    total = zero_series(QQ_U, prec)
    for (k, m) in beta.terms():
        total = total + scale(lam, QQ_U.gen**k, QQ_U) * m
    return total


def specialize_twisted_harmonic(
    beta: BetaPoly, a: NewformCoeffs, prec: int, u: Fraction
) -> TruncatedSeries:
    """The twisted harmonic series with u replaced by a rational number."""
    return series_from_coefficients(
        QQ_RING,
        {n: Fraction(an, n) * beta.evaluate(u**n) for (n, an) in a.items() if n < prec},
        prec,
    )


# ------------------------------------------------------------------------------
# One-variable identities
# ------------------------------------------------------------------------------


@_timed
def verify_logalg1a(
    a: NewformCoeffs,
    curve: CurveModel,
    prec: int,
    reference: Optional[ParametrizationSeries] = None,
) -> IdentityReport:
    """exp(sum a_n t^n / n) = Phi(t)"""
    if prec < 2:
        raise ValueError(f"Precision must be at least 2, got {prec}")
    _, exp = formal_log_exp(curve, prec)
    lhs = ps_compose(exp, lambda_series(a, prec))
    rhs = _reference(a, curve, prec, reference).phi
    return _compare("logalg1a", [("Phi", lhs, rhs)], prec)


@_timed
def verify_wp_identities(
    a: NewformCoeffs,
    curve: CurveModel,
    prec: int,
    reference: Optional[ParametrizationSeries] = None,
) -> IdentityReport:
    """℘(lambda(t)) = X(t) and ℘'(lambda(t))/2 = Y(t)"""
    if prec < 3:
        raise ValueError(f"Precision must be at least 3, got {prec}")
    lam = lambda_series(a, prec + 4)
    wp = wp_series(curve.g2, curve.g3, prec)
    dwp = wp_derivative_half(curve.g2, curve.g3, prec)
    ps = _reference(a, curve, prec, reference)
    return _compare(
        "wp",
        [("X", ps_compose(wp, lam), ps.x), ("Y", ps_compose(dwp, lam), ps.y)],
        prec,
    )


@_timed
def verify_xy_phi(
    a: NewformCoeffs,
    curve: CurveModel,
    prec: int,
    reference: Optional[ParametrizationSeries] = None,
) -> IdentityReport:
    """X(t) = x(Phi(t)) and Y(t) = y(Phi(t))"""
    ps = _reference(a, curve, prec, reference)
    x, y = formal_xy(curve, prec)
    return _compare(
        "xy-phi",
        [("X", ps.x, ps_compose(x, ps.phi)), ("Y", ps.y, ps_compose(y, ps.phi))],
        prec,
    )


@_timed
def verify_phi_differential(
    a: NewformCoeffs,
    curve: CurveModel,
    prec: int,
    reference: Optional[ParametrizationSeries] = None,
) -> IdentityReport:
    """omega(Phi(t)) Phi'(t) = sum a_n t^(n-1)"""
    ps = _reference(a, curve, prec, reference)
    omega = invariant_differential(curve, prec)
    lhs = ps_compose(omega, ps.phi) * ps_derive(ps.phi)
    rhs = shift(a.q_series(prec + 1, var="t"), -1)
    return _compare("phi-differential", [("omega", lhs, rhs)], prec)


@_timed
def verify_morphism_differential(curve: CurveModel, k: int, prec: int) -> IdentityReport:
    """omega([k](t)) [k]'(t) = k omega(t)"""
    omega = invariant_differential(curve, prec)
    mult = mult_by_m(curve, k, prec + 1)
    lhs = ps_compose(omega, mult) * ps_derive(mult)
    return _compare(
        "morphism-differential", [(f"[{k}]", lhs, omega * k)], prec, detail=f"k = {k}"
    )


# ------------------------------------------------------------------------------
# Two-variable identities
# ------------------------------------------------------------------------------


def _line_samples(samples: int, seed: int) -> List[Tuple[Fraction, Fraction]]:
    rnd = Random(seed)
    return [
        (
            Fraction(rnd.randint(-9, 9) or 1, rnd.randint(1, 5)),
            Fraction(rnd.randint(-9, 9) or 1, rnd.randint(1, 5)),
        )
        for _ in range(samples)
    ]


@_timed
def verify_phi_morphism(
    a: NewformCoeffs,
    curve: CurveModel,
    prec: int,
    reference: Optional[ParametrizationSeries] = None,
    *,
    samples: int = 3,
    seed: int = 0,
) -> IdentityReport:
    """
    Phi(L(t1, t2)) = F(Phi(t1), Phi(t2)), checked on the lines
    (t1, t2) = (c1 t, c2 t) for random rationals c1, c2.
    """
    ps = _reference(a, curve, prec, reference)
    honda = honda_group_law(a, prec).law
    law = group_law(curve, prec)
    t = gen(QQ_RING, prec)
    pairs = []
    for (c1, c2) in _line_samples(samples, seed):
        lhs = ps_compose(ps.phi, honda.evaluate(t * c1, t * c2))
        rhs = law.evaluate(scale(ps.phi, c1), scale(ps.phi, c2))
        pairs.append((f"line ({c1}, {c2})", lhs, rhs))
    return _compare("phi-morphism", pairs, prec, detail=f"{samples} random lines")


@_timed
def verify_honda(a: NewformCoeffs, prec: int) -> IdentityReport:
    """All coefficients of the Honda group law are integers."""
    honda = honda_group_law(a, prec)
    if honda.integral:
        return IdentityReport("honda", prec, True, "ZZ", detail="all coefficients integral")
    (i, j, c) = min(honda.non_integral, key=lambda term: (term[0] + term[1], term[1]))
    mismatch = Mismatch(i + j, str(c), "an integer", f"t1^{i} t2^{j}")
    return IdentityReport("honda", prec, False, "ZZ", mismatch)


# ------------------------------------------------------------------------------
# Main identities
# ------------------------------------------------------------------------------


@_timed
def verify_main_a(
    beta: BetaPoly,
    a: NewformCoeffs,
    curve: CurveModel,
    prec: int,
    reference: Optional[ParametrizationSeries] = None,
    *,
    order: Optional[Sequence[int]] = None,
) -> IdentityReport:
    """
    exp(sum a_n beta(u^n) / n t^n) = sum_k [m_k](Phi(u^k t)), the sum taken
    with the formal group law. `order` permutes the summands.
    """
    if prec < 2:
        raise ValueError(f"Precision must be at least 2, got {prec}")
    _, exp = formal_log_exp(curve, prec)
    lhs = ps_compose(exp, twisted_harmonic(beta, a, prec))

    ps = _reference(a, curve, prec, reference)
    law = group_law(curve, prec)
    terms = beta.terms()
    if order is not None:
        terms = [terms[i] for i in order]
    summands = []
    for (k, m) in terms:
        g = truncate(ps_compose(mult_by_m(curve, m, prec), ps.phi), prec)
        summands.append(scale(g, QQ_U.gen**k, QQ_U))
    rhs = law.fold(summands) if summands else zero_series(QQ_U, prec)
    return _compare("main-a", [(f"beta = {beta}", lhs, rhs)], prec, detail=f"beta = {beta}")


def _main_b_sides(
    beta: BetaPoly,
    ps: ParametrizationSeries,
    curve: CurveModel,
    wp: TruncatedSeries,
    inner: TruncatedSeries,
    field: SeriesField,
    u: Any,
) -> Tuple[TruncatedSeries, TruncatedSeries]:
    base = field.base
    lhs = ps_compose(wp, change_ring(inner, base))
    terms = []
    for (k, m) in beta.terms():
        c = u**k
        terms.append((m, AffinePoint(scale(ps.x, c, base), scale(ps.y, c, base))))
    total = point_sum(terms, curve, field, check=False)
    if isinstance(total, Infinity):
        raise DegenerateSum(str(beta))
    return (lhs, with_var(total.x, "t"))


def main_b_sides(
    beta: BetaPoly,
    a: NewformCoeffs,
    curve: CurveModel,
    prec: int,
    reference: Optional[ParametrizationSeries] = None,
    *,
    u: Optional[Fraction] = None,
) -> Tuple[TruncatedSeries, TruncatedSeries]:
    """
    Both sides of main-b, ℘(...) and the x-coordinate of the point sum. Over
    ℚ(u) when `u` is None, otherwise over ℚ at the rational `u`.
    """
    if beta.is_zero():
        raise DegenerateSum(str(beta))
    ps = _reference(a, curve, prec + POINT_MARGIN, reference)
    wp = wp_series(curve.g2, curve.g3, prec)
    inner_prec = prec + 3
    if u is None:
        field = SeriesField(QQ_U_FRACTIONS, prec + POINT_MARGIN)
        inner = twisted_harmonic(beta, a, inner_prec)
        return _main_b_sides(beta, ps, curve, wp, inner, field, QQ_U_FRACTIONS.gen)
    field = SeriesField(QQ_RING, prec + POINT_MARGIN)
    inner = specialize_twisted_harmonic(beta, a, inner_prec, u)
    return _main_b_sides(beta, ps, curve, wp, inner, field, u)


@_timed
def verify_main_b(
    beta: BetaPoly,
    a: NewformCoeffs,
    curve: CurveModel,
    prec: int,
    reference: Optional[ParametrizationSeries] = None,
    *,
    mode: str = "exact",
    values: Optional[Iterable[Fraction]] = None,
) -> IdentityReport:
    """
    ℘(sum a_n beta(u^n) / n t^n) = x(sum_k m_k P(u^k t)) in ℚ(u)((t)), with
    P(t) = (X(t), Y(t)) and the sum taken on the curve. In `specialize` mode u
    runs over rational values instead.
    """
    if prec < 4:
        raise ValueError(f"Precision must be at least 4, got {prec}")
    if beta.is_zero():
        raise DegenerateSum(str(beta))
    if mode not in ("exact", "specialize"):
        raise ValueError(f"Unknown mode: {mode}")
    ps = _reference(a, curve, prec + POINT_MARGIN, reference)

    if mode == "exact":
        lhs, rhs = main_b_sides(beta, a, curve, prec, ps)
        return _compare("main-b", [(f"beta = {beta}", lhs, rhs)], prec, detail=f"beta = {beta}")

    pairs = []
    for u in values if values is not None else SPECIALIZATION_VALUES:
        lhs, rhs = main_b_sides(beta, a, curve, prec, ps, u=u)
        pairs.append((f"u = {u}", lhs, rhs))
    return _compare("main-b", pairs, prec, detail=f"beta = {beta}, specialized")
