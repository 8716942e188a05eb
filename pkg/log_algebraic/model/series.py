"""
Truncated power and Laurent series over an abstract coefficient ring.

A series knows its coefficients from `valuation` up to (not including) `prec`;
everything at exponent >= prec is unknown rather than zero, and every
operation returns the largest prec that the inputs justify. Coefficients are
stored densely. The variable tag is metadata only, except that mixing two
different tags is refused (`q` and `t` are treated as the same variable).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import (
    CompositionDomain,
    LogarithmicTerm,
    NotAUnit,
    NotReversible,
    RingMismatch,
)
from .rings import (
    CoefficientRing,
    QQ_RING,
    QQ_U,
    QQ_U_FRACTIONS,
    format_rational,
    to_fraction,
)

Coefficients = Union[Sequence[Any], Mapping[int, Any]]

_TOWER = [QQ_RING, QQ_U, QQ_U_FRACTIONS]
_SAME_VARIABLE = [{"q", "t"}]


@dataclass(frozen=True, repr=False)
class TruncatedSeries:
    ring: CoefficientRing
    valuation: int
    coeffs: Tuple[Any, ...]
    prec: int
    var: str = "t"

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    @property
    def leading(self) -> Any:
        if self.is_zero():
            raise NotAUnit(0)
        return self.coeffs[0]

    def coefficient(self, e: int) -> Any:
        if e >= self.prec:
            raise ValueError(
                f"Coefficient of {self.var}^{e} is unknown (series is O({self.var}^{self.prec}))"
            )
        if e < self.valuation:
            return self.ring.zero
        return self.coeffs[e - self.valuation]

    def __getitem__(self, e: int) -> Any:
        return self.coefficient(e)

    def items(self):
        """(exponent, coefficient) pairs for the nonzero known coefficients."""
        for (i, c) in enumerate(self.coeffs):
            if not self.ring.is_zero(c):
                yield (self.valuation + i, c)

    def integrate(self) -> "TruncatedSeries":
        return ps_integrate(self)

    def __neg__(self) -> "TruncatedSeries":
        return _with_coeffs(self, self.valuation, [-c for c in self.coeffs], self.prec)

    def __add__(self, other: Any) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return ps_add(self, other)
        return _add_constant(self, self.ring.convert(other))

    __radd__ = __add__

    def __sub__(self, other: Any) -> "TruncatedSeries":
        return self + (-other)

    def __rsub__(self, other: Any) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other: Any) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return ps_mul(self, other)
        return ps_scalar(self, self.ring.convert(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return ps_div(self, other)
        return ps_scalar(self, self.ring.inverse(self.ring.convert(other)))

    def __rtruediv__(self, other: Any) -> "TruncatedSeries":
        return ps_scalar(ps_inv(self), self.ring.convert(other))

    def __pow__(self, n: int) -> "TruncatedSeries":
        return ps_pow(self, n)

    def __call__(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        return ps_compose(self, inner)

    def __str__(self) -> str:
        return format_series(self)

    def __repr__(self) -> str:
        return f"TruncatedSeries[{self.ring}]({self})"


# ------------------------------------------------------------------------------
# Construction
# ------------------------------------------------------------------------------


def make_series(
    ring: CoefficientRing,
    valuation: int,
    coeffs: Sequence[Any],
    prec: int,
    var: str = "t",
) -> TruncatedSeries:
    """
    Normalizing constructor: drops coefficients at or beyond prec, pads with
    zeros up to prec and strips leading zeros.
    """
    size = max(prec - valuation, 0)
    dense = list(coeffs[:size])
    dense.extend([ring.zero] * (size - len(dense)))
    for (i, c) in enumerate(dense):
        if not ring.is_zero(c):
            return TruncatedSeries(ring, valuation + i, tuple(dense[i:]), prec, var)
    return TruncatedSeries(ring, prec, (), prec, var)


def series_from_coefficients(
    ring: CoefficientRing,
    coeffs: Coefficients,
    prec: int,
    *,
    valuation: int = 0,
    var: str = "t",
) -> TruncatedSeries:
    """
    Build a series from a list (starting at `valuation`) or from a mapping
    exponent -> coefficient. Coefficients are converted into `ring`.
    """
    if isinstance(coeffs, Mapping):
        if len(coeffs) == 0:
            return zero_series(ring, prec, var)
        low = min(min(coeffs), prec)
        dense = [ring.zero] * max(prec - low, 0)
        for (e, c) in coeffs.items():
            if e < prec:
                dense[e - low] = ring.convert(c)
        return make_series(ring, low, dense, prec, var)
    return make_series(ring, valuation, [ring.convert(c) for c in coeffs], prec, var)


def zero_series(ring: CoefficientRing, prec: int, var: str = "t") -> TruncatedSeries:
    return TruncatedSeries(ring, prec, (), prec, var)


def constant(ring: CoefficientRing, c: Any, prec: int, var: str = "t") -> TruncatedSeries:
    return make_series(ring, 0, [ring.convert(c)], prec, var)


def monomial(
    ring: CoefficientRing, c: Any, e: int, prec: int, var: str = "t"
) -> TruncatedSeries:
    return make_series(ring, e, [ring.convert(c)], prec, var)


def gen(ring: CoefficientRing, prec: int, var: str = "t") -> TruncatedSeries:
    return monomial(ring, 1, 1, prec, var)


def _with_coeffs(
    s: TruncatedSeries, valuation: int, coeffs: Sequence[Any], prec: int
) -> TruncatedSeries:
    return make_series(s.ring, valuation, coeffs, prec, s.var)


# ------------------------------------------------------------------------------
# Rings and variables
# ------------------------------------------------------------------------------


def common_ring(left: CoefficientRing, right: CoefficientRing) -> CoefficientRing:
    """ℚ coerces into everything; ℚ[u] coerces into ℚ(u); nothing else mixes."""
    if left == right:
        return left
    if left == QQ_RING:
        return right
    if right == QQ_RING:
        return left
    if left in _TOWER and right in _TOWER:
        return max(left, right, key=_TOWER.index)
    raise RingMismatch(str(left), str(right))


def common_var(left: str, right: str) -> str:
    if left == right or {left, right} in _SAME_VARIABLE:
        return left
    raise RingMismatch(f"series in {left}", f"series in {right}")


def change_ring(s: TruncatedSeries, ring: CoefficientRing) -> TruncatedSeries:
    if s.ring == ring:
        return s
    return make_series(ring, s.valuation, [ring.convert(c) for c in s.coeffs], s.prec, s.var)


def map_coefficients(
    s: TruncatedSeries, fn: Callable[[Any], Any], ring: CoefficientRing
) -> TruncatedSeries:
    return make_series(ring, s.valuation, [fn(c) for c in s.coeffs], s.prec, s.var)


def with_var(s: TruncatedSeries, var: str) -> TruncatedSeries:
    return TruncatedSeries(s.ring, s.valuation, s.coeffs, s.prec, var)


def _align(a: TruncatedSeries, b: TruncatedSeries):
    var = common_var(a.var, b.var)
    ring = common_ring(a.ring, b.ring)
    return (change_ring(a, ring), change_ring(b, ring), ring, var)


# ------------------------------------------------------------------------------
# Dense truncated list arithmetic
# ------------------------------------------------------------------------------


def _mul_trunc(ring: CoefficientRing, a: Sequence[Any], b: Sequence[Any], n: int) -> List[Any]:
    out = [ring.zero] * n
    nonzero_b = [(j, c) for (j, c) in enumerate(b[:n]) if c]
    for (i, ai) in enumerate(a[:n]):
        if not ai:
            continue
        for (j, bj) in nonzero_b:
            k = i + j
            if k >= n:
                break
            out[k] = out[k] + ai * bj
    return out


def _inv_trunc(ring: CoefficientRing, a: Sequence[Any], n: int) -> List[Any]:
    if n <= 0:
        return []
    inv0 = ring.inverse(a[0])
    out = [ring.zero] * n
    out[0] = inv0
    nonzero_a = [(j, c) for (j, c) in enumerate(a[1:n], 1) if c]
    for k in range(1, n):
        acc = ring.zero
        for (j, aj) in nonzero_a:
            if j > k:
                break
            acc = acc + aj * out[k - j]
        out[k] = -(inv0 * acc)
    return out


def _pow_trunc(ring: CoefficientRing, a: Sequence[Any], k: int, n: int) -> List[Any]:
    out = [ring.one] + [ring.zero] * (n - 1)
    base = list(a[:n])
    while k > 0:
        if k & 1:
            out = _mul_trunc(ring, out, base, n)
        k >>= 1
        if k:
            base = _mul_trunc(ring, base, base, n)
    return out


def _compose_trunc(ring: CoefficientRing, f: Sequence[Any], g: Sequence[Any], n: int) -> List[Any]:
    """f(g) mod t^n for dense lists from exponent 0, with g[0] = 0."""
    out = [ring.zero] * n
    for c in reversed(f[:n]):
        out = _mul_trunc(ring, out, g, n)
        out[0] = out[0] + c
    return out


def _absolute(s: TruncatedSeries, n: int) -> List[Any]:
    """Coefficients of exponents 0..n-1 (valuation >= 0), zero-padded past prec."""
    return [
        s.coefficient(e) if e < s.prec else s.ring.zero for e in range(n)
    ]


# ------------------------------------------------------------------------------
# Arithmetic
# ------------------------------------------------------------------------------


def ps_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a, b, ring, var = _align(a, b)
    prec = min(a.prec, b.prec)
    v = min(a.valuation, b.valuation)
    if v >= prec:
        return zero_series(ring, prec, var)
    coeffs = [a.coefficient(e) + b.coefficient(e) for e in range(v, prec)]
    return make_series(ring, v, coeffs, prec, var)


def ps_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return ps_add(a, -b)


def ps_scalar(s: TruncatedSeries, c: Any) -> TruncatedSeries:
    return _with_coeffs(s, s.valuation, [c * x for x in s.coeffs], s.prec)


def _add_constant(s: TruncatedSeries, c: Any) -> TruncatedSeries:
    if s.prec <= 0:
        return s
    v = min(s.valuation, 0)
    coeffs = [s.coefficient(e) for e in range(v, s.prec)]
    coeffs[-v] = coeffs[-v] + c
    return _with_coeffs(s, v, coeffs, s.prec)


def ps_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a, b, ring, var = _align(a, b)
    v = a.valuation + b.valuation
    prec = min(a.prec + b.valuation, b.prec + a.valuation)
    n = prec - v
    coeffs = _mul_trunc(ring, a.coeffs, b.coeffs, n) if n > 0 else []
    return make_series(ring, v, coeffs, prec, var)


def ps_inv(s: TruncatedSeries) -> TruncatedSeries:
    if s.is_zero():
        raise NotAUnit(0)
    n = len(s.coeffs)
    try:
        coeffs = _inv_trunc(s.ring, s.coeffs, n)
    except NotAUnit:
        raise NotAUnit(s.ring.format(s.leading)) from None
    return _with_coeffs(s, -s.valuation, coeffs, -s.valuation + n)


def ps_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return ps_mul(a, ps_inv(b))


def ps_pow(s: TruncatedSeries, n: int) -> TruncatedSeries:
    if n < 0:
        return ps_pow(ps_inv(s), -n)
    result = constant(s.ring, 1, s.prec - s.valuation, s.var)
    base = s
    while n > 0:
        if n & 1:
            result = ps_mul(result, base)
        n >>= 1
        if n:
            base = ps_mul(base, base)
    return result


# ------------------------------------------------------------------------------
# Composition and reversion
# ------------------------------------------------------------------------------


def composition_prec(outer: TruncatedSeries, inner: TruncatedSeries) -> int:
    """
    Precision of outer(inner): the unknown tail of outer starts at
    t^(prec_f * w); a term f_n g^n with n != 0 is only known up to
    t^(n*w + prec_g - w).
    """
    w = inner.valuation
    bound = outer.prec * w
    for (e, _) in outer.items():
        if e != 0:
            bound = min(bound, e * w + inner.prec - w)
    return bound


def ps_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    if inner.valuation < 1:
        raise CompositionDomain(inner.valuation)
    ring = common_ring(outer.ring, inner.ring)
    outer = change_ring(outer, ring)
    inner = change_ring(inner, ring)
    var = inner.var
    w = inner.valuation
    prec = composition_prec(outer, inner)

    if outer.is_zero():
        return zero_series(ring, prec, var)
    lo = outer.valuation
    if inner.is_zero():
        if lo < 0:
            raise NotAUnit(0, "inner series")
        return make_series(ring, 0, [outer.coefficient(0)] if lo == 0 else [], prec, var)

    # Horner in g over the exponents of outer, relative to g^lo = t^(lo*w) h^lo
    n = prec - lo * w
    if n <= 0:
        return zero_series(ring, prec, var)
    h = list(inner.coeffs[:n])
    h.extend([ring.zero] * (n - len(h)))
    g = ([ring.zero] * w + h)[:n]
    top = min(outer.prec, -(-prec // w))
    acc = [ring.zero] * n
    for e in reversed(range(lo, top)):
        acc = _mul_trunc(ring, acc, g, n)
        acc[0] = acc[0] + outer.coefficient(e)
    if lo != 0:
        base = h if lo > 0 else _inv_trunc(ring, h, n)
        acc = _mul_trunc(ring, _pow_trunc(ring, base, abs(lo), n), acc, n)
    return make_series(ring, lo * w, acc, prec, var)


def _check_reversible(s: TruncatedSeries) -> None:
    if s.valuation != 1:
        raise NotReversible(s.valuation)


def ps_reverse(s: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse by Newton iteration, doubling the precision each step."""
    _check_reversible(s)
    ring = s.ring
    p = s.prec
    f = _absolute(s, p)
    df = [c * e for (e, c) in enumerate(f)][1:]
    r = [ring.zero, ring.inverse(s.leading)][:p]
    k = len(r)
    while k < p:
        k = min(2 * k, p)
        r = r + [ring.zero] * (k - len(r))
        err = _compose_trunc(ring, f[:k], r, k)
        err[1] = err[1] - ring.one
        slope = _compose_trunc(ring, df[:k], r, k)
        step = _mul_trunc(ring, err, _inv_trunc(ring, slope, k), k)
        r = [x - y for (x, y) in zip(r, step)]
    return make_series(ring, 0, r, p, s.var)


def ps_reverse_lagrange(s: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse by Lagrange inversion: [t^n] = (1/n) [t^(n-1)] (t/s)^n."""
    _check_reversible(s)
    ring = s.ring
    p = s.prec
    n = p - 1
    q = _inv_trunc(ring, s.coeffs, n)
    out = [ring.zero] * p
    q_pow = [ring.one] + [ring.zero] * (n - 1)
    for k in range(1, p):
        q_pow = _mul_trunc(ring, q_pow, q, n)
        out[k] = ring.divide_by_integer(q_pow[k - 1], k)
    return make_series(ring, 0, out, p, s.var)


# ------------------------------------------------------------------------------
# Calculus
# ------------------------------------------------------------------------------


def ps_derive(s: TruncatedSeries) -> TruncatedSeries:
    coeffs = [c * (s.valuation + i) for (i, c) in enumerate(s.coeffs)]
    return _with_coeffs(s, s.valuation - 1, coeffs, s.prec - 1)


def ps_integrate(s: TruncatedSeries) -> TruncatedSeries:
    """Antiderivative with zero constant term."""
    coeffs = []
    for (i, c) in enumerate(s.coeffs):
        e = s.valuation + i
        if e == -1:
            if not s.ring.is_zero(c):
                raise LogarithmicTerm(s.ring.format(c))
            coeffs.append(s.ring.zero)
        else:
            coeffs.append(s.ring.divide_by_integer(c, e + 1))
    if s.is_zero():
        return zero_series(s.ring, s.prec + 1, s.var)
    return _with_coeffs(s, s.valuation + 1, coeffs, s.prec + 1)


# ------------------------------------------------------------------------------
# Utilities
# ------------------------------------------------------------------------------


def scale(s: TruncatedSeries, c: Any, ring: Optional[CoefficientRing] = None) -> TruncatedSeries:
    """s(c*t); the result lives in `ring` (default: the ring of s)."""
    ring = s.ring if ring is None else ring
    s = change_ring(s, ring)
    c = ring.convert(c)
    if s.is_zero():
        return s
    step = c if s.valuation >= 0 else ring.inverse(c)
    power = ring.one
    for _ in range(abs(s.valuation)):
        power = power * step
    coeffs = []
    for x in s.coeffs:
        coeffs.append(x * power)
        power = power * c
    return make_series(ring, s.valuation, coeffs, s.prec, s.var)


def shift(s: TruncatedSeries, k: int) -> TruncatedSeries:
    """t^k * s"""
    return TruncatedSeries(s.ring, s.valuation + k, s.coeffs, s.prec + k, s.var)


def truncate(s: TruncatedSeries, prec: int) -> TruncatedSeries:
    if prec >= s.prec:
        return s
    return _with_coeffs(s, s.valuation, s.coeffs, prec)


def compare_series(
    lhs: TruncatedSeries, rhs: TruncatedSeries, upto: Optional[int] = None
) -> Optional[Tuple[int, Any, Any]]:
    """
    First exponent below min(prec, upto) where the two series differ, with
    both coefficients; None when they agree on the common known range.
    """
    lhs, rhs, ring, _ = _align(lhs, rhs)
    stop = min(lhs.prec, rhs.prec)
    if upto is not None:
        stop = min(stop, upto)
    for e in range(min(lhs.valuation, rhs.valuation), stop):
        a, b = lhs.coefficient(e), rhs.coefficient(e)
        if not ring.close(a, b):
            return (e, a, b)
    return None


# ------------------------------------------------------------------------------
# Printing and line codec
# ------------------------------------------------------------------------------


def _monomial_text(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def format_series(s: TruncatedSeries, show_prec: bool = True) -> str:
    """Ascending terms, e.g. `t - t^2 - 1/3*t^3 + O(t^8)`."""
    parts: List[str] = []
    for (e, c) in s.items():
        mono = _monomial_text(s.var, e)
        if s.ring == QQ_RING:
            mag = abs(c)
            if mono == "":
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            sign = "-" if c < 0 else "+"
        else:
            text = s.ring.format(c)
            if mono == "":
                body = text
            elif text == "1":
                body = mono
            else:
                body = f"{text if s.ring.is_atomic(c) else '(' + text + ')'}*{mono}"
            sign = "+"
        if parts:
            parts.append(f"{sign} {body}")
        else:
            parts.append(body if sign == "+" else f"-{body}")
    if show_prec:
        tail = f"O({s.var})" if s.prec == 1 else f"O({s.var}^{s.prec})"
        parts.append(f"+ {tail}" if parts else tail)
    return " ".join(parts) if parts else "0"


def to_line(s: TruncatedSeries) -> str:
    """`valuation;prec;c0,c1,...` for series over ℚ."""
    if s.ring != QQ_RING:
        raise RingMismatch(str(s.ring), str(QQ_RING))
    return f"{s.valuation};{s.prec};" + ",".join(str(c) for c in s.coeffs)


def from_line(line: str, var: str = "t") -> TruncatedSeries:
    parts = line.strip().split(";")
    if len(parts) != 3:
        raise ValueError(f"Cannot parse as series: '{line}'")
    valuation, prec = int(parts[0]), int(parts[1])
    coeffs = [to_fraction(Fraction(c)) for c in parts[2].split(",") if c.strip()]
    return make_series(QQ_RING, valuation, coeffs, prec, var)


# ------------------------------------------------------------------------------
# Series as a field of point coordinates
# ------------------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesField(CoefficientRing):
    """
    Laurent series over `base` as the coordinate field of points. Constants
    are embedded with precision `prec`.
    """

    base: CoefficientRing = QQ_RING
    prec: int = 20
    var: str = "t"
    is_field: bool = True

    @property
    def name(self) -> str:  # type: ignore[override]
        return f"{self.base}(({self.var}))"

    @property
    def zero(self) -> TruncatedSeries:
        return zero_series(self.base, self.prec, self.var)

    @property
    def one(self) -> TruncatedSeries:
        return constant(self.base, 1, self.prec, self.var)

    def convert(self, c: Any) -> TruncatedSeries:
        if isinstance(c, TruncatedSeries):
            return change_ring(c, common_ring(self.base, c.ring))
        return constant(self.base, c, self.prec, self.var)

    def is_zero(self, a: Any) -> bool:
        return a.is_zero()

    def inverse(self, a: TruncatedSeries) -> TruncatedSeries:
        return ps_inv(a)

    def format(self, a: TruncatedSeries) -> str:
        return format_series(a)
