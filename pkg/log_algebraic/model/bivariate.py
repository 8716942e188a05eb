"""
Two-variable formal group laws, stored as series in t2 whose coefficients are
series in t1, truncated at total degree `prec`.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Any, Iterator, List, Sequence, Tuple

from .errors import CompositionDomain
from .series import (
    TruncatedSeries,
    common_ring,
    constant,
    gen,
    ps_derive,
    ps_inv,
    ps_mul,
    truncate,
    zero_series,
)


@dataclass(frozen=True)
class FormalGroupLaw:
    """F(t1, t2) = sum over j of rows[j](t1) * t2^j; rows[j] is known to O(t1^(prec - j))."""

    rows: Tuple[TruncatedSeries, ...]
    prec: int

    @property
    def ring(self):
        return self.rows[0].ring

    def coefficient(self, i: int, j: int) -> Any:
        """Coefficient of t1^i t2^j (requires i + j < prec)."""
        if i + j >= self.prec:
            raise ValueError(f"t1^{i} t2^{j} is beyond total degree {self.prec}")
        return self.rows[j].coefficient(i)

    def terms(self) -> Iterator[Tuple[int, int, Any]]:
        for (j, row) in enumerate(self.rows):
            for (i, c) in row.items():
                yield (i, j, c)

    def non_integral(self) -> List[Tuple[int, int, Fraction]]:
        return [(i, j, c) for (i, j, c) in self.terms() if Fraction(c).denominator != 1]

    def evaluate(self, a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
        """
        F(a, b) for series a, b without constant term. Powers of a are shared
        by all rows; the outer sum is a Horner scheme in b.
        """
        wa = a.valuation
        wb = b.valuation
        if min(wa, wb) < 1:
            raise CompositionDomain(min(wa, wb))
        prec = min(self.prec * min(wa, wb), a.prec, b.prec)
        ring = common_ring(self.ring, common_ring(a.ring, b.ring))
        var = a.var

        powers = [constant(ring, 1, prec, var)]
        while len(powers) < self.prec and len(powers) * wa < prec:
            powers.append(truncate(ps_mul(powers[-1], a), prec))

        def _row_at_a(row: TruncatedSeries) -> TruncatedSeries:
            acc = zero_series(ring, prec, var)
            for (i, c) in row.items():
                if i < len(powers):
                    acc = acc + powers[i] * c
            return truncate(acc, row.prec * wa)

        result = zero_series(ring, prec, var)
        for (j, row) in reversed(list(enumerate(self.rows))):
            if j * wb >= prec:
                continue
            result = truncate(ps_mul(result, b), prec) + _row_at_a(row)
        return truncate(result, prec)

    def fold(self, items: Sequence[TruncatedSeries]) -> TruncatedSeries:
        """Left fold of the group law over `items`."""
        return reduce(self.evaluate, items)


def law_from_logarithm(log: TruncatedSeries) -> FormalGroupLaw:
    """
    F(t1, t2) = exp(log t1 + log t2) by Taylor expansion around log t1:
    F = sum_j D_j(t1) log(t2)^j with D_0 = t1 and
    D_j = D_{j-1}' / (j * log'(t1)).
    """
    prec = log.prec
    ring = log.ring
    dlog_inv = ps_inv(ps_derive(log))

    derivs = [gen(ring, prec, log.var)]
    for j in range(1, prec):
        derivs.append(ps_mul(ps_derive(derivs[-1]), dlog_inv) / j)

    log_powers = [constant(ring, 1, prec, log.var)]
    for _ in range(1, prec):
        log_powers.append(truncate(ps_mul(log_powers[-1], log), prec))

    rows = []
    for b in range(prec):
        row = zero_series(ring, prec - b, log.var)
        for j in range(b + 1):
            c = log_powers[j].coefficient(b)
            if not ring.is_zero(c):
                row = row + truncate(derivs[j], prec - b) * c
        rows.append(row)
    return FormalGroupLaw(rows=tuple(rows), prec=prec)
