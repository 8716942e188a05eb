"""
Fourier coefficients a_1, a_2, ... of a normalized weight-2 newform, from an
eta product, from the Hecke recursion on prime data, or from a file.
"""

from dataclasses import dataclass, field, replace
from math import gcd
from typing import Dict, List, Mapping, Optional, Tuple, Union

from sympy import primerange

from .errors import InsufficientPrimeData, InvalidEigenform, NoEtaProduct
from .rings import QQ_RING
from .series import TruncatedSeries, series_from_coefficients

# level -> {d: r_d} for f = q^s * prod_d prod_m (1 - q^(d m))^(r_d)
BUILTIN_ETA_PRODUCTS: Dict[int, Dict[int, int]] = {11: {1: 2, 11: 2}}


@dataclass(frozen=True)
class FromEtaProduct:
    factors: Tuple[Tuple[int, int], ...]

    def __str__(self):
        return "eta-product " + " ".join(f"{d}^{r}" for (d, r) in self.factors)


@dataclass(frozen=True)
class FromPrimes:
    primes: int

    def __str__(self):
        return f"hecke-recursion from {self.primes} primes"


@dataclass(frozen=True)
class FromFile:
    file_name: str

    def __str__(self):
        return f"file {self.file_name}"


Provenance = Union[FromEtaProduct, FromPrimes, FromFile]


@dataclass(frozen=True)
class NewformCoeffs:
    """a_n for 1 <= n < prec; `coeffs[0]` is a_1."""

    level: int
    coeffs: Tuple[int, ...]
    provenance: Provenance = field(default=FromPrimes(0), compare=False)

    @property
    def prec(self) -> int:
        return len(self.coeffs) + 1

    def __getitem__(self, n: int) -> int:
        if n < 1 or n >= self.prec:
            raise IndexError(f"a_{n} is not known (have a_1 .. a_{self.prec - 1})")
        return self.coeffs[n - 1]

    def items(self):
        return enumerate(self.coeffs, 1)

    def q_series(self, prec: Optional[int] = None, var: str = "q") -> TruncatedSeries:
        """f = sum a_n q^n to O(q^prec)."""
        prec = self.prec if prec is None else min(prec, self.prec)
        return series_from_coefficients(
            QQ_RING, {n: a for (n, a) in self.items() if n < prec}, prec, var=var
        )

    def truncated(self, prec: int) -> "NewformCoeffs":
        return replace(self, coeffs=self.coeffs[: max(prec - 1, 0)])

    def with_coefficient(self, n: int, value: int) -> "NewformCoeffs":
        """Copy with a_n replaced, not revalidated."""
        coeffs = list(self.coeffs)
        coeffs[n - 1] = value
        return replace(self, coeffs=tuple(coeffs))


# ------------------------------------------------------------------------------
# Eta products
# ------------------------------------------------------------------------------


def eta_product_coeffs(
    level: int,
    prec: int,
    table: Optional[Mapping[int, Mapping[int, int]]] = None,
) -> NewformCoeffs:
    products = dict(BUILTIN_ETA_PRODUCTS)
    if table is not None:
        products.update({k: dict(v) for (k, v) in table.items()})
    if level not in products:
        raise NoEtaProduct(level)
    factors = products[level]
    shift_num = sum(d * r for (d, r) in factors.items())
    if shift_num % 24 != 0 or shift_num <= 0:
        raise ValueError(
            f"Eta product {factors} for level {level} is not q^s times a power series "
            "with integral s >= 1"
        )
    shift = shift_num // 24
    size = max(prec - shift, 1)

    prod = [1] + [0] * (size - 1)
    for (d, r) in sorted(factors.items()):
        base = _euler_product(d, size)
        if r < 0:
            base = _int_inverse(base, size)
        for _ in range(abs(r)):
            prod = _int_mul(prod, base, size)

    coeffs = tuple(
        prod[n - shift] if 0 <= n - shift < size else 0 for n in range(1, prec)
    )
    provenance = FromEtaProduct(tuple(sorted(factors.items())))
    return NewformCoeffs(level=level, coeffs=coeffs, provenance=provenance)


def _euler_product(d: int, size: int) -> List[int]:
    """prod_m (1 - q^(d m)) mod q^size by the pentagonal number theorem."""
    out = [0] * size
    k = 0
    while True:
        done = True
        for j in ([k] if k == 0 else [k, -k]):
            e = d * j * (3 * j - 1) // 2
            if e < size:
                out[e] += -1 if j % 2 else 1
                done = False
        if done:
            break
        k += 1
    return out


def _int_mul(a: List[int], b: List[int], size: int) -> List[int]:
    out = [0] * size
    nonzero_b = [(j, c) for (j, c) in enumerate(b) if c]
    for (i, ai) in enumerate(a):
        if ai == 0:
            continue
        for (j, bj) in nonzero_b:
            if i + j >= size:
                break
            out[i + j] += ai * bj
    return out


def _int_inverse(a: List[int], size: int) -> List[int]:
    out = [0] * size
    out[0] = 1
    for k in range(1, size):
        out[k] = -sum(a[j] * out[k - j] for j in range(1, k + 1))
    return out


# ------------------------------------------------------------------------------
# Hecke recursion
# ------------------------------------------------------------------------------


def hecke_expand(
    ap: Mapping[int, int],
    level: int,
    prec: int,
    *,
    bad_primes: Optional[Mapping[int, int]] = None,
) -> NewformCoeffs:
    """
    a_n for n < prec from a_p: multiplicative on coprime indices,
    a_{p^(k+1)} = a_p a_{p^k} - p a_{p^(k-1)} for p not dividing the level and
    a_{p^k} = a_p^k for p dividing it.
    """
    primes = dict(ap)
    if bad_primes is not None:
        primes.update(bad_primes)
    a = [0] * max(prec, 2)
    a[1] = 1
    spf = _smallest_prime_factors(prec)
    for n in range(2, prec):
        p = spf[n]
        pk, m = p, n // p
        while m % p == 0:
            pk, m = pk * p, m // p
        if m > 1:
            a[n] = a[pk] * a[m]
        elif pk == p:
            if p not in primes:
                raise InsufficientPrimeData(p, prec - 1)
            a[n] = primes[p]
        elif level % p == 0:
            a[n] = a[p] * a[pk // p]
        else:
            a[n] = a[p] * a[pk // p] - p * a[pk // (p * p)]
    provenance = FromPrimes(len([p for p in primerange(2, prec)]))
    return NewformCoeffs(level=level, coeffs=tuple(a[1:prec]), provenance=provenance)


def _smallest_prime_factors(n: int) -> List[int]:
    spf = list(range(max(n, 2)))
    for i in range(2, int(n**0.5) + 1):
        if spf[i] == i:
            for j in range(i * i, n, i):
                if spf[j] == j:
                    spf[j] = i
    return spf


# ------------------------------------------------------------------------------
# Validation
# ------------------------------------------------------------------------------


def validate(coeffs: NewformCoeffs, *, level: Optional[int] = None) -> NewformCoeffs:
    """
    Normalization and multiplicativity on coprime indices; when the level is
    known also the prime-power recursions.
    """
    top = coeffs.prec
    if top > 1 and coeffs[1] != 1:
        raise InvalidEigenform(1, 1, 1, coeffs[1], relation="the normalization a_1")
    for m in range(2, top):
        for n in range(m + 1, (top - 1) // m + 1):
            if gcd(m, n) != 1:
                continue
            expected = coeffs[m] * coeffs[n]
            if coeffs[m * n] != expected:
                raise InvalidEigenform(m, n, expected, coeffs[m * n])
    if level is not None:
        _validate_prime_powers(coeffs, level)
    return coeffs


def _validate_prime_powers(coeffs: NewformCoeffs, level: int) -> None:
    top = coeffs.prec
    for p in primerange(2, int(top**0.5) + 1):
        pk = p * p
        while pk < top:
            if level % p == 0:
                expected = coeffs[p] * coeffs[pk // p]
                relation = f"a_{p} * a_{pk // p}"
            else:
                expected = coeffs[p] * coeffs[pk // p] - p * coeffs[pk // (p * p)]
                relation = f"a_{p} * a_{pk // p} - {p} * a_{pk // (p * p)}"
            if coeffs[pk] != expected:
                raise InvalidEigenform(p, pk // p, expected, coeffs[pk], relation=relation)
            pk *= p
