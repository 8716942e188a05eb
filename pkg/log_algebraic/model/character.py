"""
Dirichlet characters with exact cyclotomic values, their Gauss sums, and the
integer polynomials that turn a twisted L-series into a specialization of a
twisted harmonic series.

A cyclotomic number of level n is an element of ℚ(ζ_n), ζ_n = e^(2πi/n),
stored as its coefficients on 1, ζ_n, ..., ζ_n^(φ(n)-1). At level 3 these
are the pairs (a, b) meaning a + bρ, ρ = e^(2πi/3).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Any, Dict, List, Tuple

import mpmath
from sympy import Poly, Symbol, cyclotomic_poly, divisors, isprime, jacobi_symbol
from sympy import primitive_root, totient
from sympy.polys.domains import QQ

from .errors import NotPrimitive
from .rings import to_fraction

_X = Symbol("x")


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _reduce(level: int, coeffs: Dict[int, Fraction]) -> Tuple[Fraction, ...]:
    """Reduce sum c_k x^k modulo the level-th cyclotomic polynomial."""
    out = [Fraction(0)] * int(totient(level))
    if not any(coeffs.values()):
        return tuple(out)
    modulus = Poly(cyclotomic_poly(level, _X), _X, domain=QQ)
    poly = Poly.from_dict(
        {(k % level,): QQ(c.numerator, c.denominator) for (k, c) in coeffs.items() if c},
        _X,
        domain=QQ,
    )
    rem = poly.rem(modulus)
    for ((k,), c) in rem.as_dict(native=True).items():
        out[k] = to_fraction(c)
    return tuple(out)


@dataclass(frozen=True)
class CyclotomicNumber:
    level: int
    coeffs: Tuple[Fraction, ...]

    @property
    def pair(self) -> Tuple[Fraction, Fraction]:
        """(a, b) with value a + bρ; only for level 3 (or levels 1, 2)."""
        at3 = self.embed(3) if self.level in (1, 2) else self
        if at3.level != 3:
            raise ValueError(f"Not an element of Q(rho): level {self.level}")
        return (at3.coeffs[0], at3.coeffs[1])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def embed(self, level: int) -> "CyclotomicNumber":
        """The same number written at a level that is a multiple of ours."""
        if level % self.level != 0:
            raise ValueError(f"Cannot embed level {self.level} in level {level}")
        step = level // self.level
        return _make(level, {k * step: c for (k, c) in enumerate(self.coeffs)})

    def conjugate(self) -> "CyclotomicNumber":
        return _make(self.level, {-k: c for (k, c) in enumerate(self.coeffs)})

    def __add__(self, other: Any) -> "CyclotomicNumber":
        a, b = _align(self, _lift(other))
        return CyclotomicNumber(a.level, tuple(x + y for (x, y) in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self.level, tuple(-c for c in self.coeffs))

    def __sub__(self, other: Any) -> "CyclotomicNumber":
        return self + (-_lift(other))

    def __rsub__(self, other: Any) -> "CyclotomicNumber":
        return _lift(other) - self

    def __mul__(self, other: Any) -> "CyclotomicNumber":
        a, b = _align(self, _lift(other))
        prod: Dict[int, Fraction] = {}
        for (i, x) in enumerate(a.coeffs):
            if x == 0:
                continue
            for (j, y) in enumerate(b.coeffs):
                if y:
                    prod[i + j] = prod.get(i + j, Fraction(0)) + x * y
        return _make(a.level, prod)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CyclotomicNumber":
        if n < 0:
            raise ValueError("Negative powers are not supported")
        return reduce(lambda acc, _: acc * self, range(n), one(self.level))

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, (CyclotomicNumber, int, Fraction)):
            return NotImplemented
        a, b = _align(self, _lift(other))
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash(self.is_rational() and self.coeffs[0])

    def to_complex(self) -> Any:
        return mpmath.fsum(
            mpmath.mpf(c.numerator) / c.denominator * mpmath.expjpi(mpmath.mpf(2 * k) / self.level)
            for (k, c) in enumerate(self.coeffs)
            if c
        ) + mpmath.mpc(0)

    def __str__(self) -> str:
        if self.level == 3:
            (a, b) = self.pair
            return f"{a} + {b}*rho" if b else str(a)
        terms = [f"{c}*z^{k}" if k else str(c) for (k, c) in enumerate(self.coeffs) if c]
        return " + ".join(terms) if terms else "0"


def _make(level: int, coeffs: Dict[int, Fraction]) -> CyclotomicNumber:
    return CyclotomicNumber(level, _reduce(level, coeffs))


def _lift(c: Any) -> CyclotomicNumber:
    if isinstance(c, CyclotomicNumber):
        return c
    return CyclotomicNumber(1, (Fraction(c),))


def _align(a: CyclotomicNumber, b: CyclotomicNumber) -> Tuple[CyclotomicNumber, CyclotomicNumber]:
    if a.level == b.level:
        return (a, b)
    level = _lcm(a.level, b.level)
    return (a.embed(level), b.embed(level))


def one(level: int = 1) -> CyclotomicNumber:
    return _make(level, {0: Fraction(1)})


def root_of_unity(level: int, k: int = 1) -> CyclotomicNumber:
    """ζ_level^k"""
    return _make(level, {k: Fraction(1)})


RHO = root_of_unity(3)


# ------------------------------------------------------------------------------
# Characters
# ------------------------------------------------------------------------------


@dataclass(frozen=True)
class DirichletCharacter:
    """
    χ(r) = ζ_order^(exponents[r]) on units r mod `modulus`, 0 off units. The
    exponent table is the discrete logarithm of the character.
    """

    modulus: int
    order: int
    exponents: Tuple[Tuple[int, int], ...]
    label: str = ""

    @property
    def table(self) -> Dict[int, int]:
        return dict(self.exponents)

    def exponent(self, n: int) -> int:
        return self.table[n % self.modulus]

    def is_unit(self, n: int) -> bool:
        return gcd(n, self.modulus) == 1

    def value(self, n: int) -> CyclotomicNumber:
        if not self.is_unit(n):
            return _lift(0).embed(self.order)
        return root_of_unity(self.order, self.exponent(n))

    def value_complex(self, n: int) -> Any:
        if not self.is_unit(n):
            return mpmath.mpc(0)
        return mpmath.expjpi(mpmath.mpf(2 * self.exponent(n)) / self.order)

    def values_complex(self) -> List[Any]:
        """χ(0), ..., χ(m-1) as complex numbers."""
        return [self.value_complex(n) for n in range(self.modulus)]

    def conjugate(self) -> "DirichletCharacter":
        return DirichletCharacter(
            self.modulus,
            self.order,
            tuple((r, (-k) % self.order) for (r, k) in self.exponents),
            f"conj({self.label})" if self.label else "",
        )

    @property
    def is_real(self) -> bool:
        return all((2 * k) % self.order == 0 for (_, k) in self.exponents)

    @property
    def parity(self) -> int:
        """χ(-1) = ±1"""
        return 1 if self.exponent(-1) == 0 else -1

    def conductor(self) -> int:
        for d in divisors(self.modulus):
            if all(k == 0 for (r, k) in self.exponents if r % d == 1 % d):
                return d
        return self.modulus

    def is_primitive(self) -> bool:
        return self.conductor() == self.modulus

    def __str__(self) -> str:
        return self.label or f"character mod {self.modulus} of order {self.order}"


def principal_character() -> DirichletCharacter:
    return DirichletCharacter(1, 1, ((0, 0),), "trivial")


def quadratic_character(discriminant: int) -> DirichletCharacter:
    """
    The character of Q(√D) for an odd fundamental discriminant D: n ↦ (n/|D|),
    the Jacobi symbol.
    """
    d = discriminant
    m = abs(d)
    if d % 4 != 1 or m == 1 or any(m % (p * p) == 0 for p in range(3, int(m**0.5) + 1, 2)):
        raise ValueError(
            f"Unsupported discriminant {d}: need an odd fundamental discriminant"
        )
    exponents = tuple(
        (r, 0 if jacobi_symbol(r, m) == 1 else 1) for r in range(1, m) if gcd(r, m) == 1
    )
    return DirichletCharacter(m, 2, exponents, f"quad:{d}")


def cubic_character(p: int) -> DirichletCharacter:
    """ψ(g^k) = ρ^k for the least primitive root g mod p, p ≡ 1 mod 3."""
    if not isprime(p) or p % 3 != 1:
        raise ValueError(f"Cubic characters need a prime p = 1 mod 3, got {p}")
    g = int(primitive_root(p))
    exponents = {}
    r = 1
    for k in range(p - 1):
        exponents[r] = k % 3
        r = r * g % p
    return DirichletCharacter(p, 3, tuple(sorted(exponents.items())), f"cubic:{p}")


def parse_character(spec: str) -> DirichletCharacter:
    """`quad:D`, `cubic:p` or `trivial`."""
    kind, _, arg = spec.strip().partition(":")
    try:
        if kind == "trivial" and not arg:
            return principal_character()
        if kind == "quad":
            return quadratic_character(int(arg))
        if kind == "cubic":
            return cubic_character(int(arg))
    except ValueError as e:
        raise ValueError(f"Cannot parse character '{spec}': {e}") from None
    raise ValueError(f"Cannot parse character '{spec}': expected quad:D, cubic:p or trivial")


def gauss_sum(chi: DirichletCharacter) -> CyclotomicNumber:
    """g(χ) = sum_j χ(j) ζ_m^j"""
    if not chi.is_primitive():
        raise NotPrimitive(chi.modulus, chi.conductor())
    m = chi.modulus
    if m == 1:
        return one()
    level = _lcm(chi.order, m)
    total = _lift(0).embed(level)
    for j in range(1, m):
        if chi.is_unit(j):
            total = total + chi.value(j) * root_of_unity(m, j)
    return total


# ------------------------------------------------------------------------------
# Character polynomials
# ------------------------------------------------------------------------------


def gamma_coefficients(chi: DirichletCharacter) -> Dict[int, CyclotomicNumber]:
    """γ = sum_j χ(j) u^j, so that γ(ζ_m^k) = conj(χ)(k) g(χ)."""
    return {j: chi.value(j) for j in range(1, chi.modulus) if chi.is_unit(j)}


def evaluate_gamma(
    coeffs: Dict[int, CyclotomicNumber], modulus: int, k: int
) -> CyclotomicNumber:
    return reduce(
        lambda acc, jc: acc + jc[1] * root_of_unity(modulus, jc[0] * k),
        coeffs.items(),
        _lift(0),
    )


def real_parts(chi: DirichletCharacter) -> Tuple[Dict[int, int], Dict[int, int]]:
    """
    For a character of order 3 with χ(j) = a_j + b_j ρ: the integer polynomials
    γ + conj(γ) = sum (2a_j - b_j) u^j and (γ - conj(γ))/√-3 = sum b_j u^j.
    For a real character: (γ, 0).
    """
    if chi.order <= 2:
        return ({j: int(c.coeffs[0]) for (j, c) in gamma_coefficients(chi).items()}, {})
    if chi.order != 3:
        raise ValueError(f"Characters of order {chi.order} are not supported")
    first, second = {}, {}
    for (j, c) in gamma_coefficients(chi).items():
        (a, b) = c.pair
        first[j] = int(2 * a - b)
        second[j] = int(b)
    return (first, second)


def beta_coefficients(chi: DirichletCharacter) -> Dict[int, int]:
    """
    The twisting polynomial used to reach L(E, χ, 1): γ itself for a real
    character, β1 - 3 β2 for a character of order 3.
    """
    first, second = real_parts(chi)
    keys = sorted(set(first) | set(second))
    out = {j: first.get(j, 0) - 3 * second.get(j, 0) for j in keys}
    return {j: c for (j, c) in out.items() if c}

