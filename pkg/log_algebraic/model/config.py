from dataclasses import dataclass, field
from fractions import Fraction
import os.path
from typing import Dict, Mapping, Optional, Tuple, Union

from .curve import CurveModel, derive_invariants


@dataclass(frozen=True)
class EtaProductSource:
    """Built-in (or configured) eta product for the conductor; `factors` overrides it."""

    factors: Optional[Tuple[Tuple[int, int], ...]] = None

    def __str__(self):
        if self.factors is None:
            return "EtaProductSource()"
        return f"EtaProductSource({', '.join(f'{d}^{r}' for (d, r) in self.factors)})"


@dataclass(frozen=True)
class FileSource:
    file_name: str

    def __str__(self):
        return f"FileSource({self.file_name})"


@dataclass(frozen=True)
class PrimesSource:
    primes: Tuple[Tuple[int, int], ...]

    def __str__(self):
        return f"PrimesSource({len(self.primes)} primes)"


CoefficientSource = Union[EtaProductSource, FileSource, PrimesSource]


@dataclass(frozen=True)
class CurveSpec:
    name: str
    coefficients: Tuple[Fraction, ...]
    conductor: int
    source: CoefficientSource = EtaProductSource()
    sign: int = 1

    def __post_init__(self):
        if len(self.coefficients) != 5:
            raise ValueError(
                f"Curve {self.name}: expected 5 coefficients e1 e2 e3 e4 e6, "
                f"got {len(self.coefficients)}"
            )
        if self.sign not in (1, -1):
            raise ValueError(f"Curve {self.name}: sign must be +1 or -1, got {self.sign}")
        if self.conductor < 1:
            raise ValueError(f"Curve {self.name}: conductor must be positive")

    def curve(self) -> CurveModel:
        return derive_invariants(*self.coefficients, conductor=self.conductor, name=self.name)

    def __str__(self):
        coeffs = " ".join(str(c) for c in self.coefficients)
        return f"CurveSpec({self.name}: [{coeffs}], N = {self.conductor}, sign {self.sign:+d}, {self.source})"


BUILTIN_CURVES: Dict[str, CurveSpec] = {
    "11": CurveSpec(
        name="X0(11)",
        coefficients=tuple(Fraction(c) for c in (0, -1, 1, -10, -20)),
        conductor=11,
        source=EtaProductSource(),
        sign=1,
    ),
}


@dataclass
class Config:
    name: str
    log_file: Optional[str] = None
    prec: int = 20
    dps: int = 30
    terms: int = 400
    tolerance: float = 1e-6
    denom_bound: int = 60
    point_tolerance: float = 1e-9
    curve_dir: str = "curves"
    eta_products: Mapping[int, Mapping[int, int]] = field(default_factory=dict)

    def curve_file(self, name: str) -> str:
        return os.path.join(self.curve_dir, f"{name}.ini")
