"""
Machine-readable run reports. Values are rendered to strings at a fixed number
of significant digits (floats) or exactly (rationals), so that repeated runs
at the same precision produce byte-identical JSON.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, TextIO

import mpmath
from sympy import Basic

from .point import AffinePoint, Infinity

SCHEMA = "log-algebraic/run-report/1"

# significant digits of floating values in reports
DIGITS = 15


def render_value(v: Any) -> Any:
    if hasattr(v, "to_json"):
        return v.to_json()
    if isinstance(v, bool) or v is None or isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, mpmath.mpc):
        return {"re": mpmath.nstr(v.real, DIGITS), "im": mpmath.nstr(v.imag, DIGITS)}
    if isinstance(v, (mpmath.mpf, float)):
        return mpmath.nstr(mpmath.mpf(v), DIGITS)
    if isinstance(v, Infinity):
        return "O"
    if isinstance(v, AffinePoint):
        return [render_value(v.x), render_value(v.y)]
    if isinstance(v, dict):
        return {str(k): render_value(x) for (k, x) in v.items()}
    if isinstance(v, (list, tuple)):
        return [render_value(x) for x in v]
    if isinstance(v, Basic):
        return str(v)
    return str(v)


def _numeric(v: Any) -> Any:
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    return mpmath.mpmathify(v)


def format_value(v: Any) -> str:
    if isinstance(v, (mpmath.mpf, mpmath.mpc)):
        return mpmath.nstr(v, 12)
    if isinstance(v, AffinePoint):
        return f"({format_value(v.x)}, {format_value(v.y)})"
    return str(v)


@dataclass(frozen=True)
class Quantity:
    """
    A named intermediate. With `expected` it passes when within
    `tolerance`; with `holds` it passes when `holds` is true.
    """

    name: str
    value: Any
    expected: Any = None
    tolerance: Any = None
    holds: Optional[bool] = None

    @property
    def residual(self) -> Any:
        if self.expected is None:
            return None
        try:
            return abs(_numeric(self.value) - _numeric(self.expected))
        except (TypeError, ValueError):
            return None

    @property
    def ok(self) -> bool:
        if self.holds is not None:
            return self.holds
        if self.expected is None:
            return True
        if self.tolerance is None:
            return self.value == self.expected
        residual = self.residual
        return residual is not None and residual < self.tolerance

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"name": self.name, "value": render_value(self.value)}
        if self.expected is not None:
            out["expected"] = render_value(self.expected)
        residual = self.residual
        if residual is not None:
            out["residual"] = mpmath.nstr(residual, 3)
        out["ok"] = self.ok
        return out

    def __str__(self) -> str:
        mark = "ok" if self.ok else "FAILED"
        text = f"{self.name} = {format_value(self.value)}"
        if self.expected is not None:
            text = f"{text}  (expected {format_value(self.expected)})"
        return f"[{mark:^6}] {text}"


@dataclass
class ExampleReport:
    example: str
    inputs: Dict[str, Any]
    intermediates: List[Quantity] = field(default_factory=list)
    exact_result: str = ""

    def add(self, *args, **kwargs) -> Quantity:
        q = Quantity(*args, **kwargs)
        self.intermediates.append(q)
        return q

    @property
    def first_failure(self) -> Optional[Quantity]:
        return next((q for q in self.intermediates if not q.ok), None)

    @property
    def ok(self) -> bool:
        return self.first_failure is None

    def to_json(self) -> Dict[str, Any]:
        failure = self.first_failure
        return {
            "example": self.example,
            "inputs": render_value(self.inputs),
            "intermediates": [q.to_json() for q in self.intermediates],
            "exact_result": self.exact_result,
            "ok": self.ok,
            "first_failure": None if failure is None else failure.name,
        }

    def __str__(self) -> str:
        lines = [f"Example {self.example}"]
        lines.extend(f"    {k} = {format_value(v)}" for (k, v) in self.inputs.items())
        lines.extend(f"  {q}" for q in self.intermediates)
        lines.append(f"  exact result: {self.exact_result or '(none)'}")
        failure = self.first_failure
        if failure is not None:
            lines.append(f"  first failing quantity: {failure.name}")
        return "\n".join(lines)


@dataclass
class RunReport:
    command: List[str]
    status: int = 0
    results: Any = None

    def to_json(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA,
            "command": list(self.command),
            "status": self.status,
            "results": render_value(self.results),
        }

    def dump(self, target: TextIO) -> None:
        json.dump(self.to_json(), fp=target, indent=4)
        target.write("\n")
