from logging import Logger
from typing import Any, Optional


class LogAlgebraicError(Exception):
    """
    Base class of the documented domain errors. The class name is the error
    name reported by the command line.
    """

    @property
    def name(self) -> str:
        return self.__class__.__name__


# ------------------------------------------------------------------------------
# Series arithmetic
# ------------------------------------------------------------------------------


class NotAUnit(LogAlgebraicError):
    def __init__(self, value: Any, context: str = "series"):
        self.value = value
        self.context = context

    def __str__(self) -> str:
        return f"Leading coefficient {self.value} of {self.context} is not invertible"


class RingMismatch(LogAlgebraicError):
    def __init__(self, left: str, right: str):
        self.left = left
        self.right = right

    def __str__(self) -> str:
        return f"Cannot combine series over {self.left} with series over {self.right}"


class CompositionDomain(LogAlgebraicError):
    def __init__(self, valuation: int):
        self.valuation = valuation

    def __str__(self) -> str:
        return (
            "Inner series of a composition must have valuation >= 1, "
            f"got valuation {self.valuation}"
        )


class NotReversible(LogAlgebraicError):
    def __init__(self, valuation: int):
        self.valuation = valuation

    def __str__(self) -> str:
        return f"Only series of valuation 1 can be reversed, got valuation {self.valuation}"


class LogarithmicTerm(LogAlgebraicError):
    def __init__(self, coefficient: Any):
        self.coefficient = coefficient

    def __str__(self) -> str:
        return f"Cannot integrate: t^-1 term with coefficient {self.coefficient}"


# ------------------------------------------------------------------------------
# Curves and points
# ------------------------------------------------------------------------------


class SingularCurve(LogAlgebraicError):
    def __init__(self, coefficients: Any):
        self.coefficients = coefficients

    def __str__(self) -> str:
        return f"Curve with coefficients {self.coefficients} has zero discriminant"


class NotOnCurve(LogAlgebraicError):
    def __init__(self, point: Any, residual: Any = None):
        self.point = point
        self.residual = residual

    def __str__(self) -> str:
        if self.residual is None:
            return f"Point {self.point} is not on the curve"
        return f"Point {self.point} is not on the curve (residual {self.residual})"


# ------------------------------------------------------------------------------
# Modular forms
# ------------------------------------------------------------------------------


class NoEtaProduct(LogAlgebraicError):
    def __init__(self, level: int):
        self.level = level

    def __str__(self) -> str:
        return (
            f"No eta product registered for level {self.level}. "
            "Add one to the [eta-products] section of your config file."
        )


class InsufficientPrimeData(LogAlgebraicError):
    def __init__(self, prime: int, needed: int):
        self.prime = prime
        self.needed = needed

    def __str__(self) -> str:
        return f"Missing a_p for p = {self.prime} (coefficients needed up to {self.needed})"


class ParseError(LogAlgebraicError):
    def __init__(self, message: str, file_name: Optional[str] = None, line: Optional[int] = None):
        self.message = message
        self.file_name = file_name
        self.line = line

    def __str__(self) -> str:
        where = ""
        if self.file_name is not None:
            where = f"{self.file_name}"
        if self.line is not None:
            where = f"{where}, line {self.line}" if where else f"line {self.line}"
        return f"{where}: {self.message}" if where else self.message


class InvalidEigenform(LogAlgebraicError):
    def __init__(
        self,
        m: int,
        n: int,
        expected: int,
        actual: int,
        relation: Optional[str] = None,
    ):
        self.m = m
        self.n = n
        self.expected = expected
        self.actual = actual
        self.relation = relation

    @property
    def index(self) -> int:
        return self.m * self.n

    def __str__(self) -> str:
        relation = (
            f"a_{self.m} * a_{self.n}" if self.relation is None else self.relation
        )
        return f"a_{self.index} = {self.actual} but {relation} = {self.expected}"


class NotParametrization(LogAlgebraicError):
    def __init__(self, series: str, exponent: int, coefficient: Any):
        self.series = series
        self.exponent = exponent
        self.coefficient = coefficient

    def __str__(self) -> str:
        found = "residual" if self.series == "curve equation" else "non-integral coefficient"
        return (
            f"Coefficients do not parametrize the curve: {self.series} has "
            f"{found} {self.coefficient} at q^{self.exponent}"
        )


# ------------------------------------------------------------------------------
# Identities
# ------------------------------------------------------------------------------


class DegenerateSum(LogAlgebraicError):
    def __init__(self, beta: Any):
        self.beta = beta

    def __str__(self) -> str:
        return f"The point sum for beta = {self.beta} is the point at infinity"


# ------------------------------------------------------------------------------
# Numerics
# ------------------------------------------------------------------------------


class DivergenceSuspected(LogAlgebraicError):
    def __init__(self, ratio: Any):
        self.ratio = ratio

    def __str__(self) -> str:
        return f"Series terms are not decreasing (estimated ratio {self.ratio})"


class NotPrimitive(LogAlgebraicError):
    def __init__(self, modulus: int, induced_from: int):
        self.modulus = modulus
        self.induced_from = induced_from

    def __str__(self) -> str:
        return (
            f"Character of modulus {self.modulus} is induced from modulus "
            f"{self.induced_from}"
        )


class BadTwist(LogAlgebraicError):
    def __init__(self, modulus: int, level: int, reason: str = "not coprime"):
        self.modulus = modulus
        self.level = level
        self.reason = reason

    def __str__(self) -> str:
        return f"Cannot twist level {self.level} by modulus {self.modulus}: {self.reason}"


class PoleAt(LogAlgebraicError):
    def __init__(self, z: Any):
        self.z = z

    def __str__(self) -> str:
        return f"{self.z} is a lattice point (pole)"


class SpuriousMatch(LogAlgebraicError):
    def __init__(self, x: Any, y: Any):
        self.x = x
        self.y = y

    def __str__(self) -> str:
        return f"Reconstructed ({self.x}, {self.y}) is not on the curve"


class NotOnLine(LogAlgebraicError):
    def __init__(self, value: Any, generator: str, residual: Any, tolerance: Any):
        self.value = value
        self.generator = generator
        self.residual = residual
        self.tolerance = tolerance

    def __str__(self) -> str:
        return (
            f"{self.value} is not a small rational multiple of {self.generator} "
            f"(residual {self.residual} >= tolerance {self.tolerance})"
        )


def log_errors(logger: Logger):
    """
    Decorator for command entry points: domain errors are logged before they
    propagate to the front end.
    """

    def _decorator(fn):
        def _log_errors(*args, **kwargs):
            try:
                return fn(*args, **kwargs)
            except LogAlgebraicError as e:
                logger.error(f"{e.name}: {e}")
                raise e

        _log_errors.__name__ = fn.__name__
        _log_errors.__doc__ = fn.__doc__
        return _log_errors

    return _decorator
