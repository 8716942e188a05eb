"""
Coefficient files: UTF-8, one `n a_n` pair per line in ascending n without
gaps, starting at n = 1. Blank lines and `#` comments are ignored.
"""

from typing import Iterable, List, Optional

from ..model.errors import ParseError
from ..model.newform import FromFile, NewformCoeffs, validate
from .logging import get_logger

LOGGER = get_logger(__name__)


def load_coeffs(file_name: str, level: Optional[int] = None) -> NewformCoeffs:
    """Read and validate; `level` enables the prime-power checks."""
    with open(file_name, "r", encoding="UTF-8") as f:
        coeffs = parse_lines(f, file_name)
    LOGGER.debug(f"Read a_1 .. a_{len(coeffs)} from {file_name}")
    return validate(
        NewformCoeffs(level=level or 0, coeffs=tuple(coeffs), provenance=FromFile(file_name)),
        level=level,
    )


def parse_lines(lines: Iterable[str], file_name: Optional[str] = None) -> List[int]:
    coeffs: List[int] = []
    for (lineno, raw) in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if len(line) == 0:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'n a_n', got '{line}'", file_name, lineno)
        try:
            n, an = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"not an integer pair: '{line}'", file_name, lineno) from None
        if n != len(coeffs) + 1:
            raise ParseError(f"expected n = {len(coeffs) + 1}, got n = {n}", file_name, lineno)
        coeffs.append(an)
    if len(coeffs) == 0:
        raise ParseError("no coefficients", file_name)
    return coeffs
