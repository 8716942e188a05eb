import logging
import logging.handlers
from typing import Optional

import mpmath

LOG_NAME = "log-algebraic"
LOG_FORMAT = "[%(levelname).1s|%(asctime)s|%(module)s|dps=%(dps)s] %(message)s"


class WorkingPrecision(logging.Filter):
    """Stamps each record with the mpmath working precision at emit time."""

    def filter(self, record: logging.LogRecord) -> bool:
        record.dps = mpmath.mp.dps  # type: ignore[attr-defined]
        return True


def init_logger(
    *,
    name: str = LOG_NAME,
    level: int = logging.INFO,
    log_file: Optional[str] = None,
    format: str = LOG_FORMAT,
    propagate: bool = True,
) -> logging.Logger:
    logger = logging.getLogger(name)
    logger.setLevel(level)
    logger.propagate = propagate
    for old in list(logger.handlers):
        old.flush()
        old.close()
        logger.removeHandler(old)

    h: logging.Handler
    if log_file is None:
        h = logging.StreamHandler()
    else:
        h = logging.handlers.RotatingFileHandler(
            filename=log_file,
            maxBytes=(2**22),
            backupCount=4,
            encoding="UTF-8",
        )
    h.addFilter(WorkingPrecision())
    h.setFormatter(logging.Formatter(format))
    logger.addHandler(h)
    return logger


def get_logger(name: str, parent: str = LOG_NAME) -> logging.Logger:
    return logging.getLogger(f"{parent}.{name}")
