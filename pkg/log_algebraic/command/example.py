import sys
from typing import Optional, TextIO

from ..adapter.logging import get_logger
from ..model.config import Config
from ..model.errors import log_errors
from ..model.report import ExampleReport
from ..model.special_values import EXAMPLES, run_example

LOGGER = get_logger(__name__)


@log_errors(LOGGER)
def main(
    config: Config, which: str, target: Optional[TextIO] = sys.stdout
) -> ExampleReport:
    if which not in EXAMPLES:
        raise ValueError(f"Unknown example '{which}': expected one of {', '.join(EXAMPLES)}")
    kwargs = {"terms": config.terms}
    if which != "three":
        kwargs["denom_bound"] = config.denom_bound
    report = run_example(which, dps=config.dps, **kwargs)
    if target is not None:
        print(report, file=target)
    return report
