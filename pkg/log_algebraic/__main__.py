from argparse import ArgumentParser
import logging
import sys
from typing import Any, List, Optional, TextIO, Tuple

from .adapter import config_file
from .adapter.logging import init_logger
from .command import curve as command_curve
from .command import example as command_example
from .command import lvalue as command_lvalue
from .command import modform as command_modform
from .command import selftest as command_selftest
from .command import verify as command_verify
from .model.config import Config
from .model.errors import LogAlgebraicError
from .model.identity import IDENTITIES
from .model.lvalues import MODES as LVALUE_MODES
from .model.report import RunReport
from .model.special_values import EXAMPLES

DEFAULT_CURVE = "builtin:11"
JSON_STDOUT = "-"


def main():
    status, _ = cmd_dispatch(sys.argv[1:])
    sys.exit(status)


def cmd_dispatch(argv: List[str]) -> Tuple[int, RunReport]:
    """Exit status 0 on success, 1 on a failed check or a domain error; usage errors exit 2."""
    program = build_parser()
    args = program.parse_args(argv)
    if not hasattr(args, "func"):
        program.error("a command is required")

    report = RunReport(command=list(argv))
    logger = None
    try:
        config = get_config(args)
        logger = init_logger(
            level=logging.DEBUG if args.debug else logging.INFO,
            log_file=config.log_file,
        )
    except Exception as e:
        print(f"An unexpected error occurred:\n\n    {e}", file=sys.stderr)
        report.status = 1
        return (report.status, report)

    target: Optional[TextIO] = None if args.json == JSON_STDOUT else sys.stdout
    try:
        (report.results, report.status) = args.func(config, args, target)
    except LogAlgebraicError as e:
        print(f"error: {e.name}: {e}", file=sys.stderr)
        report.status = 1
        report.results = {"error": e.name, "message": str(e)}
    except ValueError as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        report.status = 1
        report.results = {"error": "ValueError", "message": str(e)}
    except Exception as e:
        logger.exception(e)
        print(
            f"An unexpected error occurred:\n\n    {e}\n\nCheck the log for details.",
            file=sys.stderr,
        )
        report.status = 1
        report.results = {"error": type(e).__name__, "message": str(e)}

    write_json(args.json, report)
    return (report.status, report)


def write_json(destination: Optional[str], report: RunReport) -> None:
    if destination is None:
        return
    if destination == JSON_STDOUT:
        report.dump(sys.stdout)
        return
    with open(destination, "w", encoding="UTF-8") as f:
        report.dump(f)


def build_parser() -> ArgumentParser:
    program = ArgumentParser(
        prog="log-algebraic",
        description="Log-algebraic identities and L-values of modular elliptic curves",
    )
    common = ArgumentParser(add_help=False)
    common.add_argument(
        "-c", "--config", help="Config file", type=str, default="log-algebraic.ini"
    )
    common.add_argument(
        "--profile", help="Profile (config file section)", default=config_file.DEFAULT_SECTION
    )
    common.add_argument("--debug", help="Debug messages to log", action="store_true")
    common.add_argument("--dps", type=int, help="Decimal digits of floating computations")
    common.add_argument(
        "--json",
        nargs="?",
        const=JSON_STDOUT,
        default=None,
        metavar="FILE",
        help="Write a JSON run report to FILE (or to stdout instead of text)",
    )
    sub = program.add_subparsers(help="command help")

    curve_parser(sub, [common])
    modform_parser(sub, [common])
    verify_parser(sub, [common])
    lvalue_parser(sub, [common])
    example_parser(sub, [common])
    selftest_parser(sub, [common])
    return program


def curve_parser(root, parents):
    cmd = root.add_parser("curve", description="Curve invariants and periods")
    sub = cmd.add_subparsers(help="curve command help")
    describe = sub.add_parser("describe", description="Describe a curve", parents=parents)
    describe.add_argument("curve", nargs="?", default=DEFAULT_CURVE, help="Curve")
    describe.add_argument("--terms", type=int, default=20, help="Coefficients a_n shown")
    describe.set_defaults(func=exec_curve_describe)
    return cmd


def modform_parser(root, parents):
    cmd = root.add_parser("modform", description="Newform coefficients and parametrization series")
    sub = cmd.add_subparsers(help="modform command help")

    coeffs = sub.add_parser("coeffs", description="Newform coefficients", parents=parents)
    source = coeffs.add_mutually_exclusive_group()
    source.add_argument("--level", type=int, help="Level (eta product)")
    source.add_argument("--curve", help="Curve")
    coeffs.add_argument("--prec", type=int, help="Coefficients a_n for n < PREC")
    coeffs.set_defaults(func=exec_modform_coeffs)

    for (name, description, func) in [
        ("phi", "The series lambda and Phi", exec_modform_phi),
        ("xy", "The series X and Y", exec_modform_xy),
        ("honda", "The Honda group law and its integrality", exec_modform_honda),
    ]:
        p = sub.add_parser(name, description=description, parents=parents)
        p.add_argument("--curve", default=DEFAULT_CURVE, help="Curve")
        p.add_argument("--prec", type=int, help="Truncation order")
        p.set_defaults(func=func)
    return cmd


def verify_parser(root, parents):
    cmd = root.add_parser("verify", description="Verify an identity", parents=parents)
    cmd.add_argument("--identity", required=True, choices=IDENTITIES, help="Identity")
    cmd.add_argument("--curve", default=DEFAULT_CURVE, help="Curve")
    cmd.add_argument(
        "--beta",
        help="Coefficients of beta from power a: 'm_a,m_(a+1),...@a' (default u)",
    )
    cmd.add_argument("--prec", type=int, help="Truncation order")
    cmd.add_argument("--mode", default="exact", choices=command_verify.MODES, help="main-b mode")
    cmd.set_defaults(func=exec_verify)
    return cmd


def lvalue_parser(root, parents):
    cmd = root.add_parser("lvalue", description="L(E, 1) and its twists", parents=parents)
    cmd.add_argument("kind", nargs="?", default="plain", choices=["plain", "twist"])
    cmd.add_argument("--curve", default=DEFAULT_CURVE, help="Curve")
    cmd.add_argument("--char", help="Character: quad:D or cubic:P (twist only)")
    cmd.add_argument("--terms", type=int, help="Terms of the series")
    cmd.add_argument("--mode", default="general", choices=LVALUE_MODES, help="Twist formula")
    cmd.set_defaults(func=exec_lvalue, parser=cmd)
    return cmd


def example_parser(root, parents):
    cmd = root.add_parser("example", description="Exact L-values of X0(11)", parents=parents)
    cmd.add_argument("which", choices=EXAMPLES, help="Example")
    cmd.set_defaults(func=exec_example)
    return cmd


def selftest_parser(root, parents):
    cmd = root.add_parser("selftest", description="Run the acceptance suite", parents=parents)
    cmd.add_argument("--prec", type=int, help="Truncation order (below 20: fast subset)")
    cmd.set_defaults(func=exec_selftest)
    return cmd


def exec_curve_describe(config: Config, args, target) -> Tuple[Any, int]:
    return (command_curve.describe(config, args.curve, args.terms, target), 0)


def exec_modform_coeffs(config: Config, args, target) -> Tuple[Any, int]:
    curve = None if args.level is not None else args.curve or DEFAULT_CURVE
    return (command_modform.coeffs(config, args.level, curve, args.prec, target), 0)


def exec_modform_phi(config: Config, args, target) -> Tuple[Any, int]:
    return (command_modform.phi(config, args.curve, args.prec, target), 0)


def exec_modform_xy(config: Config, args, target) -> Tuple[Any, int]:
    return (command_modform.xy(config, args.curve, args.prec, target), 0)


def exec_modform_honda(config: Config, args, target) -> Tuple[Any, int]:
    results = command_modform.honda(config, args.curve, args.prec, target)
    return (results, 0 if results["integral"] else 1)


def exec_verify(config: Config, args, target) -> Tuple[Any, int]:
    report = command_verify.main(
        config, args.identity, args.curve, args.beta, args.prec, args.mode, target
    )
    return (report, 0 if report.holds else 1)


def exec_lvalue(config: Config, args, target) -> Tuple[Any, int]:
    if args.kind == "plain":
        return (command_lvalue.plain(config, args.curve, args.terms, target), 0)
    if args.char is None:
        args.parser.error("lvalue twist requires --char")
    return (
        command_lvalue.twist(config, args.curve, args.char, args.terms, args.mode, target),
        0,
    )


def exec_example(config: Config, args, target) -> Tuple[Any, int]:
    report = command_example.main(config, args.which, target)
    return (report, 0 if report.ok else 1)


def exec_selftest(config: Config, args, target) -> Tuple[Any, int]:
    checks = command_selftest.main(config, args.prec, target)
    return (checks, 0 if all(c.passed for c in checks) else 1)


def get_config(args) -> Config:
    config = get_config_profile(args.config, args.profile)
    if args.dps is not None:
        config.dps = args.dps
    return config


def get_config_profile(file_name: str, profile: str) -> Config:
    configs = config_file.parse_file(file_name)
    if profile not in configs:
        raise ValueError(
            f"No section found named '{profile}'. Check your spelling and config file."
        )
    return configs[profile]


if __name__ == "__main__":
    main()
