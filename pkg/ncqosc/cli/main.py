"""
Command-line entry point.

Exit codes: 0 success, 1 validation or numerical failure, 2 config or
constraint error, 3 a requested time outside the reality window.
"""
import argparse
import logging
import sys
from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")

from ncqosc import __version__  # noqa: E402
from ncqosc.cli import runner  # noqa: E402
from ncqosc.errors import (  # noqa: E402
    ConfigError, ConstraintViolated, NcqoscError, OutsideRealityWindow, UnknownCase,
)
from ncqosc.model.params import CaseId  # noqa: E402

logger = logging.getLogger("ncqosc")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_WINDOW = 3


def _case(value: str) -> CaseId:
    try:
        return CaseId.parse(value)
    except UnknownCase as err:
        raise argparse.ArgumentTypeError(str(err)) from err


def _float_list(value: str) -> list:
    try:
        values = [float(item) for item in value.split(",") if item.strip()]
    except ValueError as err:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {value!r}") from err
    if not values:
        raise argparse.ArgumentTypeError("expected at least one value")
    return values


def _positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncqosc",
        description="Damped charged oscillator in a time-dependent magnetic field "
                    "on noncommutative phase space.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="Logging threshold.")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("cases", help="List the catalog cases.")

    run = commands.add_parser("run", help="Evaluate one case and write its CSV bundle.",
                              formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    run.add_argument("--config", required=True, help="Bundled scenario name or JSON file.")
    run.add_argument("--case", type=_case, default=None,
                     help="Case id such as set1-case2; overrides the config.")
    run.add_argument("--t-max", type=float, default=5.0, help="End of the time grid.")
    run.add_argument("--samples", type=int, default=101, help="Number of grid points.")
    run.add_argument("--out", default=".", help="Output directory.")

    figures = commands.add_parser("figures", help="Regenerate an energy figure.",
                                  formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    figures.add_argument("figure", choices=["fig1", "fig2"])
    figures.add_argument("--samples", type=int, default=101, help="Points per curve.")
    figures.add_argument("--jobs", type=_positive_int, default=1,
                         help="Worker processes for the curves.")
    figures.add_argument("--out", default=".", help="Output directory.")

    validate = commands.add_parser("validate", help="Run the validation suites.",
                                   formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    validate.add_argument("--config", default=None,
                          help="Scenario for the Set-I checks (default fig1).")
    validate.add_argument("--report", default=None,
                          help="JSON report path; defaults to validation.json in --out.")
    validate.add_argument("--out", default=".", help="Output directory.")

    sweep = commands.add_parser("sweep", help="Energy series over a parameter sweep.",
                                formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    sweep.add_argument("--config", required=True, help="Bundled scenario name or JSON file.")
    sweep.add_argument("--case", type=_case, default=None)
    sweep.add_argument("--param", required=True, help="ScenarioParams field to vary.")
    sweep.add_argument("--values", type=_float_list, required=True,
                       help="Comma-separated values, e.g. 1e2,1e3.")
    sweep.add_argument("--t-max", type=float, default=5.0)
    sweep.add_argument("--samples", type=int, default=101)
    sweep.add_argument("--out", default=".", help="Output directory.")
    return parser


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "cases":
        runner.list_cases()
        return EXIT_OK
    if args.command == "validate":
        passed = runner.validate(args.config, args.report, args.out)
        return EXIT_OK if passed else EXIT_FAILURE
    if args.command == "figures":
        if args.samples < 2:
            raise ConfigError(f"samples must be >= 2, got {args.samples}")
        runner.figures(args.figure, args.out, args.samples, args.jobs)
        return EXIT_OK
    try:
        request = runner.RunRequest(args.command, args.config, args.case, args.t_max,
                                    args.samples, args.out)
    except ValueError as err:
        raise ConfigError(str(err)) from err
    if args.command == "run":
        runner.run_case(request)
    else:
        runner.sweep(args.config, args.case, args.param, args.values, args.out,
                     args.t_max, args.samples)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the ``ncqosc`` command and return its exit code."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _dispatch(args)
    except (ConfigError, ConstraintViolated) as err:
        print(f"ncqosc: error: {err}", file=sys.stderr)
        return EXIT_CONFIG
    except OutsideRealityWindow as err:
        print(f"ncqosc: error: {err}", file=sys.stderr)
        return EXIT_WINDOW
    except NcqoscError as err:
        logger.error("%s: %s", type(err).__name__, err)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
