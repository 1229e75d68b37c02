import argparse
import importlib
import logging
import sys

from utils import get_logger, setup_logging
from utils.errors import AbsynthError

logger = get_logger(__name__)

# Subcommand modules, each exposing setup(subparsers, parents)
COMMANDS = ["run", "export", "simulate", "compare"]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, help="seed for the noise samples and simulations")
    common.add_argument("--samples-file", help="recorded noise samples replacing the noise section")
    common.add_argument("--out", help="report directory")
    common.add_argument("--quiet", action="store_true", help="only log warnings and errors")

    parser = argparse.ArgumentParser(
        prog="absynth",
        description="Controller synthesis for stochastic linear systems",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        importlib.import_module(f"commands.{name}").setup(subparsers, [common])
    return parser


def main(argv: list[str] | None = None) -> int:
    """
    Entry point; returns the process exit code.

    0 when the run is certified (or the command succeeded), 2 when a run's
    verdict is unknown, 1 on any error.
    """
    args = build_parser().parse_args(argv)
    if args.quiet:
        setup_logging(logging.WARNING)

    try:
        return args.handler(args)
    except AbsynthError as e:
        logger.error(f"Error in {args.command} command: {e}")
        return 1
    except Exception as e:
        logger.exception(f"Unexpected error in {args.command} command: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
