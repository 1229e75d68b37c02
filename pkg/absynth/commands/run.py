import argparse

from pipeline import CERTIFIED, run_pipeline
from utils import get_logger

from .common import add_config_argument, load

logger = get_logger(__name__)


def run(args: argparse.Namespace) -> int:
    config = load(args)
    report = run_pipeline(config)

    for x0, bound in zip(config.simulate.initial_states, report.initial_bounds):
        print(f"x0={x0}: lower bound {bound:.6f}")
    print(f"transitions: {report.transition_count}")
    print(f"verdict: {report.verdict}")
    return 0 if report.verdict == CERTIFIED else 2


def setup(subparsers, parents: list[argparse.ArgumentParser]):
    parser = subparsers.add_parser(
        "run",
        parents=parents,
        help="Abstract, synthesize, simulate and write reports",
    )
    add_config_argument(parser)
    parser.set_defaults(handler=run)
