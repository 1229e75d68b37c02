import argparse

from imdp import export_interval_model
from pipeline import run_pipeline
from utils import get_logger

from .common import add_config_argument, load, write_text

logger = get_logger(__name__)


def export(args: argparse.Namespace) -> int:
    config = load(args)
    config.simulate.runs = 0
    report = run_pipeline(config, write=False)

    path = write_text(
        config.outputs.directory,
        "model.txt",
        export_interval_model(report.model, report.policy),
    )
    logger.info(f"Exported iMDP with {report.transition_count} transitions to {path}")
    print(path)
    return 0


def setup(subparsers, parents: list[argparse.ArgumentParser]):
    parser = subparsers.add_parser(
        "export",
        parents=parents,
        help="Write the iMDP and its policy in the interval text format",
    )
    add_config_argument(parser)
    parser.set_defaults(handler=export)
