import argparse

from pipeline import compare_layers, write_comparison
from utils import get_logger

from .common import add_config_argument, load

logger = get_logger(__name__)


def compare(args: argparse.Namespace) -> int:
    config = load(args)
    rows = compare_layers(config, args.u_prime)
    path = write_comparison(rows, config.outputs.directory)

    for row in rows:
        print(
            f"{row.label:>16}  transitions {row.transitions:>12}  "
            f"reduction {row.reduction:6.1%}  bound {row.bound:.4f}"
        )
    logger.info(f"Wrote {path}")
    return 0


def setup(subparsers, parents: list[argparse.ArgumentParser]):
    parser = subparsers.add_parser(
        "compare",
        parents=parents,
        help="Compare the single-layer abstraction with two-layer ones",
    )
    add_config_argument(parser)
    parser.add_argument(
        "--u-prime",
        type=float,
        nargs="+",
        default=[20.0, 10.0],
        help="half-widths w of the abstract input boxes [-w, w]^p",
    )
    parser.set_defaults(handler=compare)
