import argparse
import csv
import io
from pathlib import Path

from imdp import parse_policy
from pipeline import build_objective, build_systems
from pipeline.runner import build_grid
from synthesis import build_controller, monte_carlo
from utils import get_logger
from utils.errors import ConfigError

from .common import add_config_argument, load, write_text

logger = get_logger(__name__)


def simulate(args: argparse.Namespace) -> int:
    config = load(args)
    systems = build_systems(config)
    grid = build_grid(config)

    try:
        text = Path(args.policy).read_text()
    except OSError as e:
        raise ConfigError("--policy", f"cannot read {args.policy}: {e}") from e
    policy = parse_policy(text, grid.partition.location_count, systems.horizon)
    if policy.actions.max(initial=-1) >= len(grid.targets):
        raise ConfigError("--policy", "policy refers to actions this abstraction does not have")

    controller = build_controller(policy, grid.partition, grid.targets, systems.abstracted)
    objective = build_objective(config, systems.horizon)
    runs = max(config.simulate.runs, 1)

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["initial_index", "seed", "outcome", "first_goal_step"])
    for i, x0 in enumerate(config.simulate.initial_states):
        report = monte_carlo(
            controller, x0, objective, systems.effective.noise_source, runs, config.simulate.seed
        )
        for record in report.records:
            goal_step = record.first_goal_step
            writer.writerow(
                [i, record.seed, record.outcome.value, "" if goal_step is None else goal_step]
            )
        low, high = report.rate_interval
        print(
            f"x0={x0}: {report.success_count}/{report.runs} satisfied "
            f"(99% interval [{low:.4f}, {high:.4f}])"
        )

    write_text(config.outputs.directory, "simulation.csv", buffer.getvalue())
    return 0


def setup(subparsers, parents: list[argparse.ArgumentParser]):
    parser = subparsers.add_parser(
        "simulate",
        parents=parents,
        help="Simulate the closed loop under a stored policy",
    )
    add_config_argument(parser)
    parser.add_argument("--policy", required=True, help="policy.txt or model.txt with policy lines")
    parser.set_defaults(handler=simulate)
