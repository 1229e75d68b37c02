import time
from contextlib import contextmanager
from dataclasses import dataclass

import numpy as np
from abstraction import (
    ActionSet,
    LabelSets,
    Partition,
    action_targets,
    build_action_set,
    build_backward_sets,
    build_partition,
    label_locations,
    locate,
)
from dynamics import LinearSystem, StabilizedSystem
from imdp import assemble_imdp, robust_value_iteration
from scenario import (
    IntervalTable,
    SampleSet,
    build_interval_table,
    confidence_budget,
    draw_sample_set,
)
from synthesis import build_controller, monte_carlo
from utils import get_logger
from utils.errors import StageError

from .reports import write_reports
from .systems import Systems, build_objective, build_systems
from .types import RunConfig, RunReport

logger = get_logger(__name__)


@contextmanager
def stage(name: str, timings: dict[str, float]):
    """
    Time a pipeline stage and tag any failure with its name.

    Raises:
        StageError: Wrapping whatever the stage raised
    """
    start = time.perf_counter()
    logger.info(f"Stage '{name}' started")
    try:
        yield
    except StageError:
        raise
    except Exception as e:
        logger.error(f"Stage '{name}' failed: {e}")
        raise StageError(name, e) from e
    finally:
        timings[name] = time.perf_counter() - start


@dataclass(eq=False)
class Grid:
    """Partition-level artifacts shared by every layer of a run."""

    partition: Partition
    targets: np.ndarray
    labels: LabelSets


@dataclass(eq=False)
class Estimate:
    """Noise samples and the interval rows built from them."""

    samples: SampleSet
    beta: float
    intervals: IntervalTable


def build_grid(config: RunConfig) -> Grid:
    partition = build_partition(config.partition.domain, config.partition.counts)
    labels = label_locations(
        partition,
        config.property.goal_boxes,
        config.property.avoid_boxes,
        config.property.avoid_complement,
    )
    return Grid(partition=partition, targets=action_targets(partition), labels=labels)


def estimate_intervals(config: RunConfig, systems: Systems, grid: Grid) -> Estimate:
    """
    Sample the effective noise and build one interval row per action.

    The rows only depend on the targets and the samples, so every layer of a
    run shares them.
    """
    samples = draw_sample_set(
        systems.effective.noise_source, config.scenario.samples, config.scenario.seed
    )
    beta = confidence_budget(
        config.scenario.overall_confidence,
        len(grid.targets),
        grid.partition.location_count,
    )
    intervals = build_interval_table(grid.targets, samples, grid.partition, beta)
    return Estimate(samples=samples, beta=beta, intervals=intervals)


def enable(grid: Grid, system: LinearSystem | StabilizedSystem) -> ActionSet:
    """Backward sets of every target under `system` and the relation they enable."""
    backward_sets = build_backward_sets(system, grid.targets)
    return build_action_set(grid.partition, grid.targets, backward_sets)


def run_pipeline(config: RunConfig, write: bool = True) -> RunReport:
    """
    Run the whole synthesis loop for one configuration.

    Stages: dynamics, partition, backward sets and enabled actions, sampling
    and intervals, assembly, value iteration, simulation; the reports are
    written at the end when `write` is set.

    Args:
        config (RunConfig): Validated configuration
        write (bool): Whether to write the report files to config.outputs.directory

    Returns:
        RunReport: The run's results

    Raises:
        StageError: Tagged with the stage that failed
    """
    timings: dict[str, float] = {}

    with stage("dynamics", timings):
        systems = build_systems(config)
    with stage("partition", timings):
        grid = build_grid(config)
    with stage("enabled", timings):
        actions = enable(grid, systems.abstracted)
    with stage("intervals", timings):
        estimate = estimate_intervals(config, systems, grid)
    with stage("assembly", timings):
        model = assemble_imdp(
            grid.partition, actions.enabled, estimate.intervals, grid.labels, systems.horizon
        )
    with stage("synthesis", timings):
        values, policy = robust_value_iteration(model)

    initial_locations = [
        locate(grid.partition, x) for x in config.simulate.initial_states
    ]
    monte_carlo_reports = []
    with stage("simulation", timings):
        if config.simulate.runs > 0:
            controller = build_controller(
                policy, grid.partition, grid.targets, systems.abstracted
            )
            objective = build_objective(config, systems.horizon)
            for x0, location in zip(config.simulate.initial_states, initial_locations):
                monte_carlo_reports.append(
                    monte_carlo(
                        controller,
                        x0,
                        objective,
                        systems.effective.noise_source,
                        config.simulate.runs,
                        config.simulate.seed,
                        values.lower_bound(location),
                    )
                )

    report = RunReport(
        config=config,
        partition=grid.partition,
        model=model,
        values=values,
        policy=policy,
        initial_locations=initial_locations,
        beta=estimate.beta,
        noise_description=estimate.samples.source,
        sample_seed=estimate.samples.seed,
        timings=timings,
        monte_carlo=monte_carlo_reports,
        stabilized=systems.stabilized,
    )
    logger.info(
        f"Run finished: {report.transition_count} transitions, bounds "
        f"{[round(b, 4) for b in report.initial_bounds]}, verdict {report.verdict}"
    )

    if write:
        with stage("reports", timings):
            write_reports(report, config.outputs.directory)
    return report
