import csv
import os
import shutil
import tempfile
from pathlib import Path

import numpy as np
from imdp import export_interval_model
from imdp.export import export_policy_lines
from utils import get_logger
from utils.errors import AbsynthError

from .types import RunReport

logger = get_logger(__name__)


def _number(value: float) -> str:
    return repr(float(value))


def _coordinate_header(n: int, prefix: str = "x") -> list[str]:
    return [f"{prefix}{i + 1}" for i in range(n)]


def _write_csv(path: Path, header: list[str], rows: list[list]):
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def bound_rows(report: RunReport) -> list[list]:
    """One row per location: id, region centre (blank for the sink), bound."""
    partition = report.partition
    rows = []
    for s, center in enumerate(partition.centers):
        rows.append([s, *map(_number, center), _number(report.bounds[s])])
    sink = partition.sink_id
    rows.append([sink, *[""] * partition.dimension, _number(report.bounds[sink])])
    return rows


def cross_section_rows(report: RunReport) -> list[list]:
    """
    Regions in line with the first initial location along the first axis.

    Keeps the regions whose centre agrees with that location's centre in
    every coordinate but the first.
    """
    partition = report.partition
    anchor = report.initial_locations[0] if report.initial_locations else None
    if anchor is None or anchor == partition.sink_id:
        return []
    centers = partition.centers
    in_line = np.all(centers[:, 1:] == centers[anchor, 1:], axis=1)
    return [
        [int(s), *map(_number, centers[s]), _number(report.bounds[s])]
        for s in np.flatnonzero(in_line)
    ]


def summary_rows(report: RunReport) -> list[list]:
    model = report.model
    rows = [
        ["locations", model.location_count],
        ["actions", model.action_count],
        ["enabled_pairs", int(model.enabled.nnz)],
        ["transitions", report.transition_count],
        ["horizon", model.horizon],
        ["samples", model.intervals.sample_count],
        ["beta", _number(report.beta)],
        ["noise", report.noise_description],
        ["noise_generator", "numpy-pcg64-standard-normal"],
        ["sample_seed", "" if report.sample_seed is None else report.sample_seed],
        ["simulation_seed", report.config.simulate.seed],
        ["threshold", _number(report.config.property.threshold)],
    ]
    for i, (location, bound) in enumerate(zip(report.initial_locations, report.initial_bounds)):
        rows.append([f"initial_{i}_location", location])
        rows.append([f"initial_{i}_bound", _number(bound)])
    for i, mc in enumerate(report.monte_carlo):
        rows.append([f"initial_{i}_runs", mc.runs])
        rows.append([f"initial_{i}_successes", mc.success_count])
        rows.append([f"initial_{i}_empirical_rate", _number(mc.empirical_rate)])
        rows.append([f"initial_{i}_rate_low", _number(mc.rate_interval[0])])
        rows.append([f"initial_{i}_rate_high", _number(mc.rate_interval[1])])
    if report.config.outputs.record_timings:
        for name, seconds in report.timings.items():
            rows.append([f"time_{name}", f"{seconds:.6f}"])
    rows.append(["verdict", report.verdict])
    return rows


def simulation_rows(report: RunReport) -> list[list]:
    rows = []
    for i, mc in enumerate(report.monte_carlo):
        for record in mc.records:
            rows.append(
                [
                    i,
                    record.seed,
                    record.outcome.value,
                    "" if record.first_goal_step is None else record.first_goal_step,
                ]
            )
    return rows


def vector_field_rows(report: RunReport) -> list[list]:
    A_cl = report.stabilized.A_cl
    return [
        [*map(_number, center), *map(_number, A_cl @ center)]
        for center in report.partition.centers
    ]


REPORT_FILES = (
    "bounds.csv",
    "cross_section.csv",
    "summary.csv",
    "policy.txt",
    "simulation.csv",
    "model.txt",
    "vector_field.csv",
)


def _carry_over(directory: Path, staging: Path):
    """Copy entries of an existing report directory that a run does not own."""
    if not directory.is_dir():
        return
    for entry in directory.iterdir():
        if entry.name in REPORT_FILES:
            continue
        if entry.is_dir():
            shutil.copytree(entry, staging / entry.name, symlinks=True)
        else:
            shutil.copy2(entry, staging / entry.name, follow_symlinks=False)


def _swap(staging: Path, directory: Path):
    """Put the staged directory in place of the target in two renames."""
    if not directory.exists():
        os.rename(staging, directory)
        return
    retired = staging.with_name(staging.name.replace("-new-", "-old-", 1))
    os.rename(directory, retired)
    try:
        os.rename(staging, directory)
    except OSError:
        os.rename(retired, directory)
        raise
    shutil.rmtree(retired, ignore_errors=True)


def write_reports(report: RunReport, directory: str | Path) -> list[Path]:
    """
    Write every report file of a run.

    The whole report set is written to a sibling directory, together with a
    copy of any other files already in the target, and the two directories
    are then swapped. Readers see either the previous report set or the new
    one, never a mix; report files of the previous run that this run does not
    produce are dropped.

    Files:
        bounds.csv, cross_section.csv, summary.csv, policy.txt, simulation.csv,
        model.txt (when outputs.export_model is set),
        vector_field.csv (two-layer runs only)

    Args:
        report (RunReport): Results of a run
        directory: Target directory, created if missing

    Returns:
        list[Path]: The written files
    """
    directory = Path(directory).resolve()
    n = report.partition.dimension
    try:
        directory.parent.mkdir(parents=True, exist_ok=True)
        staging = Path(tempfile.mkdtemp(prefix=f".{directory.name}-new-", dir=directory.parent))
    except OSError as e:
        raise AbsynthError(f"cannot create report directory {directory}: {e}") from e

    try:
        bound_header = ["location_id", *_coordinate_header(n), "lower_bound"]
        _write_csv(staging / "bounds.csv", bound_header, bound_rows(report))
        _write_csv(staging / "cross_section.csv", bound_header, cross_section_rows(report))
        _write_csv(staging / "summary.csv", ["metric", "value"], summary_rows(report))
        _write_csv(
            staging / "simulation.csv",
            ["initial_index", "seed", "outcome", "first_goal_step"],
            simulation_rows(report),
        )

        model = report.model
        header = f"imdp {model.location_count} {model.action_count} {model.horizon}"
        policy_text = "\n".join([header, *export_policy_lines(report.policy)]) + "\n"
        (staging / "policy.txt").write_text(policy_text)

        if report.config.outputs.export_model:
            (staging / "model.txt").write_text(
                export_interval_model(report.model, report.policy)
            )
        if report.stabilized is not None:
            _write_csv(
                staging / "vector_field.csv",
                [*_coordinate_header(n), *_coordinate_header(n, "next_x")],
                vector_field_rows(report),
            )

        written = [directory / path.name for path in sorted(staging.iterdir())]
        _carry_over(directory, staging)
        _swap(staging, directory)
    except OSError as e:
        raise AbsynthError(f"cannot write reports to {directory}: {e}") from e
    finally:
        shutil.rmtree(staging, ignore_errors=True)

    logger.info(f"Wrote {len(written)} report files to {directory}")
    return written
