import csv
import os
import tempfile
from dataclasses import asdict, dataclass
from pathlib import Path

from abstraction import locate
from geometry import HalfspacePolytope
from imdp import assemble_imdp, robust_value_iteration
from utils import get_logger
from utils.errors import AbsynthError, ConfigError

from .runner import build_grid, enable, estimate_intervals, stage
from .systems import build_systems, stabilize
from .types import RunConfig

logger = get_logger(__name__)

COMPARISON_COLUMNS = [
    "label",
    "two_layer",
    "u_prime",
    "locations",
    "actions",
    "transitions",
    "reduction",
    "bound",
]


@dataclass
class ComparisonRow:
    """
    One abstraction of a layer comparison.

    - label: "baseline" or "u_prime=<w>"
    - u_prime: half-width of the abstract input box, blank for the baseline
    - reduction: 1 - transitions / baseline transitions
    - bound: certified bound at the first initial state
    """

    label: str
    two_layer: bool
    u_prime: str
    locations: int
    actions: int
    transitions: int
    reduction: float
    bound: float


def compare_layers(config: RunConfig, half_widths: list[float]) -> list[ComparisonRow]:
    """
    Compare the single-layer abstraction with two-layer ones over shrinking U'.

    Every abstraction shares the partition, the noise samples and the interval
    rows; only the enabled relation changes with the layer and U'.

    Args:
        config (RunConfig): Configuration providing the two-layer gain
        half_widths (list[float]): U' = [-w, w]^p for each w

    Returns:
        list[ComparisonRow]: Baseline first, then one row per half-width in order
    """
    section = config.two_layer
    if section.gain is None and section.Q is None:
        raise ConfigError("two_layer.gain", "a gain is needed to compare layers")
    if any(w <= 0 for w in half_widths):
        raise ConfigError("--u-prime", "half-widths must be positive")

    timings: dict[str, float] = {}
    with stage("dynamics", timings):
        systems = build_systems(config)
    with stage("partition", timings):
        grid = build_grid(config)
    with stage("intervals", timings):
        estimate = estimate_intervals(config, systems, grid)

    anchor = locate(grid.partition, config.simulate.initial_states[0])
    p = systems.effective.input_dim
    layers = [("baseline", systems.effective, "")]
    for w in half_widths:
        box = HalfspacePolytope.from_box([-w] * p, [w] * p)
        with stage("dynamics", timings):
            stabilized = stabilize(config, systems.effective, box)
        layers.append((f"u_prime={w:g}", stabilized, f"{w:g}"))

    rows: list[ComparisonRow] = []
    for label, system, u_prime in layers:
        with stage(f"abstraction {label}", timings):
            actions = enable(grid, system)
            model = assemble_imdp(
                grid.partition, actions.enabled, estimate.intervals, grid.labels, systems.horizon
            )
            values, _ = robust_value_iteration(model)

        transitions = model.transition_count
        baseline = rows[0].transitions if rows else transitions
        rows.append(
            ComparisonRow(
                label=label,
                two_layer=bool(u_prime),
                u_prime=u_prime,
                locations=model.location_count,
                actions=model.action_count,
                transitions=transitions,
                reduction=1.0 - transitions / baseline if baseline else 0.0,
                bound=values.lower_bound(anchor),
            )
        )
        logger.info(f"{label}: {transitions} transitions, bound {rows[-1].bound:.4f}")

    return rows


def write_comparison(rows: list[ComparisonRow], directory: str | Path) -> Path:
    """Write comparison.csv atomically and return its path."""
    directory = Path(directory)
    target = directory / "comparison.csv"
    try:
        directory.mkdir(parents=True, exist_ok=True)
        fd, temp_path = tempfile.mkstemp(suffix=".csv", dir=directory)
        with os.fdopen(fd, "w", newline="") as f:
            writer = csv.DictWriter(f, COMPARISON_COLUMNS, lineterminator="\n")
            writer.writeheader()
            for row in rows:
                data = asdict(row)
                data["reduction"] = repr(float(row.reduction))
                data["bound"] = repr(float(row.bound))
                writer.writerow(data)
        os.replace(temp_path, target)
    except OSError as e:
        raise AbsynthError(f"cannot write {target}: {e}") from e
    return target
