from pathlib import Path
from typing import Any, Optional

import yaml
from dynamics import clohessy_wiltshire
from utils import get_logger
from utils.config import DEFAULT_CONFIDENCE, DEFAULT_RUNS, DEFAULT_SAMPLES, OUTPUT_DIR
from utils.errors import ConfigError

from .systems import build_systems
from .types import (
    NoiseSection,
    OutputsSection,
    PartitionSection,
    PropertySection,
    RunConfig,
    ScenarioSection,
    SetSpec,
    SimulateSection,
    SystemSection,
    TwoLayerSection,
)

logger = get_logger(__name__)

MODELS = {"clohessy_wiltshire": clohessy_wiltshire}


def _mapping(value: Any, path: str) -> dict:
    if not isinstance(value, dict):
        raise ConfigError(path, f"expected a mapping, got {type(value).__name__}")
    return value


def _require(section: dict, key: str, path: str) -> Any:
    if key not in section or section[key] is None:
        raise ConfigError(f"{path}.{key}" if path else key, "is required")
    return section[key]


def _number(value: Any, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(path, f"expected a number, got {value!r}")
    return float(value)


def _integer(value: Any, path: str, minimum: Optional[int] = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(path, f"expected an integer, got {value!r}")
    if minimum is not None and value < minimum:
        raise ConfigError(path, f"must be at least {minimum}, got {value}")
    return value


def _flag(value: Any, path: str) -> bool:
    if not isinstance(value, bool):
        raise ConfigError(path, f"expected true or false, got {value!r}")
    return value


def _vector(value: Any, path: str, length: Optional[int] = None) -> list[float]:
    if not isinstance(value, list):
        raise ConfigError(path, f"expected a list of numbers, got {value!r}")
    vector = [_number(v, f"{path}[{i}]") for i, v in enumerate(value)]
    if length is not None and len(vector) != length:
        raise ConfigError(path, f"expected {length} entries, got {len(vector)}")
    return vector


def _matrix(
    value: Any, path: str, rows: Optional[int] = None, cols: Optional[int] = None
) -> list[list[float]]:
    if not isinstance(value, list) or not value:
        raise ConfigError(path, "expected a non-empty list of rows")
    matrix = [_vector(row, f"{path}[{i}]") for i, row in enumerate(value)]
    width = len(matrix[0])
    if width == 0 or any(len(row) != width for row in matrix):
        raise ConfigError(path, "rows must be non-empty and of equal length")
    if rows is not None and len(matrix) != rows:
        raise ConfigError(path, f"expected {rows} rows, got {len(matrix)}")
    if cols is not None and width != cols:
        raise ConfigError(path, f"expected {cols} columns, got {width}")
    return matrix


def _box(value: Any, path: str, dimension: int) -> dict:
    box = _mapping(value, path)
    lower = _vector(_require(box, "lower", path), f"{path}.lower", dimension)
    upper = _vector(_require(box, "upper", path), f"{path}.upper", dimension)
    if any(lo > hi for lo, hi in zip(lower, upper)):
        raise ConfigError(path, "lower corner exceeds upper corner")
    return {"lower": lower, "upper": upper}


def _set_spec(value: Any, path: str, dimension: int) -> SetSpec:
    spec = _mapping(value, path)
    if "box" in spec:
        box = _box(spec["box"], f"{path}.box", dimension)
        return SetSpec(lower=box["lower"], upper=box["upper"])
    if "halfspaces" in spec:
        rows = _mapping(spec["halfspaces"], f"{path}.halfspaces")
        matrix = _matrix(
            _require(rows, "matrix", f"{path}.halfspaces"),
            f"{path}.halfspaces.matrix",
            cols=dimension,
        )
        offset = _vector(
            _require(rows, "offset", f"{path}.halfspaces"),
            f"{path}.halfspaces.offset",
            len(matrix),
        )
        return SetSpec(matrix=matrix, offset=offset)
    raise ConfigError(path, "expected 'box' or 'halfspaces'")


def _system(value: Any) -> SystemSection:
    section = _mapping(value, "system")
    if "model" in section:
        name = section["model"]
        if name not in MODELS:
            raise ConfigError("system.model", f"unknown model '{name}'")
        parameters = {k: v for k, v in section.items() if k != "model"}
        try:
            A, B = MODELS[name](
                **{k: _number(v, f"system.{k}") for k, v in parameters.items()}
            )
        except TypeError as e:
            raise ConfigError("system", f"bad parameters for model '{name}': {e}") from e
        return SystemSection(A=A.tolist(), B=B.tolist(), model=name, parameters=parameters)

    A = _matrix(_require(section, "A", "system"), "system.A")
    if len(A) != len(A[0]):
        raise ConfigError("system.A", "must be square")
    B = _matrix(_require(section, "B", "system"), "system.B", rows=len(A))
    return SystemSection(A=A, B=B)


def _noise(value: Any, n: int) -> NoiseSection:
    section = _mapping(value, "noise")
    kind = section.get("kind", "gaussian")
    if kind == "gaussian":
        mean = _vector(section.get("mean", [0.0] * n), "noise.mean", n)
        covariance = _matrix(
            _require(section, "covariance", "noise"), "noise.covariance", n, n
        )
        return NoiseSection(kind=kind, mean=mean, covariance=covariance)
    if kind == "file":
        path = _require(section, "path", "noise")
        if not isinstance(path, str):
            raise ConfigError("noise.path", "expected a file path")
        return NoiseSection(kind=kind, path=path)
    raise ConfigError("noise.kind", f"expected 'gaussian' or 'file', got {kind!r}")


def _two_layer(value: Any, n: int, p: int) -> TwoLayerSection:
    if value is None:
        return TwoLayerSection()
    section = _mapping(value, "two_layer")
    enabled = _flag(section.get("enabled", False), "two_layer.enabled")

    gain, Q, R = None, None, None
    gain_spec = section.get("gain")
    if gain_spec is not None:
        gain_spec = _mapping(gain_spec, "two_layer.gain")
        if "matrix" in gain_spec:
            gain = _matrix(gain_spec["matrix"], "two_layer.gain.matrix", p, n)
        elif "lqr" in gain_spec:
            lqr = _mapping(gain_spec["lqr"], "two_layer.gain.lqr")
            Q = _matrix(_require(lqr, "Q", "two_layer.gain.lqr"), "two_layer.gain.lqr.Q", n, n)
            R = _matrix(_require(lqr, "R", "two_layer.gain.lqr"), "two_layer.gain.lqr.R", p, p)
        else:
            raise ConfigError("two_layer.gain", "expected 'matrix' or 'lqr'")
    elif enabled:
        raise ConfigError("two_layer.gain", "is required when the two-layer scheme is enabled")

    abstract = section.get("abstract_input_set")
    return TwoLayerSection(
        enabled=enabled,
        gain=gain,
        Q=Q,
        R=R,
        abstract_input_set=(
            _set_spec(abstract, "two_layer.abstract_input_set", p) if abstract else None
        ),
    )


def _property(value: Any, n: int) -> PropertySection:
    section = _mapping(value, "property")
    goal = _require(section, "goal", "property")
    avoid = section.get("avoid") or []
    if not isinstance(goal, list) or not goal:
        raise ConfigError("property.goal", "expected a non-empty list of boxes")
    if not isinstance(avoid, list):
        raise ConfigError("property.avoid", "expected a list of boxes")

    threshold = _number(section.get("threshold", 0.0), "property.threshold")
    if not 0.0 <= threshold <= 1.0:
        raise ConfigError("property.threshold", f"must lie in [0, 1], got {threshold}")

    avoid_complement = _flag(
        section.get("avoid_complement", True), "property.avoid_complement"
    )
    if not avoid_complement:
        raise ConfigError(
            "property.avoid_complement", "the sink (leaving X) must be labeled unsafe"
        )

    return PropertySection(
        goal=[_box(box, f"property.goal[{i}]", n) for i, box in enumerate(goal)],
        avoid=[_box(box, f"property.avoid[{i}]", n) for i, box in enumerate(avoid)],
        avoid_complement=avoid_complement,
        horizon=_integer(_require(section, "horizon", "property"), "property.horizon", 1),
        threshold=threshold,
    )


def _partition(value: Any, n: int) -> PartitionSection:
    section = _mapping(value, "partition")
    box = _box(section, "partition", n)
    counts = _require(section, "counts", "partition")
    if not isinstance(counts, list) or len(counts) != n:
        raise ConfigError("partition.counts", f"expected {n} region counts")
    counts = [_integer(c, f"partition.counts[{i}]", 1) for i, c in enumerate(counts)]
    if any(lo >= hi for lo, hi in zip(box["lower"], box["upper"])):
        raise ConfigError("partition", "X must have positive width in every dimension")
    return PartitionSection(lower=box["lower"], upper=box["upper"], counts=counts)


def _scenario(value: Any) -> ScenarioSection:
    section = _mapping(value or {}, "scenario")
    confidence = _number(
        section.get("overall_confidence", DEFAULT_CONFIDENCE), "scenario.overall_confidence"
    )
    if not 0.0 < confidence < 1.0:
        raise ConfigError("scenario.overall_confidence", f"must lie in (0, 1), got {confidence}")
    return ScenarioSection(
        samples=_integer(section.get("samples", DEFAULT_SAMPLES), "scenario.samples", 1),
        overall_confidence=confidence,
        seed=_integer(section.get("seed", 0), "scenario.seed", 0),
    )


def _simulate(value: Any, partition: PartitionSection) -> SimulateSection:
    section = _mapping(value or {}, "simulate")
    n = len(partition.lower)
    states = section.get("initial_states")
    if states is None:
        states = [[(lo + hi) / 2.0 for lo, hi in zip(partition.lower, partition.upper)]]
    states = _matrix(states, "simulate.initial_states", cols=n)
    for i, x in enumerate(states):
        if any(v < lo or v > hi for v, lo, hi in zip(x, partition.lower, partition.upper)):
            raise ConfigError(f"simulate.initial_states[{i}]", "must lie inside X")
    return SimulateSection(
        runs=_integer(section.get("runs", DEFAULT_RUNS), "simulate.runs", 0),
        seed=_integer(section.get("seed", 0), "simulate.seed", 0),
        initial_states=states,
    )


def _outputs(value: Any) -> OutputsSection:
    section = _mapping(value or {}, "outputs")
    directory = section.get("directory", OUTPUT_DIR)
    if not isinstance(directory, str) or not directory:
        raise ConfigError("outputs.directory", "expected a directory path")
    return OutputsSection(
        directory=directory,
        export_model=_flag(section.get("export_model", False), "outputs.export_model"),
        record_timings=_flag(section.get("record_timings", False), "outputs.record_timings"),
    )


def parse_config(document: str | dict, base_dir: Optional[str | Path] = None) -> RunConfig:
    """
    Parse and validate a YAML run document.

    Structural checks happen here; the system assumptions (invertible A,
    controllability, gain admissibility, 0 in U') are checked by building the
    systems once.

    Args:
        document: YAML text or an already loaded mapping
        base_dir: Directory that relative noise file paths are resolved against

    Returns:
        RunConfig: The validated configuration

    Raises:
        ConfigError: For missing, ill-typed or inconsistent fields
        AssumptionError: For violated system assumptions
    """
    if isinstance(document, str):
        try:
            document = yaml.safe_load(document)
        except yaml.YAMLError as e:
            raise ConfigError("document", f"not valid YAML: {e}") from e
    root = _mapping(document, "document")

    system = _system(_require(root, "system", ""))
    n, p = system.state_dim, system.input_dim

    noise = _noise(_require(root, "noise", ""), n)
    if noise.kind == "file" and base_dir is not None and not Path(noise.path).is_absolute():
        noise.path = str(Path(base_dir) / noise.path)

    partition = _partition(_require(root, "partition", ""), n)
    grouping = _integer(root.get("grouping", 1), "grouping", 1)
    if grouping * p != n:
        raise ConfigError(
            "grouping",
            f"{grouping} steps of {p} inputs do not give a square input matrix for {n} states",
        )

    config = RunConfig(
        system=system,
        noise=noise,
        input_set=_set_spec(_require(root, "input_set", ""), "input_set", p),
        partition=partition,
        property=_property(_require(root, "property", ""), n),
        scenario=_scenario(root.get("scenario")),
        simulate=_simulate(root.get("simulate"), partition),
        outputs=_outputs(root.get("outputs")),
        two_layer=_two_layer(root.get("two_layer"), n, p * grouping),
        grouping=grouping,
    )
    if config.property.horizon % grouping:
        raise ConfigError(
            "property.horizon",
            f"{config.property.horizon} is not divisible by grouping {grouping}",
        )

    build_systems(config)
    logger.info(f"Parsed run config ({n} states, {p} inputs, grouping {grouping})")
    return config


def load_config(path: str | Path) -> RunConfig:
    """Read and parse a YAML run document from disk."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ConfigError("document", f"cannot read {path}: {e}") from e
    return parse_config(text, base_dir=path.parent)


def apply_overrides(
    config: RunConfig,
    seed: Optional[int] = None,
    samples_file: Optional[str] = None,
    out: Optional[str] = None,
) -> RunConfig:
    """
    Apply command-line overrides in place.

    Args:
        config (RunConfig): Parsed configuration
        seed: Seed for both the scenario samples and the simulations
        samples_file: Recorded noise replacing the noise section
        out: Report directory

    Returns:
        RunConfig: The same configuration object
    """
    if seed is not None:
        if seed < 0:
            raise ConfigError("--seed", f"must be non-negative, got {seed}")
        config.scenario.seed = seed
        config.simulate.seed = seed
    if samples_file is not None:
        config.noise = NoiseSection(kind="file", path=samples_file)
    if out is not None:
        config.outputs.directory = out
    return config
