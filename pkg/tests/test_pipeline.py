import copy
from pathlib import Path

import numpy as np
import pytest
import yaml
from abstraction import locate
from pipeline import (
    CERTIFIED,
    apply_overrides,
    build_systems,
    compare_layers,
    load_config,
    parse_config,
    run_pipeline,
    write_comparison,
)
from pipeline.runner import build_grid, enable
from pipeline.systems import stabilize
from utils.config import DEFAULT_RUNS, DEFAULT_SAMPLES
from utils.errors import AssumptionError, ConfigError, StageError

CONFIGS = Path(__file__).resolve().parents[1] / "configs"

REPORT_FILES = ["bounds.csv", "cross_section.csv", "summary.csv", "policy.txt", "simulation.csv"]


def minimal_document() -> dict:
    return {
        "system": {"A": [[1.2]], "B": [[1.0]]},
        "noise": {"kind": "gaussian", "covariance": [[0.01]]},
        "input_set": {"box": {"lower": [-3.0], "upper": [3.0]}},
        "partition": {"lower": [-5.0], "upper": [5.0], "counts": [10]},
        "property": {"goal": [{"lower": [-1.0], "upper": [1.0]}], "horizon": 4},
    }


def small_integrator() -> dict:
    document = yaml.safe_load((CONFIGS / "integrator_two_layer.yaml").read_text())
    document["partition"] = {
        "lower": [-33.0, -33.0],
        "upper": [33.0, 33.0],
        "counts": [11, 11],
    }
    document["property"]["horizon"] = 4
    document["scenario"]["samples"] = 200
    document["simulate"] = {"runs": 0, "seed": 0, "initial_states": [[-30.0, 0.0]]}
    return document


def run_into(config, directory: Path):
    config.outputs.directory = str(directory)
    return run_pipeline(config)


def test_parse_minimal_defaults():
    config = parse_config(minimal_document())
    assert config.grouping == 1
    assert not config.two_layer.enabled
    assert config.noise.mean == [0.0]
    assert config.simulate.initial_states == [[0.0]]
    assert config.simulate.runs == DEFAULT_RUNS
    assert config.scenario.samples == DEFAULT_SAMPLES
    assert config.property.avoid == []
    assert config.property.avoid_complement


def test_singular_state_matrix_is_rejected():
    document = minimal_document()
    document["system"]["A"] = [[0.0]]
    with pytest.raises(AssumptionError, match="invertible dynamics"):
        parse_config(document)


@pytest.mark.parametrize(
    "edit, field",
    [
        (lambda d: d["property"].pop("horizon"), "property.horizon"),
        (lambda d: d["property"].update(threshold=1.5), "property.threshold"),
        (lambda d: d["partition"].update(counts=[10, 10]), "partition.counts"),
        (lambda d: d["noise"].update(kind="laplace"), "noise.kind"),
        (lambda d: d["property"].update(avoid_complement=False), "property.avoid_complement"),
        (lambda d: d.update(simulate={"initial_states": [[7.0]]}), "simulate.initial_states[0]"),
        (lambda d: d.pop("input_set"), "input_set"),
    ],
)
def test_config_errors_name_the_field(edit, field):
    document = minimal_document()
    edit(document)
    with pytest.raises(ConfigError) as excinfo:
        parse_config(document)
    assert excinfo.value.field == field


def test_grouping_must_square_the_input_matrix():
    document = minimal_document()
    document["system"] = {"A": [[1.0, 1.0], [0.0, 1.0]], "B": [[0.5], [1.0]]}
    document["noise"]["covariance"] = [[0.01, 0.0], [0.0, 0.01]]
    document["input_set"] = {"box": {"lower": [-3.0], "upper": [3.0]}}
    document["partition"] = {"lower": [-5.0, -5.0], "upper": [5.0, 5.0], "counts": [5, 5]}
    document["property"]["goal"] = [{"lower": [-1.0, -1.0], "upper": [1.0, 1.0]}]

    with pytest.raises(ConfigError) as excinfo:
        parse_config(document)
    assert excinfo.value.field == "grouping"

    document["grouping"] = 2
    document["property"]["horizon"] = 3
    with pytest.raises(ConfigError) as excinfo:
        parse_config(document)
    assert excinfo.value.field == "property.horizon"

    document["property"]["horizon"] = 4
    assert parse_config(document).grouping == 2


def test_integrator_config_parses():
    config = load_config(CONFIGS / "integrator_two_layer.yaml")
    assert config.system.A == [[1.5, 1.0], [0.0, 1.1]]
    assert config.system.B == [[1.25, 0.5], [1.0, 1.0]]
    assert config.partition.counts == [41, 41]
    assert config.property.horizon == 16
    assert config.scenario.samples == 3200
    assert config.two_layer.enabled
    assert config.two_layer.Q == [[1.0, 0.0], [0.0, 1.0]]
    assert config.two_layer.abstract_input_set.upper == [20.0, 20.0]


def test_every_shipped_config_parses():
    for path in sorted(CONFIGS.glob("*.yaml")):
        assert load_config(path).property.horizon >= 1


def test_build_systems():
    systems = build_systems(load_config(CONFIGS / "integrator_two_layer.yaml"))
    assert systems.horizon == 16
    assert systems.abstracted is systems.stabilized
    assert np.max(np.abs(np.linalg.eigvals(systems.stabilized.A_cl))) < 1.0

    grouped = build_systems(load_config(CONFIGS / "spacecraft_aligned.yaml"))
    assert grouped.stabilized is None
    assert grouped.abstracted is grouped.effective
    assert grouped.base.input_dim == 2 and grouped.effective.input_dim == 4
    assert grouped.horizon == 8


@pytest.mark.parametrize("name", ["spacecraft_aligned.yaml", "spacecraft_disaligned.yaml"])
def test_spacecraft_layers(name):
    config = load_config(CONFIGS / name)
    systems = build_systems(config)
    grid = build_grid(config)
    anchor = locate(grid.partition, config.simulate.initial_states[0])
    goal = sorted(grid.labels.goal)

    single = enable(grid, systems.effective)
    assert set(single.actions_at(anchor)) & set(goal)

    double = enable(grid, stabilize(config, systems.effective))
    assert double.enabled_pair_count() < 0.3 * single.enabled_pair_count()
    if name == "spacecraft_aligned.yaml":
        assert set(double.actions_at(anchor)) & set(goal)
    else:
        # the drift towards the origin keeps every target out of the far goal
        assert double.enabled[:, goal].nnz == 0


def test_overrides():
    config = parse_config(minimal_document())
    apply_overrides(config, seed=7, samples_file="noise.txt", out="elsewhere")
    assert config.scenario.seed == 7
    assert config.simulate.seed == 7
    assert config.noise.kind == "file"
    assert config.noise.path == "noise.txt"
    assert config.outputs.directory == "elsewhere"

    with pytest.raises(ConfigError):
        apply_overrides(config, seed=-1)


def test_toy_run_writes_reports(toy_config_text, tmp_path):
    report = run_into(parse_config(toy_config_text), tmp_path)

    lines = (tmp_path / "bounds.csv").read_text().splitlines()
    assert lines[0] == "location_id,x1,lower_bound"
    assert len(lines) == 12
    assert lines[-1] == "10,,0.0"

    assert report.verdict == CERTIFIED
    assert report.initial_bounds[0] >= 0.9
    assert report.monte_carlo[0].runs == 50

    for name in REPORT_FILES + ["model.txt"]:
        assert (tmp_path / name).exists()
    assert not (tmp_path / "vector_field.csv").exists()
    assert not [p for p in tmp_path.iterdir() if p.name.startswith(".absynth-")]

    summary = dict(
        line.split(",", 1) for line in (tmp_path / "summary.csv").read_text().splitlines()[1:]
    )
    assert summary["locations"] == "11"
    assert summary["verdict"] == CERTIFIED
    assert summary["noise_generator"] == "numpy-pcg64-standard-normal"
    assert not any(key.startswith("time_") for key in summary)

    simulation = (tmp_path / "simulation.csv").read_text().splitlines()
    assert simulation[0] == "initial_index,seed,outcome,first_goal_step"
    assert len(simulation) == 51


def test_rerun_swaps_the_report_directory(toy_config_text, tmp_path):
    target = tmp_path / "reports"
    target.mkdir()
    (target / "notes.txt").write_text("kept\n")
    (target / "vector_field.csv").write_text("stale\n")

    run_into(parse_config(toy_config_text), target)

    assert (target / "notes.txt").read_text() == "kept\n"
    assert not (target / "vector_field.csv").exists()
    for name in REPORT_FILES:
        assert (target / name).exists()
    assert [p.name for p in tmp_path.iterdir()] == ["reports"]


def test_failed_write_leaves_previous_reports(toy_config_text, tmp_path, monkeypatch):
    target = tmp_path / "reports"
    run_into(parse_config(toy_config_text), target)
    before = {name: (target / name).read_bytes() for name in REPORT_FILES}

    def fail(policy):
        raise OSError("disk full")

    monkeypatch.setattr("pipeline.reports.export_policy_lines", fail)
    with pytest.raises(StageError, match="reports"):
        run_into(parse_config(toy_config_text), target)

    assert {name: (target / name).read_bytes() for name in REPORT_FILES} == before
    assert [p.name for p in tmp_path.iterdir()] == ["reports"]


def test_toy_run_is_reproducible(toy_config_text, tmp_path):
    run_into(parse_config(toy_config_text), tmp_path / "first")
    run_into(parse_config(toy_config_text), tmp_path / "second")
    for name in REPORT_FILES + ["model.txt"]:
        assert (tmp_path / "first" / name).read_bytes() == (tmp_path / "second" / name).read_bytes()


def test_goal_covering_domain_is_certain(toy_config_text, tmp_path):
    document = yaml.safe_load(toy_config_text)
    document["property"]["goal"] = [{"lower": [-5.0], "upper": [5.0]}]
    document["simulate"]["runs"] = 0
    report = run_into(parse_config(document), tmp_path)
    np.testing.assert_array_equal(report.bounds[:10], 1.0)
    assert report.bounds[10] == 0.0
    assert report.monte_carlo == []


def test_timings_are_recorded_on_request(toy_config_text, tmp_path):
    document = yaml.safe_load(toy_config_text)
    document["outputs"]["record_timings"] = True
    run_into(parse_config(document), tmp_path)
    summary = (tmp_path / "summary.csv").read_text()
    assert "time_synthesis," in summary
    assert "time_intervals," in summary


def test_zero_gain_reproduces_single_layer(toy_config_text, tmp_path):
    document = yaml.safe_load(toy_config_text)
    two_layer = copy.deepcopy(document)
    two_layer["two_layer"] = {"enabled": True, "gain": {"matrix": [[0.0]]}}

    run_into(parse_config(document), tmp_path / "single")
    report = run_into(parse_config(two_layer), tmp_path / "double")

    assert report.stabilized is not None
    for name in REPORT_FILES:
        single = (tmp_path / "single" / name).read_bytes()
        assert single == (tmp_path / "double" / name).read_bytes()
    assert (tmp_path / "double" / "vector_field.csv").exists()


def test_failures_are_tagged_with_the_stage(toy_config_text, tmp_path, monkeypatch):
    def broken(model):
        raise RuntimeError("solver exploded")

    monkeypatch.setattr("pipeline.runner.robust_value_iteration", broken)
    config = parse_config(toy_config_text)
    config.outputs.directory = str(tmp_path)
    with pytest.raises(StageError) as excinfo:
        run_pipeline(config)
    assert excinfo.value.stage == "synthesis"
    assert not (tmp_path / "bounds.csv").exists()


def test_short_recording_fails_while_sampling(toy_config_text, tmp_path):
    samples = tmp_path / "noise.txt"
    samples.write_text("# ten recorded samples\n" + "\n".join(["0.01"] * 10) + "\n")
    config = apply_overrides(parse_config(toy_config_text), samples_file=str(samples))
    config.outputs.directory = str(tmp_path / "out")
    with pytest.raises(StageError) as excinfo:
        run_pipeline(config)
    assert excinfo.value.stage == "intervals"
    assert isinstance(excinfo.value.cause, ConfigError)


def test_compare_layers_shrinks_with_u_prime(tmp_path):
    config = parse_config(small_integrator())
    rows = compare_layers(config, [30.0, 20.0, 10.0])

    assert [row.label for row in rows] == ["baseline", "u_prime=30", "u_prime=20", "u_prime=10"]
    assert rows[0].reduction == 0.0
    assert not rows[0].two_layer and all(row.two_layer for row in rows[1:])
    transitions = [row.transitions for row in rows[1:]]
    assert transitions == sorted(transitions, reverse=True)
    assert all(0.0 <= row.bound <= 1.0 for row in rows)

    path = write_comparison(rows, tmp_path)
    lines = path.read_text().splitlines()
    assert lines[0] == "label,two_layer,u_prime,locations,actions,transitions,reduction,bound"
    assert len(lines) == 5


def test_compare_needs_a_gain(toy_config_text):
    with pytest.raises(ConfigError) as excinfo:
        compare_layers(parse_config(toy_config_text), [1.0])
    assert excinfo.value.field == "two_layer.gain"
