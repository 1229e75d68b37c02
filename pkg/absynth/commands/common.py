import argparse
import os
import tempfile
from pathlib import Path

from pipeline import RunConfig, apply_overrides, load_config
from utils.errors import AbsynthError


def add_config_argument(parser: argparse.ArgumentParser):
    parser.add_argument("config", help="YAML run document")


def load(args: argparse.Namespace) -> RunConfig:
    """Load the run document and apply --seed, --samples-file and --out."""
    config = load_config(args.config)
    return apply_overrides(
        config, seed=args.seed, samples_file=args.samples_file, out=args.out
    )


def write_text(directory: str | Path, name: str, text: str) -> Path:
    """Write a text file atomically inside `directory`."""
    directory = Path(directory)
    target = directory / name
    try:
        directory.mkdir(parents=True, exist_ok=True)
        fd, temp_path = tempfile.mkstemp(suffix=".txt", dir=directory)
        with os.fdopen(fd, "w") as f:
            f.write(text)
        os.replace(temp_path, target)
    except OSError as e:
        raise AbsynthError(f"cannot write {target}: {e}") from e
    return target
