from .run_config import (
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
from .run_report import CERTIFIED, UNKNOWN, RunReport

__all__ = [
    "NoiseSection",
    "OutputsSection",
    "PartitionSection",
    "PropertySection",
    "RunConfig",
    "ScenarioSection",
    "SetSpec",
    "SimulateSection",
    "SystemSection",
    "TwoLayerSection",
    "CERTIFIED",
    "UNKNOWN",
    "RunReport",
]
