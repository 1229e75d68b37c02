from .system import GainValidation, LinearSystem, LQRWeights, StabilizedSystem

__all__ = ["GainValidation", "LinearSystem", "LQRWeights", "StabilizedSystem"]
