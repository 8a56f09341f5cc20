"""Model parameters of the Rabi / Jaynes-Cummings family and derived scalars.

Units: hbar = 1, so every energy is an angular frequency.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass


class ParameterError(ValueError):
    """Raised when a model parameter violates its invariant."""

    def __init__(self, field: str, message: str):
        super().__init__(message)
        self.field = field


@dataclass(frozen=True)
class ModelParams:
    omega: float = 1.0
    omega0: float = 1.0
    g: float = 0.1
    r: float = 0.0

    def replace(self, **changes) -> "ModelParams":
        values = asdict(self)
        values.update(changes)
        return ModelParams(**values)

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class DerivedParams:
    alpha: float
    alpha_bar: float
    beta_sq: float
    g_c: float


def _positive(value, field, message):
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise ParameterError(field, f"{field} must be a number")
    if not math.isfinite(value) or value <= 0:
        raise ParameterError(field, message)


def validate(params: ModelParams) -> None:
    """Raise :class:`ParameterError` naming the first violated field."""
    _positive(params.omega, "omega", "omega must be positive")
    _positive(params.omega0, "omega0", "omega0 must be positive")
    _positive(params.g, "g", "coupling must be positive")
    r = params.r
    if not isinstance(r, (int, float)) or isinstance(r, bool) or not math.isfinite(r):
        raise ParameterError("r", "r must be a number")
    if not -1.0 <= r <= 1.0:
        raise ParameterError("r", "chirality out of range")


def derive(params: ModelParams) -> DerivedParams:
    validate(params)
    w, w0, g = params.omega, params.omega0, params.g
    return DerivedParams(
        alpha=(w0 - w) / (2 * g),
        alpha_bar=(w0 + w) / (2 * g),
        beta_sq=w0 * w / (4 * g * g),
        g_c=0.5 * math.sqrt(w0 * w),
    )


def critical_coupling(omega: float, omega0: float) -> float:
    return 0.5 * math.sqrt(omega0 * omega)
