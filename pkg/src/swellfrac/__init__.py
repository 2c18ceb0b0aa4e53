"""Numerical laboratory for a swelling porous-elastic system with one
internal fractional damping, realized through its augmented diffusive form."""

from .model import (
    DEFAULT_PARAMS,
    DerivedConstants,
    PhysicalParams,
    ValidationReport,
    diffusive_gain,
    diffusive_weight,
    limit_speeds,
    mode_frequency,
    require_valid,
    validate_params,
)
from .kernel import (
    CALIBRATION_GRID,
    DYNAMICS_GRID,
    DiffusiveGrid,
    SignalSamples,
    build_grid,
    caputo_derivative,
    check_weight_integral,
    diffusive_realize,
    exact_weight_integral,
    fractional_integral,
)

__version__ = "0.1.0"
