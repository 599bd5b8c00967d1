"""Independent reference computations used to check the resummation."""

from .anharmonic import (
    basis_frequency,
    ground_state_at_basis,
    ground_state_energy,
    partition_coefficients,
    partition_function,
)
from .functions import MAX_ORDER, TAGS, ReferenceFunction, reference_series, reference_value
from .rk import Trajectory, integrate_ode
from .rspt import energy_coefficients

__all__ = [
    "ReferenceFunction",
    "reference_series",
    "reference_value",
    "partition_coefficients",
    "partition_function",
    "ground_state_energy",
    "ground_state_at_basis",
    "basis_frequency",
    "energy_coefficients",
    "integrate_ode",
    "Trajectory",
    "MAX_ORDER",
    "TAGS",
]
