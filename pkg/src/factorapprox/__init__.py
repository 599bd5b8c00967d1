"""Resummation of truncated power series by factor approximants."""

from .approximant import (
    AsymptoticForm,
    Singularity,
    SingularityReport,
    accuracy_estimate,
    evaluate,
    evaluate_grid,
    grid_csv,
    percent_error,
    singularities,
    strong_coupling,
)
from .errors import *  # noqa: F401,F403
from .ode import (
    InitialConditions,
    PolynomialODE,
    Term,
    cubic_oscillator,
    prepare_for_resummation,
    rayleigh,
    taylor_solution,
)
from .precision import DEFAULT_PRECISION, Precision, format_real, parse_real
from .series import LogMoments, Series, log_moments, normalize, series_from_moments, truncated_mul
from .solver import (
    ExpFactor,
    FactorApproximant,
    PowerFactor,
    SolverConfig,
    re_expand,
    reexpansion_residual,
    refine,
    resum,
    solve,
    solve_even,
    solve_odd,
)

__version__ = "0.1.0"
