"""Benchmark functions with exact Taylor series and independent point evaluators."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import OrderTooLarge
from ..ode import InitialConditions, PolynomialODE, cubic_oscillator, taylor_solution
from ..precision import as_precision, parse_real
from ..series import Series
from .anharmonic import ground_state_energy, partition_coefficients, partition_function
from .rk import integrate_ode
from .rspt import energy_coefficients

__all__ = ["ReferenceFunction", "reference_series", "reference_value", "TAGS", "MAX_ORDER"]

TAGS = ("exp", "sin_shifted", "tan", "x_plus_cos", "Z", "E", "ode_numeric")
MAX_ORDER = 40


@dataclass(frozen=True)
class ReferenceFunction:
    """A benchmark function.

    ``sin_shifted`` denotes ``sin x`` carried as the series of
    ``sin x + shift`` with the shift recorded, ready for resummation.
    ``ode_numeric`` is the solution of ``ode`` from ``ic``.
    """

    tag: str
    shift: object = 0
    ode: PolynomialODE | None = None
    ic: InitialConditions | None = None
    ode_step: float = 1e-3

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown reference function {self.tag!r}; expected one of {TAGS}")


def _tan_coefficient(n: int) -> Fraction:
    """Coefficient of ``x**(2n-1)`` in tan x, from Bernoulli numbers."""
    from mpmath import bernfrac

    p, q = bernfrac(2 * n)
    b2n = Fraction(int(p), int(q))
    factorial = 1
    for j in range(2, 2 * n + 1):
        factorial *= j
    return (-1) ** (n - 1) * 4**n * (4**n - 1) * b2n / factorial


def reference_series(fn: ReferenceFunction, order: int, precision=None) -> Series:
    """Exact raw Taylor coefficients ``a_0..a_order`` at working precision."""
    if order < 0:
        raise ValueError("order must be >= 0")
    if order > MAX_ORDER:
        raise OrderTooLarge(f"order {order} exceeds the precomputed range {MAX_ORDER}")
    precision = as_precision(precision)
    ctx = precision.context()
    shift = 0
    if fn.tag == "exp":
        coeffs = [1 / ctx.factorial(n) for n in range(order + 1)]
    elif fn.tag == "sin_shifted":
        shift = parse_real(fn.shift, ctx)
        coeffs = [
            ctx.zero if n % 2 == 0 else (-1) ** (n // 2) / ctx.factorial(n) for n in range(order + 1)
        ]
        coeffs[0] += shift
    elif fn.tag == "tan":
        coeffs = [ctx.zero] * (order + 1)
        for m in range(1, order + 1, 2):
            c = _tan_coefficient((m + 1) // 2)
            coeffs[m] = ctx.mpf(c.numerator) / c.denominator
    elif fn.tag == "x_plus_cos":
        coeffs = [
            ctx.zero if n % 2 else (-1) ** (n // 2) / ctx.factorial(n) for n in range(order + 1)
        ]
        if order >= 1:
            coeffs[1] += 1
    elif fn.tag == "Z":
        coeffs = partition_coefficients(order, precision)
    elif fn.tag == "E":
        coeffs = [ctx.mpf(c.numerator) / c.denominator for c in energy_coefficients(order)]
    else:
        ode = fn.ode or cubic_oscillator(precision)
        ic = fn.ic or InitialConditions()
        coeffs = list(taylor_solution(ode, ic, max(order, 2), precision).coeffs[: order + 1])
    return Series(tuple(coeffs), None, shift, precision)


def reference_value(fn: ReferenceFunction, x, precision=None):
    """Independent value of the benchmark function at ``x``.

    Elementary functions are evaluated directly at working precision; ``Z`` by
    quadrature, ``E`` by diagonalization and ODE solutions by RK4 (floats).
    """
    precision = as_precision(precision)
    ctx = precision.context()
    if fn.tag == "Z":
        return partition_function(float(x))
    if fn.tag == "E":
        return ground_state_energy(float(x))
    if fn.tag == "ode_numeric":
        ode = fn.ode or cubic_oscillator(precision)
        ic = fn.ic or InitialConditions()
        if float(x) == 0:
            return float(ic.y0)
        return float(integrate_ode(ode, ic, float(x), fn.ode_step).y[-1])
    x = parse_real(x, ctx)
    if fn.tag == "exp":
        return ctx.exp(x)
    if fn.tag == "sin_shifted":
        return ctx.sin(x)
    if fn.tag == "tan":
        return ctx.tan(x)
    return x + ctx.cos(x)
