"""Reference values for the zero-dimensional phi^4 integral and the quartic oscillator."""

from __future__ import annotations

import math

import numpy as np
from scipy import integrate

from ..errors import BasisNonConvergence, QuadratureNonConvergence
from ..precision import as_precision

__all__ = [
    "partition_coefficients",
    "partition_function",
    "ground_state_energy",
    "ground_state_at_basis",
    "basis_frequency",
]

# integrand below 1e-30 beyond the cutoff
_TAIL = 30 * math.log(10)


def partition_coefficients(order: int, precision=None) -> list:
    """``a_n = (-1)**n Gamma(2n + 1/2) / (sqrt(pi) n!)`` for n = 0..order."""
    ctx = as_precision(precision).context()
    root_pi = ctx.sqrt(ctx.pi)
    half = ctx.mpf(1) / 2
    return [
        (-1) ** n * ctx.gamma(2 * n + half) / (root_pi * ctx.factorial(n))
        for n in range(order + 1)
    ]


def partition_function(g: float, abs_tol: float = 1e-12) -> float:
    """``Z(g) = pi**-1/2 * integral exp(-phi**2 - g phi**4) dphi`` by adaptive quadrature.

    The even integrand is integrated on ``[0, L]`` where ``phi**2 + g phi**4``
    reaches ``30 ln 10``.
    """
    if g < 0:
        raise ValueError("Z(g) needs g >= 0")
    if g == 0:
        cutoff = math.sqrt(_TAIL)
    else:
        cutoff = math.sqrt((math.sqrt(1 + 4 * g * _TAIL) - 1) / (2 * g))
    value, err = integrate.quad(
        lambda phi: math.exp(-phi * phi - g * phi**4),
        0.0,
        cutoff,
        epsabs=abs_tol / 4,
        epsrel=1e-14,
        limit=200,
    )
    scale = 2 / math.sqrt(math.pi)
    if not math.isfinite(value) or err * scale > abs_tol:
        raise QuadratureNonConvergence(f"Z({g}): error estimate {err * scale:.3g} > {abs_tol}")
    return value * scale


def basis_frequency(g: float) -> float:
    """Oscillator frequency minimizing the Gaussian trial energy.

    Stationarity of ``W/4 + 1/(4W) + 3g/(4W**2)`` gives ``W**3 - W - 6g = 0``.
    """
    if g == 0:
        return 1.0
    roots = np.roots([1.0, 0.0, -1.0, -6.0 * g])
    return float(max(r.real for r in roots if abs(r.imag) < 1e-9 * abs(r)))


def ground_state_at_basis(g: float, size: int, omega: float | None = None) -> float:
    """Lowest eigenvalue of H restricted to ``size`` oscillator states of frequency ``omega``."""
    omega = basis_frequency(g) if omega is None else omega
    m = size + 4
    lower = np.diag(np.sqrt(np.arange(1.0, m)), 1)
    raising = lower.T
    x = (lower + raising) / math.sqrt(2 * omega)
    d = raising - lower
    p2 = -(omega / 2) * (d @ d)
    x2 = x @ x
    h = 0.5 * p2 + 0.5 * x2 + g * (x2 @ x2)
    return float(np.linalg.eigvalsh(h[:size, :size])[0])


def ground_state_energy(g: float, tol: float = 1e-9, start: int = 32, max_size: int = 4096) -> float:
    """Ground-state energy of ``p**2/2 + x**2/2 + g x**4`` by dense diagonalization.

    The basis size doubles until the eigenvalue moves by less than ``tol``.
    """
    if g < 0:
        raise ValueError("E(g) needs g >= 0")
    if g == 0:
        return 0.5
    omega = basis_frequency(g)
    size = start
    previous = ground_state_at_basis(g, size, omega)
    while size < max_size:
        size *= 2
        current = ground_state_at_basis(g, size, omega)
        if abs(current - previous) < tol:
            return current
        previous = current
    raise BasisNonConvergence(f"E({g}) not converged at basis size {size}")
