"""Classical fourth-order Runge-Kutta reference trajectories."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import BlowupDetected

__all__ = ["Trajectory", "integrate_ode", "rk4"]


@dataclass(frozen=True)
class Trajectory:
    t: np.ndarray
    y: np.ndarray
    v: np.ndarray
    error_estimate: float
    """Richardson estimate ``max |y_h - y_{h/2}| / 15`` of the returned ``y``."""

    def rows(self):
        return list(zip(self.t.tolist(), self.y.tolist()))

    def at(self, t: float) -> float:
        return float(np.interp(t, self.t, self.y))


def rk4(rhs, y0: float, v0: float, t_max: float, n_steps: int, bound: float):
    """Integrate ``y'' = rhs(y, y')``; returns arrays over ``n_steps + 1`` points."""
    h = t_max / n_steps
    t = np.linspace(0.0, t_max, n_steps + 1)
    ys = np.empty(n_steps + 1)
    vs = np.empty(n_steps + 1)
    y, v = float(y0), float(v0)
    ys[0], vs[0] = y, v
    for i in range(n_steps):
        k1y, k1v = v, rhs(y, v)
        k2y, k2v = v + 0.5 * h * k1v, rhs(y + 0.5 * h * k1y, v + 0.5 * h * k1v)
        k3y, k3v = v + 0.5 * h * k2v, rhs(y + 0.5 * h * k2y, v + 0.5 * h * k2v)
        k4y, k4v = v + h * k3v, rhs(y + h * k3y, v + h * k3v)
        y += h * (k1y + 2 * k2y + 2 * k3y + k4y) / 6
        v += h * (k1v + 2 * k2v + 2 * k3v + k4v) / 6
        if not (math.isfinite(y) and abs(y) <= bound):
            raise BlowupDetected(
                f"|y| exceeded {bound:g} between t = {t[i]:.6g} and {t[i + 1]:.6g}",
                t_low=float(t[i]),
                t_high=float(t[i + 1]),
                table=(t[: i + 1], ys[: i + 1]),
            )
        ys[i + 1], vs[i + 1] = y, v
    return t, ys, vs


def integrate_ode(ode, ic, t_max: float, step: float = 1e-3, bound: float = 1e6) -> Trajectory:
    """RK4 trajectory of ``ode`` on ``[0, t_max]``, checked against a halved step.

    The returned samples come from the halved-step run, taken on the coarse
    grid. Raises :class:`BlowupDetected` once ``|y|`` passes ``bound``.
    """
    if step <= 0:
        raise ValueError("step must be positive")
    if t_max <= 0:
        raise ValueError("t_max must be positive")
    n = max(1, math.ceil(round(t_max / step, 9)))
    y0, v0 = float(ic.y0), float(ic.v0)
    t, y_coarse, _ = rk4(ode.rhs, y0, v0, t_max, n, bound)
    _, y_fine, v_fine = rk4(ode.rhs, y0, v0, t_max, 2 * n, bound)
    y_fine, v_fine = y_fine[::2], v_fine[::2]
    estimate = float(np.max(np.abs(y_coarse - y_fine))) / 15
    return Trajectory(t, y_fine, v_fine, estimate)
