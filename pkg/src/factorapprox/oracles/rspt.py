"""Rayleigh-Schroedinger perturbation series of the quartic oscillator ground state.

``H = p**2/2 + x**2/2 + g x**4`` is expanded in the unnormalized number states
``|n) = (a^dagger)**n |0>``, for which ``a^dagger |n) = |n+1)`` and
``a |n) = n |n-1)``. All matrix elements of ``x**4 = (a + a^dagger)**4 / 4``
are then rational, so every energy coefficient is an exact Fraction. The
states stay orthogonal, so the overlap with ``|0)`` is simply the ``|0)``
component, and intermediate normalization keeps that component at zero
beyond the zeroth order.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

__all__ = ["energy_coefficients"]


def _apply_x(state: dict) -> dict:
    out: dict = {}
    for n, c in state.items():
        out[n + 1] = out.get(n + 1, 0) + c
        if n:
            out[n - 1] = out.get(n - 1, 0) + n * c
    return out


def _apply_quartic(state: dict) -> dict:
    for _ in range(4):
        state = _apply_x(state)
    return {n: Fraction(c, 4) for n, c in state.items() if c}


def _compute(order: int) -> list[Fraction]:
    energies = [Fraction(1, 2)]
    states = [{0: Fraction(1)}]
    for k in range(1, order + 1):
        v_prev = _apply_quartic(states[k - 1])
        e_k = v_prev.get(0, Fraction(0))
        energies.append(e_k)
        # (H0 - E0) psi_k = -V psi_{k-1} + sum_{j=1..k} E_j psi_{k-j}
        support = set(v_prev)
        for j in range(1, k + 1):
            support.update(states[k - j])
        support.discard(0)
        psi = {}
        for n in sorted(support):
            acc = -v_prev.get(n, 0)
            for j in range(1, k + 1):
                c = states[k - j].get(n)
                if c:
                    acc += energies[j] * c
            if acc:
                psi[n] = acc / n
        states.append(psi)
    return energies


def energy_coefficients(order: int, cache_path: str | Path | None = None) -> list[Fraction]:
    """Exact ``E_0..E_order`` of ``E(g) = sum E_k g**k``.

    With ``cache_path`` the coefficients are read from / merged into a JSON file
    ``{"<k>": "<numerator>/<denominator>"}``.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    cached: dict = {}
    if cache_path is not None and Path(cache_path).exists():
        cached = json.loads(Path(cache_path).read_text())
        if all(str(k) in cached for k in range(order + 1)):
            return [Fraction(cached[str(k)]) for k in range(order + 1)]
    coeffs = _compute(order)
    if cache_path is not None:
        cached.update({str(k): str(c) for k, c in enumerate(coeffs)})
        ordered = dict(sorted(cached.items(), key=lambda kv: int(kv[0])))
        Path(cache_path).write_text(json.dumps(ordered, indent=1))
    return coeffs
