import json
import math
from fractions import Fraction

import numpy as np
import pytest

from factorapprox import InitialConditions, Precision, cubic_oscillator, rayleigh
from factorapprox.errors import BlowupDetected, OrderTooLarge
from factorapprox.oracles import (
    ReferenceFunction,
    basis_frequency,
    energy_coefficients,
    ground_state_at_basis,
    ground_state_energy,
    integrate_ode,
    partition_coefficients,
    partition_function,
    reference_series,
    reference_value,
)


def test_rspt_low_orders():
    assert energy_coefficients(5) == [
        Fraction(1, 2),
        Fraction(3, 4),
        Fraction(-21, 8),
        Fraction(333, 16),
        Fraction(-30885, 128),
        Fraction(916731, 256),
    ]


def test_rspt_alternates():
    c = energy_coefficients(20)
    for n in range(2, 20):
        assert (c[n] > 0) != (c[n + 1] > 0)


def test_rspt_cache(tmp_path):
    path = tmp_path / "rspt.json"
    first = energy_coefficients(8, path)
    data = json.loads(path.read_text())
    assert data["8"] == f"{first[8].numerator}/{first[8].denominator}"
    assert energy_coefficients(8, path) == first


def test_partition_coefficients_diverge(prec):
    a = partition_coefficients(12, prec)
    assert float(a[0]) == 1.0 and float(a[1]) == pytest.approx(-0.75)
    ratios = [abs(float(a[n + 1] / a[n])) for n in range(1, 12)]
    for n in range(1, 12):
        assert (a[n] > 0) != (a[n + 1] > 0)
    assert all(r2 > r1 for r1, r2 in zip(ratios, ratios[1:]))
    # growth is linear: ratio/n settles near 4
    assert ratios[-1] / 12 == pytest.approx(4, rel=0.2)


def test_partition_function_limits():
    assert partition_function(0) == pytest.approx(1, abs=1e-12)
    g = 1e6
    assert partition_function(g) / (1.022765 * g**-0.25) == pytest.approx(1, abs=1e-3)


def test_ground_state_limits():
    assert ground_state_energy(0) == pytest.approx(0.5, abs=1e-10)
    assert ground_state_energy(1) == pytest.approx(0.8037706512, abs=1e-9)
    g = 1e6
    assert ground_state_energy(g) / (0.667986 * g ** (1 / 3)) == pytest.approx(1, abs=5e-3)


def test_ground_state_monotone():
    values = [ground_state_energy(g) for g in np.linspace(0, 5, 11)]
    assert all(b > a for a, b in zip(values, values[1:]))


def test_basis_frequency_and_convergence():
    w = basis_frequency(1.0)
    assert w**3 - w - 6 == pytest.approx(0, abs=1e-10)
    assert ground_state_at_basis(1.0, 64, w) == pytest.approx(ground_state_energy(1.0), abs=1e-9)


@pytest.mark.parametrize("tag", ["exp", "sin_shifted", "tan", "x_plus_cos", "Z", "E"])
def test_series_consistent_with_values(tag, prec):
    ctx = prec.context()
    fn = ReferenceFunction(tag)
    order = 6
    s = reference_series(fn, order, prec)
    errs = []
    for x in (0.02, 0.01):
        truncated = float(ctx.polyval(list(reversed(s.coeffs)), x)) - float(s.shift)
        errs.append(abs(float(reference_value(fn, x, prec)) - truncated))
    # O(x**7) remainder, with slack for the double-precision oracles
    assert errs[1] <= max(errs[0] / 50, 1e-11)


def test_tan_series():
    s = reference_series(ReferenceFunction("tan"), 7, Precision())
    assert [float(c) for c in s.coeffs] == pytest.approx([0, 1, 0, 1 / 3, 0, 2 / 15, 0, 17 / 315])


def test_order_limit():
    with pytest.raises(OrderTooLarge):
        reference_series(ReferenceFunction("exp"), 41)


def test_unknown_tag():
    with pytest.raises(ValueError):
        ReferenceFunction("cosh")


def test_rk_sine():
    traj = integrate_ode(rayleigh(0), InitialConditions(0, 1), math.pi / 2)
    assert traj.y[-1] == pytest.approx(1, abs=1e-12)
    assert traj.error_estimate < 1e-12


def test_rk_cubic_blowup():
    with pytest.raises(BlowupDetected) as info:
        integrate_ode(cubic_oscillator(), InitialConditions(0, 1), 8.0)
    assert 6.4 < info.value.t_low < 6.6
    assert info.value.t_high - info.value.t_low < 0.01
