import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from factorapprox import (
    DomainError,
    ExpFactor,
    ExponentialAsymptote,
    FactorApproximant,
    NonRealResult,
    PowerFactor,
    ShiftObstruction,
    ZeroReference,
    accuracy_estimate,
    evaluate,
    evaluate_grid,
    grid_csv,
    percent_error,
    resum,
    singularities,
    strong_coupling,
)
from factorapprox.bench import sin_approximant, tan_approximant
from factorapprox.oracles import ReferenceFunction, reference_series


def approx_of(*factors, **kw):
    return FactorApproximant(order=2 * len(factors), factors=factors, **kw)


def test_square():
    assert evaluate(approx_of(PowerFactor(1, 2)), 1) == 4


def test_conjugate_pair_is_real(ctx):
    a = approx_of(PowerFactor(ctx.mpc(0, 1), -0.5), PowerFactor(ctx.mpc(0, -1), -0.5))
    assert float(evaluate(a, 1)) == pytest.approx(1 / math.sqrt(2), rel=1e-15)


def test_exponential_factor():
    assert float(evaluate(approx_of(ExpFactor(1)), 1)) == pytest.approx(math.e, rel=1e-15)


def test_domain_error_past_singularity():
    a = approx_of(PowerFactor(-1, -2))
    with pytest.raises(DomainError):
        evaluate(a, 1)
    with pytest.raises(DomainError):
        evaluate(a, 2)


def test_principal_continuation_is_opt_in():
    a = approx_of(PowerFactor(-1, 2))
    assert evaluate(a, 3, principal=True) == 4
    with pytest.raises(DomainError):
        evaluate(a, 3)


def test_broken_conjugate_closure_detected(ctx):
    a = approx_of(PowerFactor(ctx.mpc(0, 1), -0.5))
    with pytest.raises(NonRealResult):
        evaluate(a, 1)


def test_shift_and_prefactor_applied():
    a = approx_of(PowerFactor(1, 1), prefactor=3, shift=2)
    assert evaluate(a, 1) == 4


def test_grid_flags_domain_points():
    a = approx_of(PowerFactor(-1, -1))
    pts = evaluate_grid(a, [0, 0.5, 1, 2])
    assert [v is None for _, v in pts] == [False, False, True, True]
    csv_text = grid_csv(a, [0, 2])
    assert csv_text.splitlines()[2].endswith(",domain")


def test_singularity_report():
    (entry,) = singularities(approx_of(PowerFactor(-1, -2))).entries
    assert entry.location == 1 and entry.exponent == -2 and entry.classification == "pole"
    kinds = [e.classification for e in singularities(approx_of(PowerFactor(-2, 0.5), PowerFactor(-4, -0.5)))]
    assert kinds == ["branch-point", "zero"]


def test_complex_factors_have_no_real_singularity(ctx):
    a = approx_of(PowerFactor(ctx.mpc(0, 1), -0.5), PowerFactor(ctx.mpc(0, -1), -0.5))
    assert len(singularities(a)) == 0


@given(st.permutations(range(4)), st.integers(0, 1000))
def test_singularities_permutation_invariant(order, seed):
    rng = random.Random(seed)
    factors = [PowerFactor(-rng.uniform(0.1, 3), rng.uniform(-2, 2)) for _ in range(4)]
    a = approx_of(*factors)
    b = approx_of(*[factors[i] for i in order])
    assert singularities(a) == singularities(b)


def test_tan_nearest_singularity(cfg, ctx):
    nearest = singularities(tan_approximant(4, cfg)).nearest_divergence()
    pct = percent_error(nearest.location, ctx.pi / 2)
    assert float(pct) == pytest.approx(0.13, abs=0.02)


def test_strong_coupling_single_factor():
    form = strong_coupling(approx_of(PowerFactor(2, 0.5)))
    assert float(form.amplitude) == pytest.approx(math.sqrt(2), rel=1e-15)
    assert form.exponent == 0.5


def test_strong_coupling_exponent_is_literal_sum(cfg, ctx):
    s = reference_series(ReferenceFunction("Z"), 8, cfg.precision)
    a = resum(s, 8, cfg)
    assert strong_coupling(a).exponent == ctx.fsum(ctx.re(f.n) for f in a.power_factors)


def test_strong_coupling_errors():
    with pytest.raises(ExponentialAsymptote):
        strong_coupling(approx_of(ExpFactor(1)))
    with pytest.raises(ShiftObstruction):
        strong_coupling(approx_of(PowerFactor(1, -1), shift=2))


def test_percent_error():
    assert percent_error(1, 1) == 0
    assert float(percent_error(1.1, 1)) == pytest.approx(10)
    with pytest.raises(ZeroReference):
        percent_error(1, 0)


def test_accuracy_estimate_of_identical_functions():
    a3 = FactorApproximant(3, (ExpFactor(1),))
    a2 = FactorApproximant(2, (ExpFactor(1),))
    assert accuracy_estimate(a3, a2, 1.7) == 0
    with pytest.raises(ValueError):
        accuracy_estimate(a3, a3, 1)


@pytest.mark.parametrize("k", [4, 6, 9])
def test_local_agreement_order(cfg, ctx, k):
    s = reference_series(ReferenceFunction("x_plus_cos"), k, cfg.precision)
    a = resum(s, k, cfg)
    ratios = []
    for x in ("1e-2", "1e-3", "1e-4"):
        xm = ctx.mpf(x)
        truncated = ctx.polyval(list(reversed(s.coeffs)), xm)
        ratios.append(abs(evaluate(a, xm) - truncated) / xm ** (k + 1))
    assert max(ratios) < 10 * max(ratios[0], 1e-3)


def test_shift_independence(cfg):
    a2 = sin_approximant(10, 2, cfg)
    a3 = sin_approximant(10, 3, cfg)
    for x in (0.1, 0.5, 1.0):
        assert abs(float(evaluate(a2, x) - evaluate(a3, x))) < 1e-6
