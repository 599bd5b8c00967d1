from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from factorapprox import (
    LogMoments,
    Precision,
    Series,
    ZeroLeadingCoefficient,
    format_real,
    log_moments,
    normalize,
    parse_real,
    series_from_moments,
    truncated_mul,
)

coeff = st.fractions(min_value=-5, max_value=5, max_denominator=50)
nonzero = coeff.filter(lambda c: c != 0)


def as_float_list(values):
    return [float(v) for v in values]


def test_normalize_divides_by_constant():
    s = normalize(["2", "2", "1"])
    assert as_float_list(s.coeffs) == [1.0, 1.0, 0.5]
    assert float(s.prefactor) == 2.0


def test_normalize_negative_constant():
    s = normalize([-4, 2])
    assert float(s.prefactor) == -4.0
    assert float(s.coeffs[1]) == -0.5


def test_normalize_rejects_zero_constant():
    with pytest.raises(ZeroLeadingCoefficient):
        normalize([0, 1, 2])


def test_normalize_keeps_shift_and_prefactor():
    raw = Series(("3", "6"), prefactor="2", shift="1")
    s = normalize(raw)
    assert float(s.prefactor) == 6.0 and float(s.shift) == 1.0


@given(st.lists(coeff, min_size=1, max_size=8), nonzero)
def test_normalize_idempotent(tail, a0):
    once = normalize([a0] + tail)
    twice = normalize(once.coeffs)
    assert twice.coeffs == once.coeffs
    assert twice.prefactor == 1


def test_log_moments_of_exponential():
    B = log_moments(Series((1, 1, Fraction(1, 2), Fraction(1, 6))))
    assert as_float_list(B.B) == [1.0, 0.0, 0.0]


def test_log_moments_of_single_factor():
    # (1 + 2x)**(1/2) = 1 + x - x**2/2 + ...
    B = log_moments(Series((1, 1, Fraction(-1, 2))))
    assert as_float_list(B.B) == [1.0, 2.0]


def test_log_moments_needs_unit_constant():
    with pytest.raises(ValueError):
        log_moments(Series((2, 1)))


@given(st.lists(coeff, min_size=1, max_size=7), st.lists(coeff, min_size=1, max_size=7))
def test_log_moments_additive_under_products(t1, t2):
    n = min(len(t1), len(t2))
    s1, s2 = Series(tuple([1] + t1[:n])), Series(tuple([1] + t2[:n]))
    prod = truncated_mul(s1, s2, n)
    b, b1, b2 = log_moments(prod).B, log_moments(s1).B, log_moments(s2).B
    ctx = Precision().context()
    for x, y, z in zip(b, b1, b2):
        assert abs(x - (y + z)) <= ctx.mpf(10) ** -60 * (1 + abs(y) + abs(z))


@given(st.lists(coeff, min_size=1, max_size=10))
def test_moments_round_trip(tail):
    s = Series(tuple([1] + tail))
    back = series_from_moments(log_moments(s))
    for a, b in zip(back.coeffs, s.coeffs):
        assert abs(a - b) <= Precision().context().mpf(10) ** -60 * (1 + abs(b))


def test_from_moments_inverts_known_factor():
    s = series_from_moments(LogMoments((2, 4, 8)))
    # (1 + 2x) = 1 + 2x exactly
    assert as_float_list(s.coeffs) == [1.0, 2.0, 0.0, 0.0]


def test_truncated_mul_order_check():
    with pytest.raises(ValueError):
        truncated_mul([1, 1], [1, 1, 1], 2)


def test_series_json_round_trip(prec):
    s = normalize(["3", "0.1", "-1/7"], prec)
    back = Series.from_json(s.to_json(), prec)
    assert back.coeffs == s.coeffs and back.prefactor == s.prefactor


def test_decimal_strings_parse_without_double_rounding(ctx):
    assert parse_real("0.1", ctx) == ctx.mpf(1) / 10
    assert parse_real("0.1", ctx) != ctx.mpf(0.1)


@given(st.floats(min_value=-1e6, max_value=1e6, allow_nan=False))
def test_format_round_trip(x):
    prec = Precision(256)
    ctx = prec.context()
    v = ctx.mpf(x) / 3
    assert parse_real(format_real(v, prec), ctx) == v


def test_precision_floor():
    with pytest.raises(ValueError):
        Precision(32)


def test_series_rejects_non_finite():
    with pytest.raises(ValueError):
        Series((1, float("inf")))
