import csv
import io
import json
import math

import pytest

from factorapprox import Precision, parse_real, percent_error
from factorapprox.bench import (
    PUBLISHED,
    bench_E,
    bench_E_strong,
    bench_tan_singularity,
    bench_Z,
    bench_Z_strong,
    figure_data,
    round_like,
)


def rows_of(report):
    lines = [l for l in report.to_csv().splitlines() if not l.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(lines))))


def test_tan_report_first_rows():
    report = bench_tan_singularity(6)
    display = [r["display"] for r in rows_of(report)]
    assert display[0] == "-6.8" and display[2] == "0.13"
    assert display[4] == "-0.00035"


def test_tan_range_checked():
    with pytest.raises(ValueError):
        bench_tan_singularity(9)


def test_z_at_zero_coupling_is_exact():
    report = bench_Z(2, g_list=(0,))
    assert abs(float(report.rows[0].percent)) < 1e-9


def test_e_at_zero_coupling_is_exact():
    report = bench_E(3, g_list=(0,))
    assert all(abs(float(r.percent)) < 1e-8 for r in report.rows)


def test_strong_rows_define_index_from_factors(cfg):
    report = bench_Z_strong(5, cfg)
    k5 = report.rows[3]
    assert round_like(k5.extra["amplitude"], "0.878") == "0.878"
    assert round_like(k5.computed, "0.255") == "0.255"
    assert round_like(k5.percent, "2.0") == "2.0"


def test_e_strong_reference_is_one_third(cfg):
    report = bench_E_strong(3, cfg)
    ctx = cfg.precision.context()
    assert report.rows[0].reference == ctx.mpf(1) / 3


@pytest.mark.parametrize("build", [lambda: bench_Z(4), lambda: bench_Z_strong(6), lambda: bench_tan_singularity(4)])
def test_percent_recomputes_bit_for_bit(build):
    report = build()
    prec = Precision(report.config["precision_bits"])
    ctx = prec.context()
    for row in rows_of(report):
        pct = percent_error(parse_real(row["computed"], ctx), parse_real(row["reference"], ctx), prec)
        assert pct == parse_real(row["percent"], ctx)


def test_reports_are_deterministic_and_carry_config():
    a, b = bench_Z(3).to_csv(), bench_Z(3).to_csv()
    assert a == b
    config = json.loads(a.splitlines()[1].split("config: ", 1)[1])
    assert config["precision_bits"] == 256 and config["couplings"] == [0.1, 1, 5, 10, 100]
    doc = json.loads(bench_Z(2).to_json())
    assert doc["config"]["residual_tolerance"] == 1e-6


def test_published_table_shapes():
    assert sorted(PUBLISHED["table2"]) == list(range(2, 18))
    assert sorted(PUBLISHED["table1"]) == list(range(2, 13))
    assert all(len(v) == 4 for v in PUBLISHED["table3"].values())


def test_figure1_columns():
    fig = figure_data("fig1", points=21)
    x = fig.column("x")
    exact = fig.column("exact")
    i = min(range(len(x)), key=lambda j: abs(x[j] - math.pi / 2))
    assert float(exact[i]) == pytest.approx(math.sin(x[i]))
    assert fig.columns == ("x", "exact", "taylor_18", "factor_18")


def test_figure2_reference_at_zero():
    fig = figure_data("fig2", points=11)
    assert float(fig.column("exact")[0]) == 1.0


def test_figure3_reference_ends_before_blowup():
    fig = figure_data("fig3", points=61, window=(0, 6.6))
    rk = fig.column("rk")
    ts = fig.column("t")
    last = max(t for t, y in zip(ts, rk) if y is not None)
    assert 6.3 < last < 6.53
    assert "nan" in fig.to_csv()


def test_unknown_figure():
    with pytest.raises(ValueError):
        figure_data("fig9")


def test_principal_flag_fills_branch_cells():
    strict = figure_data("fig4", points=15)
    cont = figure_data("fig4", points=15, principal=True)
    assert None in strict.column("factor_19")
    assert None not in cont.column("factor_19")
    assert cont.config["principal"] is True
