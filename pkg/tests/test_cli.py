import json
import math
import subprocess
import sys

import pytest

from factorapprox.cli import main, parse_orders


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def series_file(tmp_path):
    def make(coeffs):
        path = tmp_path / "series.json"
        path.write_text(json.dumps({"coefficients": coeffs}))
        return str(path)

    return make


def test_parse_orders():
    assert parse_orders("7") == [7]
    assert parse_orders("2..5") == [2, 3, 4, 5]


def test_resum_exponential(series_file, capsys):
    code, out, _ = run(["resum", series_file(["1", "1", "0.5"]), "-k", "2"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["approximant"]["factors"] == [{"type": "exp", "beta": "1"}]
    assert doc["config"]["precision_bits"] == 256
    assert doc["diagnostics"]["reexpansion_residual"] == "0"


def test_resum_single_factor(series_file, capsys):
    code, out, _ = run(["resum", series_file(["1", "1", "-0.5"])], capsys)
    (f,) = json.loads(out)["approximant"]["factors"]
    assert f == {"type": "power", "A": ["2", "0"], "n": ["0.5", "0"]}


def test_resum_range(series_file, capsys):
    code, out, _ = run(["resum", series_file(["1", "1", "0.5", "0.25"]), "-k", "2..3"], capsys)
    assert [r["approximant"]["order"] for r in json.loads(out)["results"]] == [2, 3]


def test_resum_malformed(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(["resum", str(bad)], capsys)
    assert code == 2 and "error" in err


def test_resum_order_too_high(series_file, capsys):
    code, _, _ = run(["resum", series_file(["1", "1"]), "-k", "3"], capsys)
    assert code == 2


def test_resum_solver_failure(series_file, capsys):
    # moments B_n = n have no factor representation
    code, _, err = run(["resum", series_file(["1", "1", "0", "-1/3"]), "-k", "3"], capsys)
    assert code == 3 and "ResidualTooLarge" in err


def test_eval_grid(tmp_path, capsys):
    path = tmp_path / "a.json"
    path.write_text(json.dumps({"order": 2, "factors": [{"type": "power", "A": ["1", "0"], "n": ["2", "0"]}]}))
    code, out, _ = run(["eval", str(path), "--grid", "0,1,2"], capsys)
    lines = out.splitlines()
    assert lines[0].startswith("# config:")
    assert lines[2:] == ["0,1,", "1,4,", "2,9,"]


def test_eval_flags_tan_past_singularity(tmp_path, series_file, capsys):
    from factorapprox.bench import tan_approximant

    approx = tan_approximant(4)
    path = tmp_path / "tan.json"
    path.write_text(approx.to_json())
    code, out, _ = run(["eval", str(path), "--grid", "1.0,1.6"], capsys)
    assert code == 0
    rows = out.splitlines()[2:]
    assert math.isclose(float(rows[0].split(",")[1]), math.tan(1.0), rel_tol=1e-3)
    assert rows[1] == "1.6,,domain"


def test_eval_json_output(tmp_path, capsys):
    path = tmp_path / "a.json"
    path.write_text(json.dumps({"order": 2, "factors": [{"type": "exp", "beta": "1"}]}))
    code, out, _ = run(["eval", str(path), "--grid", "1", "--format", "json"], capsys)
    doc = json.loads(out)
    assert doc["points"][0]["value"].startswith("2.71828182845904523536")
    assert doc["asymptote"] is None


def test_bench_unknown_id(capsys):
    code, _, err = run(["bench", "table9"], capsys)
    assert code == 2


def test_bench_table_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(["bench", "tan", "--out", str(a)], capsys)[0] == 0
    assert run(["bench", "tan", "--out", str(b)], capsys)[0] == 0
    assert a.read_bytes() == b.read_bytes()
    text = a.read_text()
    assert text.startswith("# tan:") and '"precision_bits": 256' in text


def test_bench_json(capsys):
    code, out, _ = run(["bench", "table2", "-k", "4", "--format", "json"], capsys)
    doc = json.loads(out)
    assert [r["k"] for r in doc["rows"]] == ["2", "3", "4"]


def test_ode_preset(tmp_path, capsys):
    ap = tmp_path / "ap.json"
    code, out, _ = run(
        ["ode", "--preset", "cubic", "-k", "12", "--t-max", "1", "--points", "11", "--approximant-out", str(ap)],
        capsys,
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[2] == "t,rk,factor_12,difference"
    assert abs(float(lines[-1].split(",")[3])) < 1e-5
    assert json.loads(ap.read_text())["approximant"]["order"] == 12


def test_ode_spec_file(tmp_path, capsys):
    spec = tmp_path / "ode.json"
    spec.write_text(json.dumps({"terms": [{"c": "-1", "py": 1, "pyp": 0}], "epsilon": None}))
    code, out, _ = run(["ode", str(spec), "-k", "8", "--t-max", "1", "--points", "5"], capsys)
    last = out.splitlines()[-1].split(",")
    assert code == 0 and float(last[1]) == pytest.approx(math.sin(1), abs=1e-10)


def test_ode_needs_input(capsys):
    assert run(["ode"], capsys)[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "factorapprox", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "resum" in proc.stdout


def test_argparse_error_exit_code():
    proc = subprocess.run([sys.executable, "-m", "factorapprox", "resum", "x", "-k", "a..b"], capture_output=True)
    assert proc.returncode == 2
