"""Reproduction of the benchmark tables and figure data.

Every report row carries full-precision ``computed``/``reference``/``percent``
values (decimal strings on export) and, where a published counterpart exists,
that printed value plus the computed value rounded to the same decimals.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache

from .approximant import (
    DomainError,
    evaluate,
    percent_error,
    singularities,
    strong_coupling,
)
from .errors import BlowupDetected, EvaluationError, SolverError
from .ode import DEFAULT_SHIFT, InitialConditions, cubic_oscillator, prepare_for_resummation, rayleigh, taylor_solution
from .oracles import (
    ReferenceFunction,
    ground_state_energy,
    integrate_ode,
    partition_function,
    reference_series,
)
from .precision import Precision, format_real
from .series import Series, normalize
from .solver import FactorApproximant, SolverConfig, resum

__all__ = [
    "BenchRow",
    "BenchReport",
    "FigureData",
    "PUBLISHED",
    "TABLE_IDS",
    "FIGURE_IDS",
    "tan_approximant",
    "z_approximant",
    "e_approximant",
    "ode_approximant",
    "bench_tan_singularity",
    "bench_Z",
    "bench_Z_strong",
    "bench_E",
    "bench_E_strong",
    "figure_data",
    "ode_extrapolation",
    "run",
]

Z_COUPLINGS = (0.1, 1, 5, 10, 100)
E_COUPLINGS = (0.01, 0.3, 1, 200)
Z_STRONG_INDEX = "0.25"
E_STRONG_INDEX = "1/3"

# Printed values, as strings so the number of printed decimals is kept.
PUBLISHED = {
    "tan": {2: "-6.8", 3: "-5.4", 4: "0.13", 5: "0.096", 6: "-0.00035"},
    "table1": {
        2: ("0.2", "5.4", "19", "27", "70"),
        3: ("-0.07", "-4.6", "-17", "-23", "-41"),
        4: ("0.02", "2.0", "9.4", "15", "42"),
        5: ("-0.008", "-1.3", "-5.7", "-8.0", "-13"),
        6: ("0.003", "0.9", "5.8", "9.7", "30"),
        7: ("-0.001", "-0.5", "-2.0", "-2.5", "-1.6"),
        8: ("0.0006", "0.5", "3.9", "6.9", "23"),
        9: ("-0.0002", "-0.2", "-0.5", "-0.2", "3.8"),
        10: ("0.0001", "0.3", "2.8", "5.2", "19"),
        11: ("-0.00004", "-0.05", "0.2", "0.8", "6.4"),
        12: ("0.00004", "0.2", "2.1", "4.1", "16"),
    },
    "table2": {
        2: ("0.823", "0.090", "-64"),
        3: ("0.917", "0.346", "38"),
        4: ("0.806", "0.129", "-48"),
        5: ("0.878", "0.255", "2.0"),
        6: ("0.806", "0.148", "-41"),
        7: ("0.860", "0.223", "-11"),
        8: ("0.810", "0.161", "-36"),
        9: ("0.850", "0.209", "-16"),
        10: ("0.814", "0.170", "-32"),
        11: ("0.845", "0.202", "-19"),
        12: ("0.819", "0.178", "-29"),
        13: ("0.842", "0.199", "-20"),
        14: ("0.824", "0.182", "-27"),
        15: ("0.841", "0.197", "-21"),
        16: ("0.828", "0.187", "-25"),
        17: ("0.840", "0.196", "-22"),
    },
    "table3": {
        2: ("-0.07", "-2.0", "-7.4", "-53"),
        3: ("-0.07", "1.4", "9.0", "256"),
        4: ("-0.07", "-0.4", "-2.4", "-35"),
        5: ("-0.07", "0.2", "2.2", "49"),
        6: ("-0.07", "-0.1", "-1.0", "-25"),
        7: ("-0.07", "0.06", "0.7", "14"),
        8: ("-0.07", "-0.03", "-0.5", "-19"),
        9: ("-0.07", "0.02", "0.3", "2.6"),
        10: ("-0.07", "-0.01", "-0.3", "-15"),
    },
    "table4": {
        2: ("0.729", "0.176", "-47"),
        3: ("0.611", "0.590", "77"),
        4: ("0.755", "0.231", "-30"),
        5: ("0.669", "0.409", "22"),
        6: ("0.756", "0.257", "-23"),
        7: ("0.696", "0.351", "5.3"),
        8: ("0.752", "0.272", "-18"),
        9: ("0.710", "0.328", "-1.7"),
        10: ("0.748", "0.282", "-16"),
        11: ("0.718", "0.317", "-4.8"),
        12: ("0.743", "0.289", "-13"),
        13: ("0.721", "0.312", "-6.3"),
        14: ("0.739", "0.294", "-12"),
        15: ("0.723", "0.309", "-7.2"),
        16: ("0.736", "0.298", "-11"),
        17: ("0.725", "0.308", "-7.5"),
    },
}

TABLE_IDS = ("tan", "table1", "table2", "table3", "table4")
FIGURE_IDS = ("fig1", "fig2", "fig3", "fig4")

TITLES = {
    "tan": "tan: nearest singularity of tan x approximants vs pi/2 (percent error)",
    "table1": "table1: percentage errors of Z*_k(g) for the zero-dimensional phi^4 integral",
    "table2": "table2: strong-coupling amplitudes c_k and indices alpha_k of Z*_k",
    "table3": "table3: percentage errors of E*_k(g) for the anharmonic ground state",
    "table4": "table4: strong-coupling amplitudes b_k and indices beta_k of E*_k",
}


def decimals(printed: str) -> int:
    return len(printed.split(".")[1]) if "." in printed else 0


def round_like(value, printed: str) -> str:
    return f"{float(value):.{decimals(printed)}f}"


@dataclass
class BenchRow:
    k: int
    arg: object
    computed: object
    reference: object
    percent: object
    extra: dict = field(default_factory=dict)
    published: str | None = None
    status: str = "ok"


@dataclass
class BenchReport:
    table: str
    rows: list
    config: dict
    columns: tuple = ("k", "arg", "computed", "reference", "percent")

    def _cells(self, row: BenchRow, precision: Precision) -> dict:
        def fmt(v):
            return "" if v is None else format_real(v, precision)

        cells = {
            "k": str(row.k),
            "arg": "" if row.arg is None else str(row.arg),
            "computed": fmt(row.computed),
            "reference": fmt(row.reference),
            "percent": fmt(row.percent),
        }
        for key in sorted(row.extra):
            cells[key] = fmt(row.extra[key])
        cells["published"] = row.published or ""
        cells["display"] = (
            round_like(row.percent, row.published)
            if row.published is not None and row.percent is not None
            else ""
        )
        cells["status"] = row.status
        return cells

    def to_records(self) -> list[dict]:
        precision = Precision(self.config["precision_bits"])
        return [self._cells(r, precision) for r in self.rows]

    def to_csv(self) -> str:
        records = self.to_records()
        header = list(records[0]) if records else list(self.columns)
        buf = io.StringIO()
        buf.write(f"# {TITLES.get(self.table, self.table)}\n")
        buf.write(f"# config: {json.dumps(self.config, sort_keys=True)}\n")
        writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {"table": self.table, "title": TITLES.get(self.table, self.table), "config": self.config, "rows": self.to_records()},
            indent=1,
            sort_keys=True,
        )


def _config_snapshot(cfg: SolverConfig, **extra) -> dict:
    out = cfg.to_dict()
    out.update(extra)
    return out


# --------------------------------------------------------------------------
# Approximant builders


@lru_cache(maxsize=32)
def _series(tag: str, order: int, bits: int) -> Series:
    return reference_series(ReferenceFunction(tag), order, Precision(bits))


def tan_approximant(k: int, cfg: SolverConfig | None = None) -> FactorApproximant:
    """Order-``k`` approximant of ``tan x = x F(x**2)``.

    ``F`` is resummed in ``z = x**2`` from the series of ``tan(x)/x``.
    """
    cfg = cfg or SolverConfig()
    raw = _series("tan", 2 * k + 1, cfg.precision.bits).coeffs
    reduced = normalize([raw[2 * j + 1] for j in range(k + 1)], cfg.precision)
    return resum(reduced, k, cfg, argument_power=2, leading_power=1)


def z_approximant(k: int, cfg: SolverConfig | None = None) -> FactorApproximant:
    cfg = cfg or SolverConfig()
    return resum(normalize(_series("Z", k, cfg.precision.bits)), k, cfg)


def e_approximant(k: int, cfg: SolverConfig | None = None) -> FactorApproximant:
    cfg = cfg or SolverConfig()
    return resum(normalize(_series("E", k, cfg.precision.bits)), k, cfg)


def sin_approximant(k: int, shift=DEFAULT_SHIFT, cfg: SolverConfig | None = None) -> FactorApproximant:
    cfg = cfg or SolverConfig()
    raw = reference_series(ReferenceFunction("sin_shifted", shift=shift), k, cfg.precision)
    return resum(normalize(raw), k, cfg)


def x_plus_cos_approximant(k: int, cfg: SolverConfig | None = None) -> FactorApproximant:
    cfg = cfg or SolverConfig()
    return resum(normalize(_series("x_plus_cos", k, cfg.precision.bits)), k, cfg)


def ode_approximant(ode, ic, k: int, shift=DEFAULT_SHIFT, cfg: SolverConfig | None = None) -> FactorApproximant:
    cfg = cfg or SolverConfig()
    raw = taylor_solution(ode, ic, max(k, 2), cfg.precision)
    return resum(prepare_for_resummation(raw, shift), k, cfg)


def _maybe(build, k):
    try:
        return build(k), "ok"
    except SolverError as exc:
        return None, f"solver: {type(exc).__name__}"


# --------------------------------------------------------------------------
# Tables


def bench_tan_singularity(k_max: int = 6, cfg: SolverConfig | None = None) -> BenchReport:
    if not 2 <= k_max <= 8:
        raise ValueError("k_max must lie in [2, 8]")
    cfg = cfg or SolverConfig()
    ctx = cfg.precision.context()
    half_pi = ctx.pi / 2
    rows = []
    for k in range(2, k_max + 1):
        approx, status = _maybe(lambda kk: tan_approximant(kk, cfg), k)
        location = None
        if approx is not None:
            nearest = singularities(approx).nearest_divergence()
            if nearest is None:
                status = "no divergent singularity"
            else:
                location = nearest.location
        pct = None if location is None else percent_error(location, half_pi, cfg.precision)
        rows.append(BenchRow(k, None, location, half_pi, pct, published=PUBLISHED["tan"].get(k), status=status))
    return BenchReport("tan", rows, _config_snapshot(cfg, variable="x**2", leading_power=1))


def _error_table(table, build, reference, k_max, couplings, cfg):
    ctx = cfg.precision.context()
    refs = {g: ctx.mpf(reference(g)) for g in couplings}
    published = PUBLISHED.get(table, {})
    rows = []
    for k in range(2, k_max + 1):
        approx, status = _maybe(build, k)
        for g in couplings:
            value, pct, row_status = None, None, status
            if approx is not None:
                try:
                    value = evaluate(approx, g)
                    pct = percent_error(value, refs[g], cfg.precision)
                except EvaluationError as exc:
                    row_status = f"evaluation: {type(exc).__name__}"
            printed = dict(zip(_published_couplings(table), published.get(k, ()))).get(g)
            rows.append(BenchRow(k, g, value, refs[g], pct, published=printed, status=row_status))
    return rows


def _published_couplings(table):
    return Z_COUPLINGS if table == "table1" else E_COUPLINGS


def bench_Z(k_max: int = 12, g_list=Z_COUPLINGS, cfg: SolverConfig | None = None) -> BenchReport:
    cfg = cfg or SolverConfig()
    rows = _error_table(
        "table1", lambda k: z_approximant(k, cfg), partition_function, k_max, tuple(g_list), cfg
    )
    return BenchReport("table1", rows, _config_snapshot(cfg, couplings=list(g_list), reference="quadrature"))


def bench_E(k_max: int = 10, g_list=E_COUPLINGS, cfg: SolverConfig | None = None) -> BenchReport:
    cfg = cfg or SolverConfig()
    rows = _error_table(
        "table3", lambda k: e_approximant(k, cfg), ground_state_energy, k_max, tuple(g_list), cfg
    )
    return BenchReport("table3", rows, _config_snapshot(cfg, couplings=list(g_list), reference="diagonalization"))


def _strong_table(table, build, index, sign, k_max, cfg):
    ctx = cfg.precision.context()
    exact = ctx.mpf(1) / 3 if index == "1/3" else ctx.mpf(index)
    rows = []
    for k in range(2, k_max + 1):
        approx, status = _maybe(build, k)
        amplitude = exponent = pct = None
        if approx is not None:
            try:
                form = strong_coupling(approx)
                amplitude, exponent = form.amplitude, sign * form.exponent
                pct = percent_error(exponent, exact, cfg.precision)
            except EvaluationError as exc:
                status = f"asymptote: {type(exc).__name__}"
        printed = PUBLISHED[table].get(k)
        rows.append(
            BenchRow(
                k,
                None,
                exponent,
                exact,
                pct,
                extra={"amplitude": amplitude},
                published=printed[2] if printed else None,
                status=status,
            )
        )
    return rows


def bench_Z_strong(k_max: int = 17, cfg: SolverConfig | None = None) -> BenchReport:
    """Rows carry ``computed = alpha_k = -sum n_i`` and ``amplitude = c_k``."""
    if k_max > 17:
        raise ValueError("k_max must be <= 17")
    cfg = cfg or SolverConfig()
    rows = _strong_table("table2", lambda k: z_approximant(k, cfg), Z_STRONG_INDEX, -1, k_max, cfg)
    return BenchReport("table2", rows, _config_snapshot(cfg, reference_index=Z_STRONG_INDEX))


def bench_E_strong(k_max: int = 17, cfg: SolverConfig | None = None) -> BenchReport:
    """Rows carry ``computed = beta_k = sum n_i`` and ``amplitude = b_k``."""
    cfg = cfg or SolverConfig()
    rows = _strong_table("table4", lambda k: e_approximant(k, cfg), E_STRONG_INDEX, 1, k_max, cfg)
    return BenchReport("table4", rows, _config_snapshot(cfg, reference_index=E_STRONG_INDEX))


# --------------------------------------------------------------------------
# Figures and ODE extrapolation


@dataclass
class FigureData:
    figure: str
    columns: tuple
    rows: list
    config: dict

    def column(self, name: str) -> list:
        j = self.columns.index(name)
        return [r[j] for r in self.rows]

    def to_csv(self) -> str:
        precision = Precision(self.config["precision_bits"])
        buf = io.StringIO()
        buf.write(f"# {self.figure}\n")
        buf.write(f"# config: {json.dumps(self.config, sort_keys=True)}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow(["nan" if v is None else (repr(v) if isinstance(v, float) else format_real(v, precision)) for v in row])
        return buf.getvalue()


FIGURE_WINDOWS = {"fig1": (0.0, 10.0), "fig2": (0.0, 10.0), "fig3": (0.0, 6.0), "fig4": (0.0, 7.0)}


def _safe_eval(approx, x, principal=False):
    if approx is None:
        return None
    try:
        return evaluate(approx, x, principal=principal)
    except EvaluationError:
        return None


def _grid(window, points):
    lo, hi = window
    return [lo + (hi - lo) * i / (points - 1) for i in range(points)]


def _rk_column(ode, ic, t_max, ts, step):
    try:
        traj = integrate_ode(ode, ic, t_max, step)
        return [traj.at(t) for t in ts]
    except BlowupDetected as exc:
        t_tab, y_tab = exc.table
        return [float(y_tab[round(t / step)]) if t < exc.t_low else None for t in ts]


def figure_data(figure: str, points: int = 201, window=None, shift=DEFAULT_SHIFT,
                cfg: SolverConfig | None = None, step: float = 1e-3, principal: bool = False) -> FigureData:
    """Grid data behind a figure; cells the approximant cannot evaluate are ``None``.

    ``principal`` continues approximants past real branch points (real part
    of the principal value) instead of leaving those cells empty.
    """
    if figure not in FIGURE_IDS:
        raise ValueError(f"unknown figure {figure!r}")
    cfg = cfg or SolverConfig()
    ctx = cfg.precision.context()
    window = tuple(window or FIGURE_WINDOWS[figure])
    xs = _grid(window, points)
    config = _config_snapshot(cfg, window=list(window), points=points, principal=principal)

    if figure == "fig1":
        k = 18
        approx, _ = _maybe(lambda kk: sin_approximant(kk, shift, cfg), k)
        taylor = reference_series(ReferenceFunction("sin_shifted", shift=0), k, cfg.precision).coeffs
        rows = []
        for x in xs:
            xm = ctx.mpf(x)
            rows.append((x, ctx.sin(xm), ctx.polyval(list(reversed(taylor)), xm), _safe_eval(approx, x, principal)))
        config["shift"] = shift
        return FigureData(figure, ("x", "exact", f"taylor_{k}", f"factor_{k}"), rows, config)

    if figure == "fig2":
        orders = (8, 9, 10)
        approxes = [_maybe(lambda kk: x_plus_cos_approximant(kk, cfg), k)[0] for k in orders]
        rows = [(x, ctx.mpf(x) + ctx.cos(x), *[_safe_eval(a, x, principal) for a in approxes]) for x in xs]
        return FigureData(figure, ("x", "exact", *[f"factor_{k}" for k in orders]), rows, config)

    if figure == "fig3":
        ode, orders = cubic_oscillator(cfg.precision), (14, 16)
    else:
        ode, orders = rayleigh("0.1", cfg.precision), (18, 19)
    ic = InitialConditions(0, 1)
    approxes = [_maybe(lambda kk: ode_approximant(ode, ic, kk, shift, cfg), k)[0] for k in orders]
    rk = _rk_column(ode, ic, window[1], xs, step)
    rows = [(t, rk[i], *[_safe_eval(a, t, principal) for a in approxes]) for i, t in enumerate(xs)]
    config.update(shift=shift, rk_step=step, y0=0, v0=1)
    return FigureData(figure, ("t", "rk", *[f"factor_{k}" for k in orders]), rows, config)


def ode_extrapolation(ode, ic, k: int, t_max: float, points: int = 201, shift=DEFAULT_SHIFT,
                      cfg: SolverConfig | None = None, step: float = 1e-3, principal: bool = False) -> FigureData:
    """Approximant ``y*_k`` against the RK trajectory on ``[0, t_max]``."""
    cfg = cfg or SolverConfig()
    approx = ode_approximant(ode, ic, k, shift, cfg)
    ts = _grid((0.0, t_max), points)
    rk = _rk_column(ode, ic, t_max, ts, step)
    rows = []
    for t, ref in zip(ts, rk):
        value = _safe_eval(approx, t, principal)
        diff = None if value is None or ref is None else float(value) - ref
        rows.append((t, ref, value, diff))
    config = _config_snapshot(cfg, k=k, shift=shift, t_max=t_max, points=points, rk_step=step, principal=principal)
    return FigureData("ode", ("t", "rk", f"factor_{k}", "difference"), rows, config)


def run(table_id: str, k_max: int | None = None, cfg: SolverConfig | None = None, **kwargs):
    """Dispatch a table or figure id to its bench routine."""
    if table_id == "tan":
        return bench_tan_singularity(k_max or 6, cfg)
    if table_id == "table1":
        return bench_Z(k_max or 12, cfg=cfg)
    if table_id == "table2":
        return bench_Z_strong(k_max or 17, cfg)
    if table_id == "table3":
        return bench_E(k_max or 10, cfg=cfg)
    if table_id == "table4":
        return bench_E_strong(k_max or 17, cfg)
    if table_id in FIGURE_IDS:
        return figure_data(table_id, cfg=cfg, **kwargs)
    raise KeyError(table_id)
