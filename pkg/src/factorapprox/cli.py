"""Command-line interface: ``factorapprox {resum,eval,bench,ode}``.

Exit codes: 0 success, 2 bad input (parse error, unknown id), 3 solver or
oracle failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bench
from .approximant import evaluate_grid, singularities, strong_coupling
from .errors import EvaluationError, FactorApproxError, OracleError, SolverError
from .ode import DEFAULT_SHIFT, InitialConditions, PolynomialODE, cubic_oscillator, rayleigh
from .precision import Precision, format_real, parse_real
from .series import Series, normalize
from .solver import FactorApproximant, SolverConfig, reexpansion_residual, resum

EXIT_INPUT = 2
EXIT_FAILURE = 3


class InputError(Exception):
    pass


def parse_orders(text: str) -> list[int]:
    """``"7"`` or an inclusive range ``"2..17"``."""
    try:
        if ".." in text:
            lo, hi = (int(p) for p in text.split("..", 1))
            if lo > hi:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad order {text!r}; use K or K1..K2") from None


def parse_grid(text: str) -> list[str]:
    """``"a:b:n"`` (n points inclusive) or a comma-separated list."""
    if ":" in text:
        try:
            a, b, n = text.split(":")
            a, b, n = float(a), float(b), int(n)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad grid {text!r}; use a:b:n") from None
        if n < 2:
            raise argparse.ArgumentTypeError("grid needs at least 2 points")
        return [repr(a + (b - a) * i / (n - 1)) for i in range(n)]
    return [p.strip() for p in text.split(",") if p.strip()]


def _config(args) -> SolverConfig:
    try:
        return SolverConfig(
            precision=Precision(args.precision),
            degenerate_threshold=args.degenerate_threshold,
            merge_threshold=args.merge_threshold,
            residual_tolerance=args.residual_tolerance,
            newton_steps=args.newton_steps,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _read_json(path: str):
    try:
        with (sys.stdin if path == "-" else open(path)) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _write(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


# --------------------------------------------------------------------------


def cmd_resum(args) -> int:
    cfg = _config(args)
    data = _read_json(args.input)
    try:
        series = Series.from_dict(data, cfg.precision)
        if args.shift is not None:
            ctx = cfg.precision.context()
            shift = parse_real(args.shift, ctx)
            coeffs = list(series.coeffs)
            coeffs[0] += shift
            series = Series(tuple(coeffs), series.prefactor, series.shift + shift, cfg.precision)
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"bad series: {exc}") from None
    orders = args.order or [series.order]
    if max(orders) > series.order:
        raise InputError(f"order {max(orders)} exceeds the series order {series.order}")
    try:
        normalized = normalize(series)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    results = []
    for k in orders:
        approx = resum(series, k, cfg)
        residual = reexpansion_residual(approx, normalized, k)
        results.append(
            {
                "approximant": approx.to_dict(),
                "diagnostics": {"reexpansion_residual": format_real(residual, cfg.precision)},
            }
        )
    out = {"config": cfg.to_dict() | {"shift": args.shift}, "results": results}
    if len(results) == 1:
        out = {"config": out["config"], **results[0]}
    _write(_dump(out), args.out)
    return 0


def _load_approximant(data, precision) -> FactorApproximant:
    if "approximant" in data:
        data = data["approximant"]
    elif "results" in data and data["results"]:
        data = data["results"][-1]["approximant"]
    try:
        return FactorApproximant.from_dict(data, precision)
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"bad approximant: {exc}") from None


def cmd_eval(args) -> int:
    cfg = _config(args)
    approx = _load_approximant(_read_json(args.input), cfg.precision)
    p = cfg.precision
    try:
        points = evaluate_grid(approx, args.grid)
    except EvaluationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.format == "json":
        doc = {
            "config": cfg.to_dict(),
            "points": [
                {"x": x, "value": None if v is None else format_real(v, p), "flag": "domain" if v is None else ""}
                for x, v in points
            ],
            "singularities": singularities(approx).to_dict(p)["singularities"],
        }
        try:
            doc["asymptote"] = strong_coupling(approx).to_dict(p)
        except EvaluationError:
            doc["asymptote"] = None
        _write(_dump(doc), args.out)
    else:
        lines = [f"# config: {json.dumps(cfg.to_dict(), sort_keys=True)}", "x,value,flag"]
        for x, v in points:
            lines.append(f"{x},,domain" if v is None else f"{x},{format_real(v, p)},")
        _write("\n".join(lines) + "\n", args.out)
    return 0


def cmd_bench(args) -> int:
    cfg = _config(args)
    target = args.id
    if target not in bench.TABLE_IDS + bench.FIGURE_IDS:
        raise InputError(f"unknown table or figure id {target!r}")
    k_max = max(args.order) if args.order else None
    kwargs = {}
    if target in bench.FIGURE_IDS:
        kwargs = {
            "points": args.points,
            "shift": args.shift if args.shift is not None else DEFAULT_SHIFT,
            "principal": args.principal,
        }
    try:
        report = bench.run(target, k_max, cfg, **kwargs)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.format == "json" and isinstance(report, bench.BenchReport):
        _write(report.to_json() + "\n", args.out)
    else:
        _write(report.to_csv(), args.out)
    return 0


def _load_ode(args, precision):
    if args.preset == "cubic":
        return cubic_oscillator(precision)
    if args.preset == "rayleigh":
        return rayleigh(args.eps, precision)
    try:
        return PolynomialODE.from_dict(_read_json(args.input), precision)
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"bad ODE spec: {exc}") from None


def cmd_ode(args) -> int:
    cfg = _config(args)
    if not args.input and not args.preset:
        raise InputError("give an ODE spec file or --preset")
    ode = _load_ode(args, cfg.precision)
    ic = InitialConditions(args.y0, args.v0)
    shift = args.shift if args.shift is not None else DEFAULT_SHIFT
    k = max(args.order) if args.order else 16
    data = bench.ode_extrapolation(ode, ic, k, args.t_max, args.points, shift, cfg, args.step, args.principal)
    data.config.update(ode=ode.to_dict(cfg.precision), y0=args.y0, v0=args.v0)
    approx = bench.ode_approximant(ode, ic, k, shift, cfg)
    if args.approximant_out:
        _write(_dump({"config": data.config, "approximant": approx.to_dict()}), args.approximant_out)
    _write(data.to_csv(), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="factorapprox", description="Factor-approximant resummation of power series.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-k", "--order", type=parse_orders, help="order K or range K1..K2")
    common.add_argument("--precision", type=int, default=256, help="working precision in bits (default 256)")
    common.add_argument("--shift", default=None, help="constant added before resummation and removed after")
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--degenerate-threshold", type=float, default=1e-8)
    common.add_argument("--merge-threshold", type=float, default=1e-6)
    common.add_argument("--residual-tolerance", type=float, default=1e-6)
    common.add_argument("--newton-steps", type=int, default=20)
    common.add_argument(
        "--principal",
        action="store_true",
        help="figures/ode: continue past real branch points on the principal sheet",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resum", parents=[common], help="resum a series JSON file")
    p.add_argument("input", help='series JSON {"coefficients": [...]} or - for stdin')
    p.set_defaults(func=cmd_resum)

    p = sub.add_parser("eval", parents=[common], help="evaluate an approximant on a grid")
    p.add_argument("input", help="approximant JSON")
    p.add_argument("--grid", type=parse_grid, required=True, help="a:b:n or x1,x2,...")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("bench", parents=[common], help="reproduce a benchmark table or figure")
    p.add_argument("id", help="tan, table1..table4, fig1..fig4")
    p.add_argument("--points", type=int, default=201)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("ode", parents=[common], help="resum an ODE solution and compare with RK4")
    p.add_argument("input", nargs="?", help="ODE spec JSON")
    p.add_argument("--preset", choices=("cubic", "rayleigh"))
    p.add_argument("--eps", default="0.1", help="epsilon for the rayleigh preset")
    p.add_argument("--y0", default="0")
    p.add_argument("--v0", default="1")
    p.add_argument("--t-max", type=float, default=6.0)
    p.add_argument("--points", type=int, default=201)
    p.add_argument("--step", type=float, default=1e-3, help="RK4 step")
    p.add_argument("--approximant-out", help="also write the approximant JSON here")
    p.set_defaults(func=cmd_ode)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SolverError, OracleError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except FactorApproxError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
