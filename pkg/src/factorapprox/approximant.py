"""Evaluating factor approximants on the real axis.

Also locates real singularities, reads off the x -> infinity power law and
forms the percentage errors and successive-order accuracy estimate.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .errors import (
    DomainError,
    ExponentialAsymptote,
    NonRealResult,
    ShiftObstruction,
    ZeroReference,
)
from .precision import Precision, format_real, parse_real
from .solver import ExpFactor, FactorApproximant, PowerFactor

__all__ = [
    "AsymptoticForm",
    "Singularity",
    "SingularityReport",
    "evaluate",
    "evaluate_grid",
    "grid_csv",
    "singularities",
    "strong_coupling",
    "percent_error",
    "accuracy_estimate",
]


def _nonreal_tolerance(precision: Precision, ctx):
    # 1e-20 at 256 bits, scaled with the working precision
    return ctx.mpf(10) ** (-20 * precision.bits / 256)


def _log_sum(approx: FactorApproximant, x, ctx, principal=False):
    """``sum n_i Log(1 + A_i u) + sum beta_j u`` at ``u = x**argument_power``.

    Returns ``(log_sum, product)``: real factors with integer exponents are
    multiplied into ``product`` directly, so polynomials evaluate exactly.
    Conjugate partners are stored as exact conjugates, so their principal
    logarithms cancel in the imaginary part term by term. With ``principal``
    a negative real base takes the principal complex logarithm instead of
    raising.
    """
    u = x**approx.argument_power
    acc = ctx.mpc(0)
    product = ctx.one
    for f in approx.factors:
        if isinstance(f, ExpFactor):
            acc += ctx.convert(f.beta) * u
            continue
        A, n = ctx.convert(f.A), ctx.convert(f.n)
        base = 1 + A * u
        if not f.is_real:
            acc += n * ctx.log(base)
            continue
        base = ctx.re(base)
        if base <= 0 and not (principal and base < 0):
            raise DomainError(
                f"factor base 1 + A x = {ctx.nstr(base, 8)} <= 0 at x = {ctx.nstr(x, 8)}"
            )
        if n == 0:
            continue
        if ctx.isint(n):
            product *= base ** int(n)
        else:
            acc += n * ctx.log(base if base > 0 else ctx.mpc(base))
    return acc, product


def evaluate(approx: FactorApproximant, x, *, principal=False):
    """Real value of the approximant at ``x`` (shift removed).

    ``principal=True`` continues past real branch points on the principal
    sheet and returns the real part; this is a diagnostic, not the default.
    """
    ctx = approx.precision.context()
    x = parse_real(x, ctx)
    s, product = _log_sum(approx, x, ctx, principal)
    if principal:
        value = ctx.convert(approx.prefactor) * product * ctx.re(ctx.exp(s))
        if approx.leading_power:
            value *= x**approx.leading_power
        return value - ctx.convert(approx.shift)
    re, im = ctx.re(s), ctx.im(s)
    if abs(im) > _nonreal_tolerance(approx.precision, ctx) * max(abs(re), ctx.one):
        raise NonRealResult(f"imaginary part {ctx.nstr(im, 5)} of the log-sum at x = {x}")
    value = ctx.convert(approx.prefactor) * product * ctx.exp(re)
    if approx.leading_power:
        value *= x**approx.leading_power
    return value - ctx.convert(approx.shift)


def evaluate_grid(approx: FactorApproximant, xs):
    """``[(x, value or None)]``; points past a singularity give ``None``."""
    out = []
    for x in xs:
        try:
            out.append((x, evaluate(approx, x)))
        except DomainError:
            out.append((x, None))
    return out


def grid_csv(approx: FactorApproximant, xs) -> str:
    """CSV with columns ``x,value,flag``; ``flag`` is ``domain`` where evaluation failed."""
    p = approx.precision
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x", "value", "flag"])
    for x, value in evaluate_grid(approx, xs):
        if value is None:
            writer.writerow([format_real(x, p), "", "domain"])
        else:
            writer.writerow([format_real(x, p), format_real(value, p), ""])
    return buf.getvalue()


@dataclass(frozen=True)
class Singularity:
    location: object
    exponent: object
    classification: str


@dataclass(frozen=True)
class SingularityReport:
    entries: tuple

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def nearest_divergence(self):
        """Closest entry with a negative exponent, or ``None``."""
        for entry in self.entries:
            if entry.exponent < 0:
                return entry
        return None

    def to_dict(self, precision: Precision) -> dict:
        return {
            "singularities": [
                {
                    "location": format_real(e.location, precision),
                    "exponent": format_real(e.exponent, precision),
                    "classification": e.classification,
                }
                for e in self.entries
            ]
        }


def _classify_exponent(n, ctx) -> str:
    if n > 0:
        return "zero"
    tol = ctx.ldexp(max(abs(n), ctx.one), -ctx.prec // 2)
    if abs(n - ctx.nint(n)) <= tol:
        return "pole"
    return "branch-point"


def singularities(approx: FactorApproximant) -> SingularityReport:
    """Positive real points where a real factor base ``1 + A x**m`` vanishes."""
    ctx = approx.precision.context()
    entries = []
    for f in approx.power_factors:
        if not f.is_real:
            continue
        A, n = ctx.re(ctx.convert(f.A)), ctx.re(ctx.convert(f.n))
        if A >= 0 or n == 0:
            continue
        location = ctx.root(-1 / A, approx.argument_power)
        entries.append(Singularity(location, n, _classify_exponent(n, ctx)))
    entries.sort(key=lambda e: (e.location, e.exponent))
    return SingularityReport(tuple(entries))


@dataclass(frozen=True)
class AsymptoticForm:
    """``f(x) ~ amplitude * x**exponent`` as ``x -> infinity``."""

    amplitude: object
    exponent: object

    def to_dict(self, precision: Precision) -> dict:
        return {
            "amplitude": format_real(self.amplitude, precision),
            "exponent": format_real(self.exponent, precision),
        }


def strong_coupling(approx: FactorApproximant) -> AsymptoticForm:
    if approx.exp_factors:
        raise ExponentialAsymptote("an exponential factor has no power-law asymptote")
    ctx = approx.precision.context()
    total = ctx.mpc(0)
    for f in approx.power_factors:
        total += ctx.convert(f.n) * ctx.log(ctx.convert(f.A))
    exponent_sum = ctx.fsum(ctx.re(ctx.convert(f.n)) for f in approx.power_factors)
    exponent = approx.argument_power * exponent_sum + approx.leading_power
    if approx.shift != 0 and exponent <= 0:
        raise ShiftObstruction("a nonzero shift dominates a non-growing asymptote")
    amplitude = abs(ctx.convert(approx.prefactor) * ctx.exp(ctx.re(total)))
    return AsymptoticForm(amplitude, exponent)


def percent_error(value, reference, precision: Precision | None = None):
    """``(value - reference) / reference * 100``."""
    ctx = (precision or Precision()).context()
    value, reference = ctx.convert(value), ctx.convert(reference)
    if reference == 0:
        raise ZeroReference("percentage error against a zero reference")
    return (value - reference) / reference * 100


def accuracy_estimate(f_k: FactorApproximant, f_km1: FactorApproximant, x):
    """Half the difference of consecutive orders at ``x``."""
    if abs(f_k.order - f_km1.order) != 1:
        raise ValueError("accuracy estimate needs approximants of consecutive orders")
    return (evaluate(f_k, x) - evaluate(f_km1, x)) / 2


def report_json(obj, precision: Precision) -> str:
    return json.dumps(obj.to_dict(precision))
