"""Determination of factor-approximant parameters from log-moments.

The accuracy-through-order system ``sum_i n_i A_i**m = B_m`` is a moment
problem: the sequence ``B_m`` obeys a linear recurrence whose characteristic
roots are the ``A_i``. We solve the Hankel system for that recurrence, find the
roots, and then fit the exponents ``n_i`` by (least-squares) linear algebra.

Odd orders fix one root at exactly ``A = 1``; the recurrence polynomial is
``(z - 1) q(z)`` so only ``q`` is unknown and the gauge enters linearly.

Characteristic roots that vanish relative to the moment scale are the
``A -> 0, n -> inf, nA -> beta`` limit and become :class:`ExpFactor`; their
only moment is ``beta`` on ``B_1``.

Complex roots are handled as conjugate pairs parameterised by the real and
imaginary parts of one member, so every linear solve is real and the
resulting approximant is conjugate-closed by construction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from .errors import (
    ConjugateClosureError,
    GaugeConflict,
    NoProgress,
    ResidualTooLarge,
    SingularMomentSystem,
)
from .precision import (
    DEFAULT_PRECISION,
    Precision,
    as_precision,
    format_complex,
    format_real,
    parse_complex,
    parse_real,
)
from .series import LogMoments, Series, log_moments, normalize, series_exp, series_from_moments

__all__ = [
    "PowerFactor",
    "ExpFactor",
    "FactorApproximant",
    "SolverConfig",
    "solve_even",
    "solve_odd",
    "solve",
    "resum",
    "refine",
    "re_expand",
    "reexpansion_residual",
    "moment_sums",
]


@dataclass(frozen=True)
class PowerFactor:
    """``(1 + A x)**n``; ``A`` and ``n`` are mpf when real, mpc otherwise."""

    A: object
    n: object

    @property
    def is_real(self) -> bool:
        return not hasattr(self.A, "imag") or self.A.imag == 0


@dataclass(frozen=True)
class ExpFactor:
    """``exp(beta x)``, the limit of ``(1 + A x)**(beta / A)`` as ``A -> 0``."""

    beta: object


@dataclass(frozen=True)
class SolverConfig:
    precision: Precision = field(default=DEFAULT_PRECISION)
    degenerate_threshold: float = 1e-8
    merge_threshold: float = 1e-6
    residual_tolerance: float = 1e-6
    newton_steps: int = 20

    def __post_init__(self):
        object.__setattr__(self, "precision", as_precision(self.precision))
        if self.degenerate_threshold <= 0 or self.merge_threshold <= 0:
            raise ValueError("thresholds must be positive")
        if not 0 < self.residual_tolerance < 1:
            raise ValueError("residual_tolerance must lie in (0, 1)")
        if self.newton_steps < 0:
            raise ValueError("newton_steps must be >= 0")

    def to_dict(self) -> dict:
        return {
            "precision_bits": self.precision.bits,
            "degenerate_threshold": self.degenerate_threshold,
            "merge_threshold": self.merge_threshold,
            "residual_tolerance": self.residual_tolerance,
            "newton_steps": self.newton_steps,
        }


def _round_factor(f, ctx):
    # stored parameters carry exactly the working precision, so decimal
    # serialization round-trips bit for bit
    if isinstance(f, ExpFactor):
        return ExpFactor(+ctx.convert(f.beta))
    return PowerFactor(+ctx.convert(f.A), +ctx.convert(f.n))


@dataclass(frozen=True)
class FactorApproximant:
    """``prefactor * x**leading_power * F(x**argument_power) - shift``.

    ``F`` is the product of ``factors``. Plain series use
    ``argument_power = 1`` and ``leading_power = 0``; odd functions such as
    ``tan`` are resummed as ``x * F(x**2)``.
    """

    order: int
    factors: tuple
    prefactor: object = 1
    shift: object = 0
    argument_power: int = 1
    leading_power: int = 0
    precision: Precision = field(default=DEFAULT_PRECISION)
    residual: object = field(default=None, compare=False)

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if self.argument_power < 1 or self.leading_power < 0:
            raise ValueError("argument_power >= 1 and leading_power >= 0 required")
        ctx = self.precision.context()
        object.__setattr__(self, "factors", tuple(_round_factor(f, ctx) for f in self.factors))
        object.__setattr__(self, "prefactor", parse_real(self.prefactor, ctx))
        object.__setattr__(self, "shift", parse_real(self.shift, ctx))

    @property
    def power_factors(self) -> list:
        return [f for f in self.factors if isinstance(f, PowerFactor)]

    @property
    def exp_factors(self) -> list:
        return [f for f in self.factors if isinstance(f, ExpFactor)]

    def to_dict(self) -> dict:
        p = self.precision
        factors = []
        for f in self.factors:
            if isinstance(f, ExpFactor):
                factors.append({"type": "exp", "beta": format_real(f.beta, p)})
            else:
                factors.append(
                    {"type": "power", "A": format_complex(f.A, p), "n": format_complex(f.n, p)}
                )
        out = {
            "order": self.order,
            "shift": format_real(self.shift, p),
            "prefactor": format_real(self.prefactor, p),
            "factors": factors,
        }
        if self.argument_power != 1:
            out["argument_power"] = self.argument_power
        if self.leading_power != 0:
            out["leading_power"] = self.leading_power
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict, precision=None) -> "FactorApproximant":
        precision = as_precision(precision)
        ctx = precision.context()
        factors = []
        for item in data["factors"]:
            kind = item.get("type")
            if kind == "exp":
                factors.append(ExpFactor(parse_real(item["beta"], ctx)))
            elif kind == "power":
                factors.append(PowerFactor(parse_complex(item["A"], ctx), parse_complex(item["n"], ctx)))
            else:
                raise ValueError(f"unknown factor type {kind!r}")
        return cls(
            order=int(data["order"]),
            factors=tuple(factors),
            prefactor=data.get("prefactor", 1),
            shift=data.get("shift", 0),
            argument_power=int(data.get("argument_power", 1)),
            leading_power=int(data.get("leading_power", 0)),
            precision=precision,
        )

    @classmethod
    def from_json(cls, text: str, precision=None) -> "FactorApproximant":
        return cls.from_dict(json.loads(text), precision)


# --------------------------------------------------------------------------
# Re-expansion


def _log_series(approx: FactorApproximant, order: int, ctx, majorant=False) -> list:
    g = [ctx.zero] * (order + 1)
    for f in approx.factors:
        if isinstance(f, ExpFactor):
            if order >= 1:
                g[1] += abs(f.beta) if majorant else f.beta
            continue
        A, n = ctx.convert(f.A), ctx.convert(f.n)
        if majorant:
            A, n = abs(A), abs(n)
        power = ctx.one
        for m in range(1, order + 1):
            power *= A
            term = n * power / m
            g[m] += term if (majorant or m % 2) else -term
    return [ctx.re(v) for v in g]


def re_expand(approx: FactorApproximant, order: int) -> Series:
    """Taylor coefficients of the factor product about zero, up to ``order``.

    Built by exponentiating ``sum n_i ln(1 + A_i x) + sum beta_j x``. The
    prefactor and shift are carried as metadata, not multiplied in.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    ctx = approx.precision.context()
    coeffs = series_exp(_log_series(approx, order, ctx), ctx)
    return Series(tuple(coeffs), approx.prefactor, approx.shift, approx.precision)


def _majorant(approx: FactorApproximant, order: int, ctx) -> list:
    # coefficients of prod (1 - |A| x)**(-|n|) * exp(|beta| x); they bound |a_n|
    # of the factor product term by term.
    return series_exp(_log_series(approx, order, ctx, majorant=True), ctx)


def reexpansion_residual(approx: FactorApproximant, series: Series, order=None):
    """Largest relative mismatch of re-expanded coefficients 1..order.

    Each coefficient is compared on the scale ``max(|a_n|, M_n)`` with ``M_n``
    the majorant coefficient, which stays meaningful when ``a_n`` vanishes.
    """
    if order is None:
        order = min(approx.order, series.order)
    ctx = approx.precision.context()
    got = re_expand(approx, order).coeffs
    maj = _majorant(approx, order, ctx)
    worst = ctx.zero
    for n in range(1, order + 1):
        a = ctx.convert(series.coeffs[n])
        scale = max(abs(a), maj[n])
        diff = abs(got[n] - a)
        if scale == 0:
            if diff != 0:
                return ctx.inf
            continue
        worst = max(worst, diff / scale)
    return worst


def moment_sums(approx: FactorApproximant, order: int) -> list:
    """``sum_i n_i A_i**m + beta [m == 1]`` for m = 1..order, as complex numbers."""
    ctx = approx.precision.context()
    out = []
    for m in range(1, order + 1):
        acc = ctx.mpc(0)
        for f in approx.factors:
            if isinstance(f, ExpFactor):
                if m == 1:
                    acc += f.beta
            else:
                acc += ctx.convert(f.n) * ctx.convert(f.A) ** m
        out.append(acc)
    return out


# --------------------------------------------------------------------------
# Nodes: the real parameterisation used by the linear solves and Newton.
#
#   ("gauge", 1)      fixed A = 1, unknown real n
#   ("real", a)       real A, real n
#   ("pair", z)       A = z and conj(z), n = w and conj(w); Im z > 0
#   ("exp", 0)        exponential limit, unknown beta


def _node_columns(kind, z, k, ctx):
    """Columns of the moment map for the node's real weight unknowns."""
    if kind == "exp":
        return [[ctx.one] + [ctx.zero] * (k - 1)]
    if kind == "gauge":
        return [[ctx.one] * k]
    if kind == "real":
        return [[z**m for m in range(1, k + 1)]]
    powers = [z**m for m in range(1, k + 1)]
    return [[2 * ctx.re(p) for p in powers], [-2 * ctx.im(p) for p in powers]]


def _lstsq(rows, rhs, ctx):
    """Solve a (possibly overdetermined) real system; ZeroDivisionError if singular."""
    nrow, ncol = len(rows), len(rows[0]) if rows else 0
    if ncol == 0:
        return []
    if nrow < ncol:
        raise ZeroDivisionError("underdetermined system")
    M = ctx.matrix(rows)
    b = ctx.matrix([[v] for v in rhs])
    if nrow == ncol:
        x = ctx.lu_solve(M, b)
    else:
        x, _ = ctx.qr_solve(M, b)
    out = [x[i] for i in range(ncol)]
    if not all(ctx.isfinite(v) for v in out):
        raise ZeroDivisionError("non-finite solution")
    return out


def _recurrence(seq, r, ctx):
    """Monic degree-r polynomial (highest power first) annihilating ``seq``.

    Solves ``sum_{j<r} c_j seq[m+j] = -seq[m+r]`` for every admissible ``m``.
    """
    if r == 0:
        return [ctx.one]
    neq = len(seq) - r
    rows = [[seq[m + j] for j in range(r)] for m in range(neq)]
    rhs = [-seq[m + r] for m in range(neq)]
    c = _lstsq(rows, rhs, ctx)
    return [ctx.one] + list(reversed(c))


def _roots(coeffs, ctx):
    if len(coeffs) <= 1:
        return []
    try:
        return list(
            ctx.polyroots(coeffs, maxsteps=200 + 20 * len(coeffs), extraprec=ctx.prec)
        )
    except ctx.NoConvergence:
        deg = len(coeffs) - 1
        comp = ctx.matrix(deg, deg)
        for i in range(1, deg):
            comp[i, i - 1] = 1
        for i in range(deg):
            comp[i, deg - 1] = -coeffs[deg - i]
        return list(ctx.eig(comp, left=False, right=False))


def _moment_scale(B, ctx):
    scale = ctx.zero
    for m, b in enumerate(B, start=1):
        if b != 0:
            scale = max(scale, abs(b) ** (ctx.one / m))
    return scale


def _classify(roots, B, odd, cfg, ctx):
    scale = max([abs(z) for z in roots] + [_moment_scale(B, ctx), ctx.one if odd else ctx.zero])
    if scale == 0:
        scale = ctx.one
    real_tol = ctx.ldexp(scale, -ctx.prec // 2)
    deg_tol = cfg.degenerate_threshold * scale
    merge_tol = cfg.merge_threshold * scale

    nodes = [("gauge", ctx.one)] if odd else []
    has_exp = False
    upper, lower = [], []
    for z in roots:
        z = ctx.convert(z)
        if abs(z) <= deg_tol:
            has_exp = True
        elif abs(ctx.im(z)) <= real_tol:
            nodes.append(("real", ctx.re(z)))
        elif ctx.im(z) > 0:
            upper.append(ctx.mpc(z))
        else:
            lower.append(ctx.mpc(z))
    if len(upper) != len(lower):
        raise ConjugateClosureError("complex characteristic roots do not pair up")
    for z in upper:
        j = min(range(len(lower)), key=lambda i: abs(lower[i] - ctx.conj(z)))
        partner = lower.pop(j)
        if abs(partner - ctx.conj(z)) > merge_tol + real_tol:
            raise ConjugateClosureError(f"root {z} has no conjugate partner")
        z = (z + ctx.conj(partner)) / 2
        if 2 * ctx.im(z) <= merge_tol:
            nodes.append(("real", ctx.re(z)))
        else:
            nodes.append(("pair", z))

    merged = []
    for kind, z in nodes:
        for i, (k2, z2) in enumerate(merged):
            if k2 == "pair" or kind == "pair":
                close = k2 == kind and abs(z - z2) <= merge_tol
            else:
                close = abs(z - z2) <= merge_tol
            if close:
                if k2 == "gauge":
                    pass
                elif kind == "gauge":
                    merged[i] = (kind, z)
                else:
                    merged[i] = (k2, (z + z2) / 2)
                break
        else:
            merged.append((kind, z))
    if has_exp:
        merged.append(("exp", ctx.zero))
    return _sort_nodes(merged, ctx)


def _sort_nodes(nodes, ctx):
    rank = {"gauge": 0, "real": 1, "pair": 2, "exp": 3}

    def key(node):
        kind, z = node
        return (rank[kind], float(ctx.re(z)), float(ctx.im(z)))

    return sorted(nodes, key=key)


def _fit_weights(nodes, B, k, ctx):
    cols = []
    for kind, z in nodes:
        cols.extend(_node_columns(kind, z, k, ctx))
    rows = [[col[m] for col in cols] for m in range(k)]
    return _lstsq(rows, list(B[:k]), ctx)


def _to_factors(nodes, weights, ctx):
    factors, i = [], 0
    for kind, z in nodes:
        if kind == "exp":
            factors.append(ExpFactor(weights[i]))
            i += 1
        elif kind == "gauge":
            factors.append(PowerFactor(ctx.one, weights[i]))
            i += 1
        elif kind == "real":
            factors.append(PowerFactor(z, weights[i]))
            i += 1
        else:
            w = ctx.mpc(weights[i], weights[i + 1])
            factors.append(PowerFactor(z, w))
            factors.append(PowerFactor(ctx.conj(z), ctx.conj(w)))
            i += 2
    return tuple(factors)


def _from_factors(approx: FactorApproximant, ctx):
    """Inverse of :func:`_to_factors`: nodes and real weight vector."""
    gauge_used = approx.order % 2 == 1
    nodes, weights = [], []
    pending = list(approx.factors)
    while pending:
        f = pending.pop(0)
        if isinstance(f, ExpFactor):
            nodes.append(("exp", ctx.zero))
            weights.append(ctx.convert(f.beta))
        elif f.is_real:
            A = ctx.re(ctx.convert(f.A))
            n = ctx.re(ctx.convert(f.n))
            if gauge_used and A == 1:
                nodes.append(("gauge", ctx.one))
                gauge_used = False
            else:
                nodes.append(("real", A))
            weights.append(n)
        else:
            A, n = ctx.convert(f.A), ctx.convert(f.n)
            j = min(
                range(len(pending)),
                key=lambda i: abs(ctx.convert(getattr(pending[i], "A", ctx.inf)) - ctx.conj(A)),
                default=None,
            )
            if j is None or isinstance(pending[j], ExpFactor):
                raise ConjugateClosureError("complex factor without conjugate partner")
            pending.pop(j)
            if ctx.im(A) < 0:
                A, n = ctx.conj(A), ctx.conj(n)
            nodes.append(("pair", A))
            weights.extend([ctx.re(n), ctx.im(n)])
    return nodes, weights


# --------------------------------------------------------------------------
# Newton polish


def _pack(nodes, weights):
    """Flatten unknowns: per node its free root parameters then its weights."""
    x, i = [], 0
    for kind, z in nodes:
        if kind == "real":
            x.append(z)
        elif kind == "pair":
            x.extend([z.real, z.imag])
        nw = 2 if kind == "pair" else 1
        x.extend(weights[i : i + nw])
        i += nw
    return x


def _unpack(nodes, x, ctx):
    new_nodes, weights, i = [], [], 0
    for kind, z in nodes:
        if kind == "real":
            z = x[i]
            i += 1
        elif kind == "pair":
            z = ctx.mpc(x[i], x[i + 1])
            i += 2
        nw = 2 if kind == "pair" else 1
        weights.extend(x[i : i + nw])
        i += nw
        new_nodes.append((kind, z))
    return new_nodes, weights


def _residual_and_jacobian(nodes, weights, B, k, ctx, want_jac=True):
    F = [-ctx.convert(b) for b in B[:k]]
    size = [abs(ctx.convert(b)) for b in B[:k]]
    J = [[] for _ in range(k)]
    i = 0
    for kind, z in nodes:
        if kind == "exp":
            beta = weights[i]
            F[0] += beta
            size[0] += abs(beta)
            for m in range(k):
                J[m].append(ctx.one if m == 0 else ctx.zero)
            i += 1
        elif kind == "gauge":
            n = weights[i]
            for m in range(k):
                F[m] += n
                size[m] += abs(n)
                J[m].append(ctx.one)
            i += 1
        elif kind == "real":
            n = weights[i]
            for m in range(k):
                zp = z ** (m + 1)
                F[m] += n * zp
                size[m] += abs(n * zp)
                J[m].append(n * (m + 1) * z**m)
                J[m].append(zp)
            i += 1
        else:
            w = ctx.mpc(weights[i], weights[i + 1])
            for m in range(k):
                zp = z ** (m + 1)
                t = w * zp
                F[m] += 2 * ctx.re(t)
                size[m] += 2 * abs(t)
                d = w * (m + 1) * z**m
                J[m].extend([2 * ctx.re(d), -2 * ctx.im(d), 2 * ctx.re(zp), -2 * ctx.im(zp)])
            i += 2
    norm = ctx.zero
    for f, s in zip(F, size):
        if s != 0:
            norm = max(norm, abs(f) / s)
        elif f != 0:
            norm = ctx.inf
    return F, norm, (J if want_jac else None)


def _newton(nodes, weights, B, k, steps, ctx):
    x = _pack(nodes, weights)
    F, norm, J = _residual_and_jacobian(nodes, weights, B, k, ctx)
    history = [norm]
    floor = ctx.ldexp(ctx.one, 8 - ctx.prec)
    for _ in range(steps):
        if norm <= floor:
            break
        try:
            dx = _lstsq(J, [-f for f in F], ctx)
        except ZeroDivisionError:
            break
        lam, accepted = ctx.one, False
        for _ in range(40):
            xt = [a + lam * d for a, d in zip(x, dx)]
            nt, wt = _unpack(nodes, xt, ctx)
            if all(kind != "pair" or z.imag > 0 for kind, z in nt):
                Ft, normt, _ = _residual_and_jacobian(nt, wt, B, k, ctx, want_jac=False)
                if normt < norm:
                    accepted = True
                    break
            lam /= 2
        if not accepted:
            break
        x = xt
        nodes, weights = nt, wt
        F, norm, J = _residual_and_jacobian(nodes, weights, B, k, ctx)
        history.append(norm)
    return nodes, weights, norm, history


def refine(approx: FactorApproximant, B: LogMoments, cfg: SolverConfig = None, *, return_history=False):
    """Damped Gauss-Newton polish of the factor parameters.

    The gauge factor of odd orders keeps ``A = 1`` exactly. Steps are only
    accepted when they lower the scaled moment residual, so the residual
    sequence is non-increasing; ``return_history=True`` also returns it.
    The result's ``residual`` field holds the re-expansion residual against
    the series generated by ``B``. Raises :class:`NoProgress` when the
    iteration stalls above ``cfg.residual_tolerance``.
    """
    cfg = cfg or SolverConfig(precision=approx.precision)
    ctx = cfg.precision.context()
    k = approx.order
    if len(B) < k:
        raise ValueError(f"need {k} log-moments, got {len(B)}")
    nodes, weights = _from_factors(approx, ctx)
    nodes, weights, norm, history = _newton(nodes, weights, B.B, k, cfg.newton_steps, ctx)
    out = replace(approx, factors=_to_factors(nodes, weights, ctx))
    target = series_from_moments(LogMoments(B.B[:k], cfg.precision))
    out = replace(out, residual=reexpansion_residual(out, target, k))
    if norm > cfg.residual_tolerance:
        raise NoProgress(
            f"Newton stalled at scaled moment residual {ctx.nstr(norm, 5)}",
            approximant=out,
            residual=norm,
        )
    return (out, history) if return_history else out


# --------------------------------------------------------------------------
# Prony solves


def _solve(B: LogMoments, k: int, odd: bool, cfg: SolverConfig) -> FactorApproximant:
    ctx = cfg.precision.context()
    moments = [ctx.convert(b) for b in B.B[:k]]
    target = series_from_moments(LogMoments(tuple(moments), cfg.precision))
    p = k // 2
    if odd:
        seq = [moments[i + 1] - moments[i] for i in range(k - 1)]
    else:
        seq = moments

    # Full rank first; a rank-deficient Hankel matrix means the moments come
    # from fewer factors, so retry with shorter recurrences.
    first_failure = None
    best = None
    for r in range(p, -1, -1):
        try:
            roots = _roots(_recurrence(seq, r, ctx), ctx)
            nodes = _classify(roots, moments, odd, cfg, ctx)
            try:
                weights = _fit_weights(nodes, moments, k, ctx)
            except ZeroDivisionError:
                if odd:
                    raise GaugeConflict("weight system singular with the A = 1 gauge factor")
                raise
        except (ZeroDivisionError, ConjugateClosureError) as exc:
            if first_failure is None:
                first_failure = exc
            continue
        if odd and not ctx.isfinite(weights[0]):
            raise GaugeConflict("gauge factor exponent is not finite")
        approx = FactorApproximant(k, _to_factors(nodes, weights, ctx), precision=cfg.precision)
        if cfg.newton_steps > 0:
            try:
                approx = refine(approx, LogMoments(tuple(moments), cfg.precision), cfg)
            except NoProgress as exc:
                approx = exc.approximant
            residual = approx.residual
        else:
            residual = reexpansion_residual(approx, target, k)
            approx = replace(approx, residual=residual)
        if residual <= cfg.residual_tolerance:
            return approx
        if best is None or residual < best.residual:
            best = approx
    if best is None:
        raise SingularMomentSystem(
            f"moment system of order {k} is singular at every reduced rank"
        ) from first_failure
    raise ResidualTooLarge(
        f"order-{k} re-expansion residual {ctx.nstr(best.residual, 5)} exceeds "
        f"tolerance {cfg.residual_tolerance}",
        residual=best.residual,
    )


def solve_even(B: LogMoments, k: int, cfg: SolverConfig = None) -> FactorApproximant:
    """Parameters of the order-``k`` (``k = 2p``) approximant with ``p`` factors."""
    cfg = cfg or SolverConfig(precision=B.precision)
    if k < 2 or k % 2:
        raise ValueError(f"solve_even needs an even order >= 2, got {k}")
    if len(B) < k:
        raise ValueError(f"need {k} log-moments, got {len(B)}")
    return _solve(B, k, False, cfg)


def solve_odd(B: LogMoments, k: int, cfg: SolverConfig = None) -> FactorApproximant:
    """Parameters of the order-``k`` (``k = 2p + 1``) approximant with ``p + 1`` factors.

    One factor carries ``A = 1`` exactly.
    """
    cfg = cfg or SolverConfig(precision=B.precision)
    if k < 1 or k % 2 == 0:
        raise ValueError(f"solve_odd needs an odd order >= 1, got {k}")
    if len(B) < k:
        raise ValueError(f"need {k} log-moments, got {len(B)}")
    return _solve(B, k, True, cfg)


def solve(B: LogMoments, k: int, cfg: SolverConfig = None) -> FactorApproximant:
    return solve_odd(B, k, cfg) if k % 2 else solve_even(B, k, cfg)


def resum(series: Series, k: int, cfg: SolverConfig = None, *, argument_power=1, leading_power=0):
    """Factor approximant of order ``k`` for a (raw or normalized) series.

    The prefactor and shift recorded on the series carry over, so evaluating
    the result reproduces the original function.
    """
    cfg = cfg or SolverConfig(precision=series.precision)
    if k > series.order:
        raise ValueError(f"order {k} exceeds the series order {series.order}")
    if not series.is_normalized or series.prefactor is None:
        series = normalize(series)
    approx = solve(log_moments(series.truncate(k)), k, cfg)
    return replace(
        approx,
        prefactor=series.prefactor,
        shift=series.shift,
        argument_power=argument_power,
        leading_power=leading_power,
    )
