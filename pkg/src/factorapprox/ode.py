"""Taylor series at t = 0 for autonomous ODEs ``y'' = P(y, y')`` with polynomial ``P``."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import ZeroLeadingCoefficient
from .precision import DEFAULT_PRECISION, Precision, as_precision, format_real, parse_real
from .series import Series, normalize

__all__ = [
    "Term",
    "PolynomialODE",
    "InitialConditions",
    "cubic_oscillator",
    "rayleigh",
    "taylor_solution",
    "prepare_for_resummation",
    "DEFAULT_SHIFT",
]

DEFAULT_SHIFT = 2.0


@dataclass(frozen=True)
class Term:
    """``coefficient * y**power_of_y * (y')**power_of_yprime``."""

    coefficient: object
    power_of_y: int
    power_of_yprime: int

    def __post_init__(self):
        if self.power_of_y < 0 or self.power_of_yprime < 0:
            raise ValueError("term powers must be non-negative")


@dataclass(frozen=True)
class PolynomialODE:
    terms: tuple
    epsilon: object = None
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    def rhs(self, y: float, v: float) -> float:
        """Double-precision ``P(y, y')`` for the numerical integrator."""
        return sum(float(t.coefficient) * y**t.power_of_y * v**t.power_of_yprime for t in self.terms)

    def to_dict(self, precision: Precision = DEFAULT_PRECISION) -> dict:
        return {
            "terms": [
                {"c": format_real(t.coefficient, precision), "py": t.power_of_y, "pyp": t.power_of_yprime}
                for t in self.terms
            ],
            "epsilon": None if self.epsilon is None else format_real(self.epsilon, precision),
        }

    @classmethod
    def from_dict(cls, data: dict, precision=None) -> "PolynomialODE":
        """Read ``{"terms": [{"c", "py", "pyp"[, "eps"]}], "epsilon"}``.

        A term's optional ``"eps"`` is the power of ``epsilon`` multiplying its
        coefficient, so one file can describe a family of equations.
        """
        ctx = as_precision(precision).context()
        eps = data.get("epsilon")
        eps = None if eps is None else parse_real(eps, ctx)
        terms = []
        for item in data["terms"]:
            c = parse_real(item["c"], ctx)
            power = int(item.get("eps", 0))
            if power:
                if eps is None:
                    raise ValueError("term references epsilon but none is given")
                c *= eps**power
            terms.append(Term(c, int(item.get("py", 0)), int(item.get("pyp", 0))))
        return cls(tuple(terms), eps)

    @classmethod
    def from_json(cls, text: str, precision=None) -> "PolynomialODE":
        return cls.from_dict(json.loads(text), precision)


@dataclass(frozen=True)
class InitialConditions:
    y0: object = 0
    v0: object = 1


def cubic_oscillator(precision=None) -> PolynomialODE:
    """``y'' = -y - y**2``: oscillator in the cubic potential ``y**2/2 + y**3/3``."""
    ctx = as_precision(precision).context()
    return PolynomialODE((Term(ctx.mpf(-1), 1, 0), Term(ctx.mpf(-1), 2, 0)), None, "cubic")


def rayleigh(epsilon="0.1", precision=None) -> PolynomialODE:
    """``y'' = -y + eps y' - (eps/3) y'**3``."""
    ctx = as_precision(precision).context()
    eps = parse_real(epsilon, ctx)
    terms = (Term(ctx.mpf(-1), 1, 0), Term(eps, 0, 1), Term(-eps / 3, 0, 3))
    return PolynomialODE(terms, eps, "rayleigh")


def _mul_coeff(a, b, n, ctx):
    return ctx.fsum(a[i] * b[n - i] for i in range(n + 1))


def taylor_solution(ode: PolynomialODE, ic: InitialConditions, order: int, precision=None) -> Series:
    """Coefficients ``a_0..a_order`` of ``y(t) = sum a_n t**n``.

    ``(n+2)(n+1) a_{n+2}`` is the n-th coefficient of ``P(y, y')``. The powers
    of ``y`` and ``y'`` are kept as running truncated series and extended by
    one coefficient per step, since ``a_{n+1}`` is the newest input needed.
    """
    if order < 2:
        raise ValueError("order must be >= 2")
    precision = as_precision(precision)
    ctx = precision.context()
    a = [parse_real(ic.y0, ctx), parse_real(ic.v0, ctx)]
    terms = [(parse_real(t.coefficient, ctx), t.power_of_y, t.power_of_yprime) for t in ode.terms]
    max_py = max((t[1] for t in terms), default=0)
    max_pyp = max((t[2] for t in terms), default=0)
    # ypow[j][n]: n-th coefficient of y**j; vpow likewise for y'
    ypow = [[] for _ in range(max_py + 1)]
    vpow = [[] for _ in range(max_pyp + 1)]
    y, v = [], []
    for n in range(order - 1):
        y.append(a[n])
        v.append((n + 1) * a[n + 1])
        ypow[0].append(ctx.one if n == 0 else ctx.zero)
        vpow[0].append(ctx.one if n == 0 else ctx.zero)
        for j in range(1, max_py + 1):
            ypow[j].append(_mul_coeff(ypow[j - 1], y, n, ctx))
        for j in range(1, max_pyp + 1):
            vpow[j].append(_mul_coeff(vpow[j - 1], v, n, ctx))
        rhs = ctx.zero
        for c, py, pyp in terms:
            rhs += c * _mul_coeff(ypow[py], vpow[pyp], n, ctx)
        a.append(rhs / ((n + 2) * (n + 1)))
    return Series(tuple(a[: order + 1]), None, 0, precision)


def prepare_for_resummation(raw: Series, shift=DEFAULT_SHIFT) -> Series:
    """Add ``shift`` to the constant term and normalize.

    The returned series records both the divided-out constant and the shift,
    so an approximant built from it evaluates back to ``raw``'s function.
    """
    ctx = raw.precision.context()
    shift = parse_real(shift, ctx)
    coeffs = list(raw.coeffs)
    coeffs[0] = coeffs[0] + shift
    if coeffs[0] == 0:
        raise ZeroLeadingCoefficient("shifted constant term is zero; choose another shift")
    out = normalize(coeffs, raw.precision)
    return Series(out.coeffs, out.prefactor, shift, raw.precision)
