"""Truncated power series, normalization to a unit constant term, and log-moments.

A series ``f_K(x) = a_0 + a_1 x + ... + a_K x^K`` is stored as a tuple of
mpf coefficients. Resummation works on the normalized form ``a_0 = 1``; the
divided-out constant is kept on ``prefactor`` and an additive constant applied
beforehand (the shift used for sign-changing functions) on ``shift``, so that
the original function is ``prefactor * f(x) - shift``.

The log-moments are ``B_n = (-1)**(n-1) * n * c_n`` where ``c_n`` are the
Taylor coefficients of ``ln f(x)``. A single factor ``(1 + A x)**m`` has
``B_n = m * A**n``, and products of factors add their moments.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .errors import ZeroLeadingCoefficient
from .precision import (
    DEFAULT_PRECISION,
    Precision,
    as_precision,
    format_real,
    parse_real,
)

__all__ = [
    "Series",
    "LogMoments",
    "normalize",
    "log_moments",
    "truncated_mul",
    "series_log",
    "series_exp",
    "series_from_moments",
]


@dataclass(frozen=True)
class Series:
    coeffs: tuple
    prefactor: object = None
    shift: object = 0
    precision: Precision = field(default=DEFAULT_PRECISION)

    def __post_init__(self):
        if len(self.coeffs) < 1:
            raise ValueError("a series needs at least one coefficient")
        ctx = self.precision.context()
        coeffs = tuple(parse_real(c, ctx) for c in self.coeffs)
        if not all(ctx.isfinite(c) for c in coeffs):
            raise ValueError("series coefficients must be finite")
        object.__setattr__(self, "coeffs", coeffs)
        if self.prefactor is not None:
            object.__setattr__(self, "prefactor", parse_real(self.prefactor, ctx))
        object.__setattr__(self, "shift", parse_real(self.shift, ctx))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_normalized(self) -> bool:
        return self.coeffs[0] == 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot truncate order-{self.order} series to order {order}")
        return Series(self.coeffs[: order + 1], self.prefactor, self.shift, self.precision)

    def to_dict(self) -> dict:
        p = self.precision
        out = {"coefficients": [format_real(c, p) for c in self.coeffs]}
        out["prefactor"] = format_real(self.prefactor if self.prefactor is not None else 1, p)
        if self.shift != 0:
            out["shift"] = format_real(self.shift, p)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict, precision=None) -> "Series":
        precision = as_precision(precision)
        if "coefficients" not in data:
            raise KeyError("series JSON needs a 'coefficients' list")
        return cls(
            tuple(data["coefficients"]),
            data.get("prefactor"),
            data.get("shift", 0),
            precision,
        )

    @classmethod
    def from_json(cls, text: str, precision=None) -> "Series":
        return cls.from_dict(json.loads(text), precision)


@dataclass(frozen=True)
class LogMoments:
    B: tuple
    precision: Precision = field(default=DEFAULT_PRECISION)

    def __post_init__(self):
        ctx = self.precision.context()
        B = tuple(parse_real(b, ctx) for b in self.B)
        if not all(ctx.isfinite(b) for b in B):
            raise ValueError("log-moments must be finite")
        object.__setattr__(self, "B", B)

    @property
    def order(self) -> int:
        return len(self.B)

    def __len__(self):
        return len(self.B)

    def __getitem__(self, n):
        return self.B[n]


def normalize(raw_coeffs, precision=None) -> Series:
    """Divide through by the constant term.

    ``raw_coeffs`` may be a plain sequence or a :class:`Series`; a Series keeps
    its shift and folds any existing prefactor into the new one.
    """
    if isinstance(raw_coeffs, Series):
        precision = raw_coeffs.precision if precision is None else as_precision(precision)
        outer = raw_coeffs.prefactor if raw_coeffs.prefactor is not None else 1
        shift = raw_coeffs.shift
        raw = raw_coeffs.coeffs
    else:
        precision = as_precision(precision)
        outer, shift, raw = 1, 0, list(raw_coeffs)
    if len(raw) == 0:
        raise ValueError("cannot normalize an empty coefficient list")
    ctx = precision.context()
    coeffs = [parse_real(c, ctx) for c in raw]
    a0 = coeffs[0]
    if a0 == 0:
        raise ZeroLeadingCoefficient(
            "constant term is zero; factor out the leading power of x first"
        )
    normed = (ctx.mpf(1),) + tuple(c / a0 for c in coeffs[1:])
    return Series(normed, a0 * parse_real(outer, ctx), shift, precision)


def series_log(coeffs: Sequence, ctx) -> list:
    """Taylor coefficients of ``ln f`` for a series with ``f(0) = 1``.

    Uses ``c_n = a_n - (1/n) * sum_{j<n} j c_j a_{n-j}``, with ``c_0 = 0``.
    """
    a = [ctx.convert(v) for v in coeffs]
    if a[0] != 1:
        raise ValueError("series_log needs a unit constant term")
    c = [ctx.zero] * len(a)
    for n in range(1, len(a)):
        acc = ctx.fsum(j * c[j] * a[n - j] for j in range(1, n))
        c[n] = a[n] - acc / n
    return c


def series_exp(log_coeffs: Sequence, ctx) -> list:
    """Taylor coefficients of ``exp(g)`` for a series ``g`` with ``g(0) = 0``.

    From ``f' = g' f``: ``n a_n = sum_{j=1..n} j g_j a_{n-j}``.
    """
    g = [ctx.convert(v) for v in log_coeffs]
    a = [ctx.zero] * len(g)
    a[0] = ctx.exp(g[0])
    for n in range(1, len(g)):
        a[n] = ctx.fsum(j * g[j] * a[n - j] for j in range(1, n + 1)) / n
    return a


def log_moments(s: Series) -> LogMoments:
    if not s.is_normalized:
        raise ValueError("log_moments needs a normalized series (coeffs[0] == 1)")
    ctx = s.precision.context()
    c = series_log(s.coeffs, ctx)
    B = tuple((1 if n % 2 else -1) * n * c[n] for n in range(1, len(c)))
    return LogMoments(B, s.precision)


def series_from_moments(B: LogMoments) -> Series:
    """Inverse of :func:`log_moments`: the normalized series with these moments."""
    ctx = B.precision.context()
    g = [ctx.zero] + [(1 if n % 2 else -1) * B.B[n - 1] / n for n in range(1, len(B) + 1)]
    return Series(tuple(series_exp(g, ctx)), None, 0, B.precision)


def truncated_mul(s1, s2, order: int, precision=None) -> Series:
    """Cauchy product of two series truncated at ``order``."""
    if isinstance(s1, Series) and precision is None:
        precision = s1.precision
    precision = as_precision(precision)
    ctx = precision.context()
    a = s1.coeffs if isinstance(s1, Series) else s1
    b = s2.coeffs if isinstance(s2, Series) else s2
    if order > min(len(a), len(b)) - 1:
        raise ValueError(
            f"order {order} exceeds available orders {len(a) - 1} and {len(b) - 1}"
        )
    a = [parse_real(v, ctx) for v in a[: order + 1]]
    b = [parse_real(v, ctx) for v in b[: order + 1]]
    out = tuple(ctx.fsum(a[i] * b[n - i] for i in range(n + 1)) for n in range(order + 1))
    return Series(out, None, 0, precision)
