"""Working precision and decimal-string conversion of extended-precision reals.

Every public operation builds its own :class:`mpmath.MPContext` from a
:class:`Precision`, so no module-level mpmath state is read or mutated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

DEFAULT_BITS = 256


@dataclass(frozen=True)
class Precision:
    bits: int = DEFAULT_BITS

    def __post_init__(self):
        if not isinstance(self.bits, int) or self.bits < 64:
            raise ValueError(f"precision must be an integer >= 64 bits, got {self.bits!r}")

    def context(self) -> mpmath.MPContext:
        ctx = mpmath.MPContext()
        ctx.prec = self.bits
        return ctx

    @property
    def digits(self) -> int:
        """Decimal digits that round-trip a value at this precision."""
        return int(math.ceil(self.bits * math.log10(2))) + 2

    @property
    def eps(self) -> float:
        return 2.0 ** (1 - self.bits)


DEFAULT_PRECISION = Precision()


def as_precision(value) -> Precision:
    if value is None:
        return DEFAULT_PRECISION
    if isinstance(value, Precision):
        return value
    return Precision(int(value))


def parse_real(value, ctx):
    """Convert ``value`` to an mpf of ``ctx`` without passing through a double.

    Strings may be decimal (``"0.375"``, ``"1e-3"``) or rational (``"-21/8"``).
    """
    if isinstance(value, str):
        text = value.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return ctx.mpf(num.strip()) / ctx.mpf(den.strip())
        return ctx.mpf(text)
    if isinstance(value, Fraction):
        return ctx.mpf(value.numerator) / value.denominator
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    out = ctx.convert(value)
    if isinstance(out, ctx.mpc):
        raise TypeError(f"expected a real value, got {value!r}")
    return +out


def parse_complex(value, ctx):
    """Parse ``"x"`` or ``[re, im]`` into an mpf (when im == 0) or mpc."""
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValueError(f"complex value needs [re, im], got {value!r}")
        re, im = parse_real(value[0], ctx), parse_real(value[1], ctx)
        return re if im == 0 else ctx.mpc(re, im)
    return parse_real(value, ctx)


def format_real(x, precision: Precision) -> str:
    ctx = precision.context()
    x = ctx.convert(x)
    if ctx.isinf(x) or ctx.isnan(x):
        raise ValueError(f"cannot serialize non-finite value {x}")
    if x == 0:
        return "0"
    if ctx.isint(x) and abs(x) < 10**precision.digits:
        return str(int(x))
    return ctx.nstr(x, precision.digits, min_fixed=-6, max_fixed=precision.digits)


def format_complex(z, precision: Precision) -> list[str]:
    ctx = precision.context()
    z = ctx.convert(z)
    if isinstance(z, ctx.mpc):
        return [format_real(z.real, precision), format_real(z.imag, precision)]
    return [format_real(z, precision), "0"]
