"""Dimensional algebra over Gaussian-CGS base dimensions.

Only mass (g), length (cm) and time (s) are base dimensions. Charge in esu
is the derived combination ``g^1/2 cm^3/2 s^-1``, so exponents are exact
rationals rather than integers.

    >>> e = Quantity(4.803e-10, CHARGE)
    >>> (e * e).dim == ENERGY * LENGTH
    True
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DimensionError, QuantityError

__all__ = [
    "Dimension",
    "Quantity",
    "q_mul",
    "q_div",
    "q_pow",
    "q_add",
    "dex_gap",
    "parse_dimension",
    "DIMENSIONLESS",
    "MASS",
    "LENGTH",
    "TIME",
    "AREA",
    "VELOCITY",
    "ENERGY",
    "ACTION",
    "CHARGE",
    "INVERSE_TIME",
]

Rational = Union[int, Fraction]

_UNIT_SYMBOLS = ("g", "cm", "s")


def _as_fraction(r) -> Fraction:
    if isinstance(r, Fraction):
        return r
    if isinstance(r, int) and not isinstance(r, bool):
        return Fraction(r)
    if isinstance(r, str):
        return Fraction(r)
    raise TypeError(f"exponent must be int, Fraction or str, not {type(r).__name__}")


@dataclass(frozen=True)
class Dimension:
    """Exponents of (g, cm, s). Always exact rationals."""

    mass_exp: Fraction = Fraction(0)
    length_exp: Fraction = Fraction(0)
    time_exp: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("mass_exp", "length_exp", "time_exp"):
            object.__setattr__(self, name, _as_fraction(getattr(self, name)))

    @property
    def exponents(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.mass_exp, self.length_exp, self.time_exp)

    @property
    def is_dimensionless(self) -> bool:
        return not any(self.exponents)

    def __mul__(self, other: Dimension) -> Dimension:
        return Dimension(*(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: Dimension) -> Dimension:
        return Dimension(*(a - b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, r: Rational) -> Dimension:
        r = _as_fraction(r)
        return Dimension(*(a * r for a in self.exponents))

    def __str__(self) -> str:
        parts = []
        for sym, exp in zip(_UNIT_SYMBOLS, self.exponents):
            if exp == 0:
                continue
            parts.append(sym if exp == 1 else f"{sym}^{exp}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Dimension({str(self) or 'dimensionless'})"


_TOKEN = re.compile(r"^(g|cm|s)(?:\^(-?\d+(?:/\d+)?))?$")


def parse_dimension(text: str) -> Dimension:
    """Parse ``"g^1/2 cm^3/2 s^-1"`` style strings. Empty means dimensionless.

    Each base unit may appear at most once.
    """
    exps = dict.fromkeys(_UNIT_SYMBOLS, Fraction(0))
    seen = set()
    for token in text.split():
        m = _TOKEN.match(token)
        if m is None:
            raise ValueError(f"invalid dimension token {token!r}")
        sym, exp = m.group(1), m.group(2)
        if sym in seen:
            raise ValueError(f"unit {sym!r} repeated in {text!r}")
        seen.add(sym)
        frac = Fraction(exp) if exp is not None else Fraction(1)
        if frac.denominator == 0:
            raise ValueError(f"zero denominator in {token!r}")
        exps[sym] = frac
    return Dimension(exps["g"], exps["cm"], exps["s"])


DIMENSIONLESS = Dimension()
MASS = Dimension(1, 0, 0)
LENGTH = Dimension(0, 1, 0)
TIME = Dimension(0, 0, 1)
AREA = LENGTH**2
VELOCITY = LENGTH / TIME
INVERSE_TIME = TIME**-1
ENERGY = MASS * VELOCITY**2
ACTION = ENERGY * TIME
CHARGE = Dimension(Fraction(1, 2), Fraction(3, 2), -1)


def _check_finite(value: float, what: str) -> float:
    if not math.isfinite(value):
        raise QuantityError(f"{what} produced non-finite value {value!r}")
    return value


@dataclass(frozen=True)
class Quantity:
    """A finite real value with a CGS dimension."""

    value: float
    dim: Dimension = DIMENSIONLESS

    def __post_init__(self):
        try:
            v = float(self.value)
        except OverflowError as exc:
            raise QuantityError(f"value overflows a float: {exc}") from None
        object.__setattr__(self, "value", _check_finite(v, "construction"))

    @classmethod
    def dimensionless(cls, value: float) -> Quantity:
        return cls(value, DIMENSIONLESS)

    def require(self, dim: Dimension, what: str = "quantity") -> Quantity:
        """Return self, or raise DimensionError if dims differ."""
        if self.dim != dim:
            raise DimensionError(
                f"{what} must have dimension [{dim}], got [{self.dim}]"
            )
        return self

    def __mul__(self, other):
        if not isinstance(other, Quantity):
            other = Quantity.dimensionless(other)
        return q_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Quantity):
            other = Quantity.dimensionless(other)
        return q_div(self, other)

    def __rtruediv__(self, other):
        return q_div(Quantity.dimensionless(other), self)

    def __pow__(self, r):
        return q_pow(self, r)

    def __add__(self, other: Quantity) -> Quantity:
        return q_add(self, other)

    def __sub__(self, other: Quantity) -> Quantity:
        return q_add(self, Quantity(-other.value, other.dim))

    def __neg__(self) -> Quantity:
        return Quantity(-self.value, self.dim)

    def __float__(self) -> float:
        if not self.dim.is_dimensionless:
            raise DimensionError(f"cannot convert [{self.dim}] quantity to float")
        return self.value

    def __str__(self) -> str:
        unit = str(self.dim)
        return f"{self.value:.4g} {unit}" if unit else f"{self.value:.4g}"


def q_mul(a: Quantity, b: Quantity) -> Quantity:
    return Quantity(_check_finite(a.value * b.value, "multiplication"), a.dim * b.dim)


def q_div(a: Quantity, b: Quantity) -> Quantity:
    if b.value == 0:
        raise QuantityError("division by zero quantity")
    return Quantity(_check_finite(a.value / b.value, "division"), a.dim / b.dim)


def q_pow(a: Quantity, r: Rational) -> Quantity:
    """Raise to an exact rational power.

    Negative bases are only allowed with integer exponents.
    """
    r = _as_fraction(r)
    if r == 0:
        return Quantity(1.0, DIMENSIONLESS)
    if a.value < 0 and r.denominator != 1:
        raise QuantityError(f"negative base {a.value!r} with fractional exponent {r}")
    if a.value == 0 and r < 0:
        raise QuantityError("zero raised to a negative power")
    try:
        if r.denominator == 1:
            value = a.value ** r.numerator
        elif r.numerator == 1 and r.denominator == 2:
            value = math.sqrt(a.value)
        else:
            value = a.value ** (r.numerator / r.denominator)
    except (OverflowError, ZeroDivisionError) as exc:
        raise QuantityError(f"power {r} failed: {exc}") from None
    return Quantity(_check_finite(float(value), "power"), a.dim**r)


def q_add(a: Quantity, b: Quantity) -> Quantity:
    if a.dim != b.dim:
        raise DimensionError(f"cannot add [{a.dim}] and [{b.dim}]")
    return Quantity(_check_finite(a.value + b.value, "addition"), a.dim)


def dex_gap(a: Quantity, b: Quantity) -> float:
    """Order-of-magnitude distance ``|log10(a/b)|``."""
    if a.dim != b.dim:
        raise DimensionError(f"dex_gap between [{a.dim}] and [{b.dim}]")
    if a.value <= 0 or b.value <= 0:
        raise QuantityError(
            f"dex_gap needs positive values, got {a.value!r} and {b.value!r}"
        )
    # log difference avoids overflow of the ratio for extreme magnitudes
    return abs(math.log10(a.value) - math.log10(b.value))
