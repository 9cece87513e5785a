"""Registry of fundamental constants and observed cosmological magnitudes.

Values are CGS. Each record keeps where its number came from: a standard
reference table, the order-of-magnitude figure quoted for the fluctuation
cosmology, or a user override file.

Override files are plain text, one entry per line::

    # comment
    H_obs = 2.27e-18 s^-1 # 70 km/s/Mpc
    e = 4.803e-10 g^1/2 cm^3/2 s^-1

The dimension string may be empty for pure numbers.
"""

from __future__ import annotations

import enum
import math
import os
import re
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Optional, Union

from .errors import ConfigError, UnknownConstant
from .quantity import (
    ACTION,
    CHARGE,
    DIMENSIONLESS,
    INVERSE_TIME,
    LENGTH,
    MASS,
    TIME,
    VELOCITY,
    Dimension,
    Quantity,
    parse_dimension,
)

__all__ = [
    "Source",
    "ConstantRecord",
    "Registry",
    "default_registry",
    "ENV_CONSTANTS",
]

ENV_CONSTANTS = "FLUCTUAVERSE_CONSTANTS"


class Source(str, enum.Enum):
    STANDARD_TABLE = "standard-table"
    PAPER = "paper"
    CONFIG_OVERRIDE = "config-override"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ConstantRecord:
    symbol: str
    value: Quantity
    source: Source
    note: str = ""
    uncertainty: Optional[float] = None


_GRAVITY = Dimension(-1, 3, -2)


def _defaults() -> list[ConstantRecord]:
    std, quoted = Source.STANDARD_TABLE, Source.PAPER
    hbar, m_e, c = 1.055e-27, 9.109e-28, 2.998e10
    return [
        ConstantRecord("G", Quantity(6.674e-8, _GRAVITY), std, "Newtonian gravitational constant", 2.2e-5),
        ConstantRecord("c", Quantity(c, VELOCITY), std, "speed of light"),
        ConstantRecord("hbar", Quantity(hbar, ACTION), std, "reduced Planck constant"),
        ConstantRecord("e", Quantity(4.803e-10, CHARGE), std, "elementary charge (esu)"),
        ConstantRecord("m_e", Quantity(m_e, MASS), std, "electron mass"),
        ConstantRecord("m_p", Quantity(1.673e-24, MASS), std, "proton mass"),
        ConstantRecord("m_pi", Quantity(2.488e-25, MASS), std, "charged pion mass, 139.57 MeV/c^2"),
        ConstantRecord("L_star", Quantity(1.616e-33, LENGTH), std, "Planck length, quoted as of order 1e-33 cm"),
        ConstantRecord("N_obs", Quantity(1e80, DIMENSIONLESS), quoted, "number of elementary particles, N ~ 1e80"),
        ConstantRecord("M_obs", Quantity(1e56, MASS), quoted, "mass of the universe, 1e56 g"),
        ConstantRecord("T_obs", Quantity(1e17, TIME), quoted, "age of the universe, ~1e17 s"),
        ConstantRecord("R_obs", Quantity(1e28, LENGTH), std, "radius of the universe; no independent figure quoted, set from G M_obs / c^2 rounded up"),
        ConstantRecord("H_obs", Quantity(2.27e-18, INVERSE_TIME), std, "Hubble constant, 70 km/s/Mpc"),
        ConstantRecord("a0", Quantity(hbar / (2 * m_e * c * c), TIME), quoted, "time component of the complex shift, hbar/(2 m_e c^2)"),
        ConstantRecord("tau_fluct", Quantity(1e-11, TIME), quoted, "interstellar fluctuation time of the Boltzmann H function"),
        ConstantRecord("l_cmb", Quantity(0.3, LENGTH), quoted, "background radiation wavelength, ~0.3 cm"),
    ]


_SYMBOL = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def _parse_line(line: str, lineno: int) -> Optional[tuple[str, Quantity, str]]:
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return None
    body, _, note = stripped.partition("#")
    symbol, eq, rest = body.partition("=")
    symbol = symbol.strip()
    if not eq or not _SYMBOL.match(symbol):
        raise ConfigError(f"line {lineno}: expected 'symbol = value [dim]', got {line.rstrip()!r}")
    tokens = rest.split()
    if not tokens:
        raise ConfigError(f"line {lineno}: missing value for {symbol!r}")
    try:
        value = float(tokens[0])
    except ValueError:
        raise ConfigError(f"line {lineno}: cannot parse number {tokens[0]!r}") from None
    if not math.isfinite(value) or value <= 0:
        raise ConfigError(f"line {lineno}: value for {symbol!r} must be finite and positive")
    try:
        dim = parse_dimension(" ".join(tokens[1:]))
    except ValueError as exc:
        raise ConfigError(f"line {lineno}: {exc}") from None
    return symbol, Quantity(value, dim), note.strip()


def format_record(rec: ConstantRecord) -> str:
    """One override-file line that parses back to the same value and dim."""
    dim = str(rec.value.dim)
    head = f"{rec.symbol} = {rec.value.value!r}" + (f" {dim}" if dim else "")
    note = " ".join(rec.note.split())
    return f"{head} # {note}" if note else head


class Registry:
    """Symbol -> ConstantRecord map. Populate first, then treat as read-only."""

    def __init__(self, records: Iterable[ConstantRecord] = ()):
        self._records: dict[str, ConstantRecord] = {}
        for rec in records:
            if rec.symbol in self._records:
                raise ValueError(f"duplicate symbol {rec.symbol!r}")
            self._records[rec.symbol] = rec

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._records

    def __len__(self) -> int:
        return len(self._records)

    def get(self, symbol: str) -> ConstantRecord:
        try:
            return self._records[symbol]
        except KeyError:
            raise UnknownConstant(
                f"unknown constant {symbol!r}; available: {', '.join(sorted(self._records))}"
            ) from None

    def value(self, symbol: str) -> Quantity:
        return self.get(symbol).value

    def list(self) -> list[ConstantRecord]:
        return [self._records[k] for k in sorted(self._records)]

    def set(self, symbol: str, value: Quantity, note: str = "") -> None:
        self._records[symbol] = ConstantRecord(symbol, value, Source.CONFIG_OVERRIDE, note)

    def load_overrides(self, path: Union[str, os.PathLike]) -> int:
        """Apply an override file; returns the number of entries applied.

        Parsing is all-or-nothing: a bad line leaves the registry untouched.
        """
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read constants file {str(path)!r}: {exc.strerror}") from None
        except UnicodeDecodeError as exc:
            raise ConfigError(f"constants file {str(path)!r} is not UTF-8: {exc}") from None
        parsed = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            entry = _parse_line(line, lineno)
            if entry is not None:
                parsed.append(entry)
        for symbol, value, note in parsed:
            self.set(symbol, value, note)
        return len(parsed)

    def dumps(self) -> str:
        return "".join(format_record(rec) + "\n" for rec in self.list())

    def dump(self, path: Union[str, os.PathLike]) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    def copy(self) -> Registry:
        return Registry(replace(r) for r in self._records.values())


def default_registry(overrides: Union[str, os.PathLike, None] = None) -> Registry:
    """Shipped defaults, plus an optional override file."""
    reg = Registry(_defaults())
    if overrides is not None:
        reg.load_overrides(overrides)
    return reg
