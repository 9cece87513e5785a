"""Order-of-magnitude consistency engine for the fluctuation cosmology.

Submodules:

* :mod:`~fluctuaverse.quantity` - CGS dimensional algebra and dex distance
* :mod:`~fluctuaverse.constants` - constant registry with override files
* :mod:`~fluctuaverse.relations` - closed-form relations and the check catalog
* :mod:`~fluctuaverse.growth` - sqrt(N) growth law: closed form, RK4, Monte Carlo
* :mod:`~fluctuaverse.ensemble` - random-phase averages and count sampling
* :mod:`~fluctuaverse.cli` - ``fluctuaverse`` command
"""

from .constants import ConstantRecord, Registry, Source, default_registry
from .errors import (
    ConfigError,
    DimensionError,
    EmptyWindowError,
    FluctuaverseError,
    IntegrationError,
    QuantityError,
    RegimeError,
    StabilityError,
    UnknownConstant,
)
from .quantity import Dimension, Quantity, dex_gap, parse_dimension, q_add, q_mul, q_pow
from .relations import RelationReport, run_all

__version__ = "0.1.0"
