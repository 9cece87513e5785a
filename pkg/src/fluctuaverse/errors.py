"""Exception hierarchy shared by all modules."""


class FluctuaverseError(Exception):
    """Base class for every error raised by this package."""


class QuantityError(FluctuaverseError, ValueError):
    """Invalid arithmetic on quantities (non-finite result, bad root)."""


class DimensionError(QuantityError):
    """Operands carry incompatible dimensions."""


class UnknownConstant(FluctuaverseError, KeyError):
    """Requested symbol is not in the registry."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown constant"


class ConfigError(FluctuaverseError, ValueError):
    """Malformed override file or run configuration."""


class RegimeError(FluctuaverseError, ValueError):
    """Inputs fall outside the physical regime an operation assumes."""


class IntegrationError(FluctuaverseError, ArithmeticError):
    """Numerical integration produced a non-finite state."""


class StabilityError(FluctuaverseError, ValueError):
    """Step size too large for the stochastic update to be meaningful."""


class EmptyWindowError(FluctuaverseError, ValueError):
    """Energy window contains no basis state."""
