"""Exception hierarchy shared by every cutleg module."""


class CutlegError(Exception):
    """Base class for all cutleg errors."""


class DomainError(CutlegError, ValueError):
    """A parameter lies outside the domain where a formula is defined."""


class ConvergenceError(CutlegError, RuntimeError):
    """A quadrature or summation did not reach its tolerance."""


class ConfigError(CutlegError):
    """Configuration file or override could not be applied."""
