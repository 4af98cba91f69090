"""
Exception types shared by the library and the CLI.
"""


class CubeGenusError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(CubeGenusError, ValueError):
    """
    An input lies outside the domain of an operation.

    Examples: a dimension above the cap, a vertex passed where a square is
    required, an even n for a Hamiltonian decomposition.
    """


class InconsistencyError(CubeGenusError, RuntimeError):
    """
    A computed value contradicts an invariant that must hold.

    Raised when a construction fails its own certificate or when Euler data
    is not even. Seeing this means a bug, not bad input.
    """
