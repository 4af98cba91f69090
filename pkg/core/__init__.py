"""
Cube Genus Core Module

Genus surfaces of the hypercube built from the squares of the n-cube, with
certification of every topological claim.
"""

from core.config import Settings
from core.context import RunContext
from core.errors import CubeGenusError, DomainError, InconsistencyError
from core.result import Certificate, ResultStatus, RunReport

__all__ = [
    "RunContext",
    "Settings",
    "CubeGenusError",
    "DomainError",
    "InconsistencyError",
    "Certificate",
    "ResultStatus",
    "RunReport",
]
