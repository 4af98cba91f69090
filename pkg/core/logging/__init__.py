"""
Run Logging Module

Structured logging with a per-run prefix.
"""

from core.logging.cube_logger import CubeLogger, get_logger

__all__ = [
    "CubeLogger",
    "get_logger",
]
