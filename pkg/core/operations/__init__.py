"""
Operations Module

Reusable certification steps as building blocks for jobs.
"""

from core.operations.base import BaseOperation
from core.operations.certification import (
    CertificationOperations,
    SurfaceCertification,
    surface_label,
)

__all__ = [
    "BaseOperation",
    "CertificationOperations",
    "SurfaceCertification",
    "surface_label",
]
