"""
Jobs Module

One job per CLI command, registered by name.
"""

from core.jobs.registry import register_job, get_job, list_jobs, COMMANDS
from core.jobs.base import BaseJob

# Import jobs to register them
from core.jobs import build_surface  # noqa: F401
from core.jobs import parallel_family  # noqa: F401
from core.jobs import verify_surface  # noqa: F401
from core.jobs import genus_table  # noqa: F401
from core.jobs import export_mesh  # noqa: F401
from core.jobs import mobius_search  # noqa: F401

__all__ = [
    "register_job",
    "get_job",
    "list_jobs",
    "COMMANDS",
    "BaseJob",
]
