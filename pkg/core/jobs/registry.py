"""
Command Registry

Jobs register under the subcommand name main.py exposes for them.
"""

import logging
import re
from dataclasses import dataclass, field
from typing import Optional, Type, TYPE_CHECKING

if TYPE_CHECKING:
    from core.jobs.base import BaseJob

logger = logging.getLogger(__name__)

COMMAND_NAME = re.compile(r"^[a-z][a-z0-9_]*$")


@dataclass(frozen=True)
class CommandEntry:
    """A registered subcommand."""
    name: str
    job_class: Type["BaseJob"]
    description: str = ""
    tags: tuple[str, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {"name": self.name, "description": self.description, "tags": list(self.tags)}


COMMANDS: dict[str, CommandEntry] = {}


def register_job(
    name: Optional[str] = None,
    description: str = "",
    tags: Optional[list[str]] = None,
):
    """
    Class decorator binding a job to a subcommand.

    Usage:
        @register_job(name="build", description="Build and certify T(Z)", tags=["surface"])
        class BuildSurfaceJob(BaseJob):
            ...

    The name defaults to the class name without its Job suffix, in
    snake_case. Registering a different class under a taken name is an error;
    re-registering the same class (module imported twice as __main__) is not.
    """
    def decorator(cls: Type["BaseJob"]) -> Type["BaseJob"]:
        command = name or _command_name(cls.__name__)
        if not COMMAND_NAME.match(command):
            raise ValueError(f"Invalid command name {command!r} for {cls.__name__}")

        existing = COMMANDS.get(command)
        if existing is not None and existing.job_class.__qualname__ != cls.__qualname__:
            raise ValueError(f"Command {command!r} is already bound to {existing.job_class.__name__}")

        cls._job_name = command
        cls._job_description = description
        cls._job_tags = list(tags or [])
        if existing is None:
            COMMANDS[command] = CommandEntry(command, cls, description, tuple(tags or ()))
            logger.debug(f"Registered command: {command}")
        return cls

    return decorator


def get_job(name: str) -> Optional[Type["BaseJob"]]:
    """Job class for a subcommand, or None."""
    entry = COMMANDS.get(name)
    return entry.job_class if entry else None


def list_jobs(tags: Optional[list[str]] = None) -> list[dict]:
    """Registered commands by name; with tags, only those carrying one of them."""
    entries = sorted(COMMANDS.values(), key=lambda entry: entry.name)
    if tags:
        entries = [entry for entry in entries if set(tags) & set(entry.tags)]
    return [entry.to_dict() for entry in entries]


def _command_name(class_name: str) -> str:
    words = re.findall(r"[A-Z]+(?![a-z])|[A-Z]?[a-z0-9]+", class_name)
    if words and words[-1] == "Job":
        words = words[:-1]
    return "_".join(word.lower() for word in words)
