"""
Run Context threaded through a command and its logging.
"""

import uuid
from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass
class RunContext:
    """
    Who runs which command with what parameters.

    Attributes:
        request_id: Unique identifier, used as the log prefix
        command: Subcommand name
        triggered_by: "cli" or "test"
        debug: Verbose logging requested
        parameters: Command parameters as parsed
    """
    request_id: str = field(default_factory=lambda: uuid.uuid4().hex)
    command: str = ""
    triggered_by: str = "unknown"
    debug: bool = False
    parameters: Optional[dict[str, Any]] = None

    @property
    def short_id(self) -> str:
        return self.request_id[:8]

    @classmethod
    def for_cli(cls, command: str, **kwargs) -> "RunContext":
        return cls(command=command, triggered_by="cli", **kwargs)
