"""
Run Logger

Structured logging for command runs. Messages carry the run prefix and go
to stderr through the root handler configured in main.py.
"""

import json
import logging
from typing import Optional

from core.context import RunContext


class CubeLogger:
    """
    Structured logger bound to a run context.

    Usage:
        log = CubeLogger(ctx)
        log.info("Building surface", data={"n": 5})
        log.certificate("closed_surface", passed=True)
        log.error("Export failed", error=str(e))
    """

    def __init__(self, ctx: RunContext, name: str = "cube-genus"):
        self.ctx = ctx
        self._logger = logging.getLogger(name)

        # basicConfig in main.py installs the handler; only add one when run standalone
        root_has_handlers = logging.getLogger().handlers
        if not self._logger.handlers and not root_has_handlers:
            handler = logging.StreamHandler()
            handler.setFormatter(logging.Formatter(
                '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
            ))
            self._logger.addHandler(handler)
            self._logger.setLevel(logging.DEBUG if ctx.debug else logging.INFO)

    def _log(self, level: int, message: str, data: Optional[dict] = None) -> None:
        prefix = f"[{self.ctx.short_id}]"
        if data:
            message = f"{message} {json.dumps(data, sort_keys=True, default=str)}"
        self._logger.log(level, f"{prefix} {message}")

    def debug(self, message: str, data: Optional[dict] = None) -> None:
        self._log(logging.DEBUG, message, data)

    def info(self, message: str, data: Optional[dict] = None) -> None:
        self._log(logging.INFO, message, data)

    def warning(self, message: str, data: Optional[dict] = None) -> None:
        self._log(logging.WARNING, message, data)

    def error(self, message: str, error: Optional[str] = None, data: Optional[dict] = None) -> None:
        if error:
            message = f"{message}: {error}"
        self._log(logging.ERROR, message, data)

    def certificate(self, name: str, passed: bool, details: Optional[dict] = None) -> None:
        """PASS at info level, FAIL at warning level."""
        if passed:
            self._log(logging.INFO, f"PASS: {name}", details)
        else:
            self._log(logging.WARNING, f"FAIL: {name}", details)

    def command_started(self, data: Optional[dict] = None) -> None:
        self._log(logging.INFO, f"Command started: {self.ctx.command}", data)

    def command_completed(self, data: Optional[dict] = None) -> None:
        self._log(logging.INFO, f"Command completed: {self.ctx.command}", data)

    def command_failed(self, error: str, data: Optional[dict] = None) -> None:
        self._log(logging.ERROR, f"Command failed: {self.ctx.command} - {error}", data)


def get_logger(ctx: RunContext) -> CubeLogger:
    """Create a CubeLogger for the given context."""
    return CubeLogger(ctx)
