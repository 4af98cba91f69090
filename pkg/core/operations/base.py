"""
Base Operation Class

Foundation for certification steps: each check is recorded on the run report
and logged.
"""

import logging
from typing import Callable, Optional

from core.context import RunContext
from core.errors import CubeGenusError
from core.logging.cube_logger import CubeLogger
from core.result import Certificate, RunReport

logger = logging.getLogger(__name__)


class BaseOperation:
    """
    Base class for operations that produce certificates.

    Usage:
        class MyOperation(BaseOperation):
            def check_something(self, report: RunReport, s: Surface) -> Certificate:
                return self.record(report, "something", passed=..., subject=str(s.cycle))
    """

    def __init__(self, ctx: RunContext, log: Optional[CubeLogger] = None):
        """
        Args:
            ctx: Run context
            log: Optional logger (created from ctx if not provided)
        """
        self.ctx = ctx
        self.log = log or CubeLogger(ctx)

    def record(
        self,
        report: RunReport,
        name: str,
        passed: bool,
        details: Optional[dict] = None,
        subject: str = "",
    ) -> Certificate:
        """Add a certificate to the report and log its verdict."""
        certificate = report.add_certificate(Certificate.check(name, passed, details, subject))
        label = f"{name} [{subject}]" if subject else name
        self.log.certificate(label, certificate.passed, details)
        return certificate

    def _safe_check(
        self,
        report: RunReport,
        name: str,
        check: Callable[[], tuple[bool, Optional[dict]]],
        subject: str = "",
    ) -> Certificate:
        """
        Run a check that may raise; a library error becomes a failing certificate.

        Args:
            check: Returns (passed, details)
        """
        try:
            passed, details = check()
        except CubeGenusError as e:
            self.log.error(f"Check {name} raised", error=str(e))
            return self.record(report, name, False, {"error": str(e)}, subject)
        return self.record(report, name, passed, details, subject)
