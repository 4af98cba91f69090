"""
Base Job Class

Foundation for all CLI commands.
"""

import json
import logging
from abc import ABC, abstractmethod
from typing import Any, Optional

from core.config import Settings
from core.context import RunContext
from core.errors import DomainError
from core.logging.cube_logger import CubeLogger, get_logger
from core.operations.certification import CertificationOperations
from core.result import RunReport

logger = logging.getLogger(__name__)


def dumps_json(data: Any) -> str:
    """Stable JSON text for reports and artifacts."""
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


class BaseJob(ABC):
    """
    Base class for all jobs.

    Provides:
    - Standardized execution flow (setup -> run -> teardown)
    - Structured logging of start, completion and failure
    - Certification operations bound to the run

    Usage:
        @register_job(name="my_command", description="Does something useful")
        class MyJob(BaseJob):
            def run(self, **params) -> RunReport:
                report = RunReport.from_context(self.ctx, parameters=params)
                # ... do work ...
                report.complete()
                return report
    """

    # Set by @register_job decorator
    _job_name: str = ""
    _job_description: str = ""
    _job_tags: list[str] = []

    def __init__(
        self,
        ctx: RunContext,
        settings: Optional[Settings] = None,
        log: Optional[CubeLogger] = None,
    ):
        """
        Args:
            ctx: Run context (required)
            settings: Run settings (defaults if not provided)
            log: Logger (created from ctx if not provided)
        """
        self.ctx = ctx
        self.settings = settings or Settings()
        self._log = log
        self._certification: Optional[CertificationOperations] = None

    @property
    def name(self) -> str:
        """Get job name."""
        return self._job_name or self.__class__.__name__

    @property
    def description(self) -> str:
        """Get job description."""
        return self._job_description

    @property
    def log(self) -> CubeLogger:
        """Get logger (lazy-loaded)."""
        if self._log is None:
            self._log = get_logger(self.ctx)
        return self._log

    @property
    def certification(self) -> CertificationOperations:
        if self._certification is None:
            self._certification = CertificationOperations(self.ctx, self.log)
        return self._certification

    def execute(self, **params) -> RunReport:
        """
        Execute the job with full lifecycle management.

        Errors are logged and re-raised; the caller decides the exit status.
        """
        self.log.command_started(data={"params": params})

        try:
            self.setup(**params)

            report = self.run(**params)

            # Ensure report is complete
            if report.completed_at is None:
                report.complete()

            self.teardown(report)

            self.log.command_completed(data={
                "status": report.status.value,
                "certificates_passed": report.certificates_passed,
                "certificates_failed": report.certificates_failed,
                "duration_seconds": report.duration_seconds,
            })
            return report

        except Exception as e:
            logger.debug(f"Job {self.name} failed", exc_info=True)
            self.log.command_failed(str(e))
            raise

    def setup(self, **params) -> None:
        """
        Setup phase before running the job.

        Default implementation validates the settings.
        """
        self.settings.validate_or_raise()

    @abstractmethod
    def run(self, **params) -> RunReport:
        """
        Main job logic. Must be implemented by subclasses.

        Returns:
            RunReport with certificates and artifacts
        """
        raise NotImplementedError

    def teardown(self, report: RunReport) -> None:
        """Teardown phase after running the job. Default does nothing."""
        pass

    def read_json(self, path: str) -> Any:
        """
        Raises:
            DomainError: If the file is missing or not valid JSON
        """
        try:
            with open(path) as fh:
                return json.load(fh)
        except FileNotFoundError:
            raise DomainError(f"No such file: {path}") from None
        except json.JSONDecodeError as e:
            raise DomainError(f"{path} is not valid JSON: {e}") from None

    def write_text(self, path: str, text: str) -> str:
        """Write an artifact file; OSError propagates to the caller."""
        with open(path, "w") as fh:
            fh.write(text)
        self.log.info(f"Wrote {path}", data={"bytes": len(text)})
        return path

    def write_json(self, path: str, data: Any) -> str:
        return self.write_text(path, dumps_json(data))

    @classmethod
    def create_and_execute(cls, ctx: RunContext, settings: Optional[Settings] = None, **params) -> RunReport:
        """Create a job instance and execute it."""
        job = cls(ctx, settings=settings)
        return job.execute(**params)
