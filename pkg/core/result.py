"""
Result types for certificates and command runs.
"""

from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Optional


class ResultStatus(str, Enum):
    """Status of a command run."""
    SUCCESS = "success"
    FAILURE = "failure"


@dataclass
class Certificate:
    """
    Outcome of a single check (e.g., closed surface, face coverage).

    Attributes:
        name: Check name, stable across runs
        passed: Whether the check holds
        details: Optional data behind the verdict
        subject: What was checked (e.g., "T(1,2,3,4)")
    """
    name: str
    passed: bool
    details: Optional[dict] = None
    subject: str = ""

    def to_dict(self) -> dict:
        """Convert to dict for logging/serialization."""
        result = {"name": self.name, "passed": self.passed}
        if self.subject:
            result["subject"] = self.subject
        if self.details is not None:
            result["details"] = self.details
        return result

    @classmethod
    def ok(cls, name: str, details: Optional[dict] = None, subject: str = "") -> "Certificate":
        """Create a passing certificate."""
        return cls(name=name, passed=True, details=details, subject=subject)

    @classmethod
    def fail(cls, name: str, details: Optional[dict] = None, subject: str = "") -> "Certificate":
        """Create a failing certificate."""
        return cls(name=name, passed=False, details=details, subject=subject)

    @classmethod
    def check(cls, name: str, passed: bool, details: Optional[dict] = None, subject: str = "") -> "Certificate":
        return cls(name=name, passed=bool(passed), details=details, subject=subject)


@dataclass
class RunReport:
    """
    Result of a command run.

    Attributes:
        status: Overall status, set by complete()
        command: Name of the command
        parameters: Command parameters
        started_at: When the run started
        completed_at: When the run completed
        certificates: Checks performed, in order
        genus: Genus values by oracle (formula, euler, traced, ...)
        artifacts: Serialized outputs (surface, family, table, mesh summary)
        errors: Error messages
        request_id: Unique identifier for this run
        triggered_by: Source of the trigger (cli, test)
    """
    status: ResultStatus
    command: str = ""
    parameters: dict[str, Any] = field(default_factory=dict)
    started_at: datetime = field(default_factory=datetime.utcnow)
    completed_at: Optional[datetime] = None
    certificates: list[Certificate] = field(default_factory=list)
    genus: dict[str, Any] = field(default_factory=dict)
    artifacts: dict[str, Any] = field(default_factory=dict)
    errors: list[str] = field(default_factory=list)
    request_id: str = ""
    triggered_by: str = ""

    def add_certificate(self, certificate: Certificate) -> Certificate:
        """Record a certificate; a failing one also records an error."""
        self.certificates.append(certificate)
        if not certificate.passed:
            subject = f" ({certificate.subject})" if certificate.subject else ""
            self.errors.append(f"Certificate failed: {certificate.name}{subject}")
        return certificate

    @property
    def certificates_passed(self) -> int:
        return sum(1 for c in self.certificates if c.passed)

    @property
    def certificates_failed(self) -> int:
        return sum(1 for c in self.certificates if not c.passed)

    def complete(self) -> None:
        """Mark the run as complete and determine final status."""
        self.completed_at = datetime.utcnow()
        if self.errors or self.certificates_failed:
            self.status = ResultStatus.FAILURE
        else:
            self.status = ResultStatus.SUCCESS

    @property
    def duration_seconds(self) -> Optional[float]:
        """Get run duration in seconds."""
        if self.completed_at:
            return (self.completed_at - self.started_at).total_seconds()
        return None

    @property
    def exit_code(self) -> int:
        """0 on success, 1 when a certificate failed."""
        return 0 if self.status == ResultStatus.SUCCESS else 1

    def to_dict(self, include_timing: bool = False) -> dict:
        """
        Convert to dict for serialization.

        Without timing the output depends only on the command and its
        parameters, so repeated runs serialize identically.
        """
        result = {
            "command": self.command,
            "status": self.status.value,
            "parameters": self.parameters,
            "certificates": [c.to_dict() for c in self.certificates],
            "certificates_passed": self.certificates_passed,
            "certificates_failed": self.certificates_failed,
            "genus": self.genus,
            "artifacts": self.artifacts,
            "errors": self.errors,
        }
        if include_timing:
            result["wall_time_seconds"] = self.duration_seconds
        return result

    @classmethod
    def create(
        cls,
        command: str,
        parameters: Optional[dict] = None,
        request_id: str = "",
        triggered_by: str = "",
    ) -> "RunReport":
        """
        Create a new run report.

        Args:
            command: Name of the command
            parameters: Command parameters
            request_id: Unique request identifier
            triggered_by: Source of the trigger
        """
        return cls(
            status=ResultStatus.SUCCESS,  # Will be updated on complete()
            command=command,
            parameters=dict(parameters or {}),
            request_id=request_id,
            triggered_by=triggered_by,
        )

    @classmethod
    def from_context(cls, ctx: "RunContext", parameters: Optional[dict] = None) -> "RunReport":
        """Create a new run report from a RunContext."""
        return cls.create(
            command=ctx.command,
            parameters=parameters if parameters is not None else ctx.parameters,
            request_id=ctx.request_id,
            triggered_by=ctx.triggered_by,
        )
