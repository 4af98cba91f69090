"""
Möbius Search Job

Looks for an orientation-reversing face strip in the full 2-skeleton of H_n.
"""

import logging
from typing import Optional

from core.errors import DomainError
from core.jobs.base import BaseJob
from core.jobs.registry import register_job
from core.result import RunReport
from core.topology import find_mobius_strip

logger = logging.getLogger(__name__)


@register_job(
    name="mobius",
    description="Search the 2-skeleton of H_n for a Möbius strip",
    tags=["skeleton", "orientability"],
)
class MobiusSearchJob(BaseJob):
    """
    Run find_mobius_strip.

    A strip is expected exactly when n >= 4; the outcome is certified
    against that expectation.
    """

    def run(self, n: int, max_length: Optional[int] = None, **params) -> RunReport:
        if max_length is None:
            max_length = self.settings.mobius_max_length
        if max_length < 3:
            raise DomainError(f"max_length must be at least 3, got {max_length}")
        report = RunReport.from_context(self.ctx, parameters={"n": n, "max_length": max_length})

        witness = find_mobius_strip(n, max_length=max_length)
        found = witness is not None
        self.certification.record(
            report,
            "mobius_expected",
            found == (n >= 4),
            {"found": found, "expected": n >= 4},
            f"H_{n}",
        )
        if witness is not None:
            self.certification.record(report, "witness_verified", witness.verify(), subject=f"H_{n}")

        report.artifacts["witness"] = witness.to_dict() if witness else None
        report.complete()
        return report
