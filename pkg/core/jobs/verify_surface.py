"""
Verify Surface Job

Re-certifies a serialized surface.
"""

import logging

from core.errors import DomainError
from core.jobs.base import BaseJob
from core.jobs.registry import register_job
from core.result import RunReport
from core.surface import Surface

logger = logging.getLogger(__name__)


@register_job(
    name="verify",
    description="Load a serialized surface and re-run every certificate",
    tags=["surface", "certify"],
)
class VerifySurfaceJob(BaseJob):

    def run(self, surface: str, **params) -> RunReport:
        data = self.read_json(surface)
        if not isinstance(data, dict):
            raise DomainError(f"{surface} must hold a JSON object with n, cycle and faces")
        loaded = Surface.from_dict(data)
        report = RunReport.from_context(self.ctx, parameters={
            "n": loaded.n,
            "cycle": loaded.cycle.to_list() if loaded.cycle else None,
            "face_count": len(loaded),
        })
        self.log.info(f"Loaded {loaded!r} from {surface}")

        certified = self.certification.certify_surface(report, loaded)
        report.artifacts["manifold"] = certified.manifold.to_dict()
        if certified.witness is not None:
            report.artifacts["mobius_witness"] = certified.witness.to_dict()

        report.complete()
        return report
