"""
Build Surface Job

Builds T(Z) for a Hamiltonian cycle Z (identity by default) and runs the
full certificate set on it.
"""

import logging
from typing import Optional

from core.jobs.base import BaseJob
from core.jobs.registry import register_job
from core.result import RunReport
from core.surface import ColorCycle, build_surface

logger = logging.getLogger(__name__)


@register_job(
    name="build",
    description="Build T(Z) from a Hamiltonian color cycle and certify it",
    tags=["surface", "certify"],
)
class BuildSurfaceJob(BaseJob):
    """
    Build and certify one genus surface.

    Workflow:
    1. Parse the cycle (defaults to 1,2,...,n)
    2. Build T(Z)
    3. Certify: closed, orientable, genus by both oracles, bound tightness
    4. Serialize the surface into the report or to --out
    """

    def run(
        self,
        n: int,
        cycle: Optional[str] = None,
        out: Optional[str] = None,
        **params
    ) -> RunReport:
        z = ColorCycle.parse(cycle) if cycle else ColorCycle.identity(n)
        report = RunReport.from_context(self.ctx, parameters={"n": n, "cycle": z.to_list()})

        self.log.info(f"Building T({z}) in H_{n}")
        surface = build_surface(n, z)
        self.log.info(f"Built {len(surface)} faces", data={"v": len(surface.vertices), "e": len(surface.edges)})

        self.certification.certify_surface(report, surface)

        report.artifacts["face_count"] = len(surface)
        if out:
            report.artifacts["surface_file"] = self.write_json(out, surface.to_dict())
        else:
            report.artifacts["surface"] = surface.to_dict()

        report.complete()
        return report
