"""
Export Mesh Job

Writes a certified surface as an OFF mesh for external viewers.
"""

import logging
from typing import Optional

from core.jobs.base import BaseJob
from core.jobs.registry import register_job
from core.mesh import project_surface
from core.result import RunReport
from core.surface import ColorCycle, build_surface

logger = logging.getLogger(__name__)


@register_job(
    name="export",
    description="Certify T(Z) and write it as an OFF mesh",
    tags=["surface", "mesh"],
)
class ExportMeshJob(BaseJob):
    """
    Export one surface as OFF.

    The surface is certified first; an uncertified surface is refused and
    nothing is written. Quads follow the computed orientation.
    """

    def run(
        self,
        n: int,
        cycle: Optional[str] = None,
        seed: Optional[int] = None,
        out: Optional[str] = None,
        projection: str = "generic",
        **params
    ) -> RunReport:
        z = ColorCycle.parse(cycle) if cycle else ColorCycle.identity(n)
        seed = self.settings.seed if seed is None else seed
        report = RunReport.from_context(self.ctx, parameters={
            "n": n,
            "cycle": z.to_list(),
            "seed": seed,
            "projection": projection,
        })

        surface = build_surface(n, z)
        certified = self.certification.certify_surface(report, surface)
        if certified.orientation is None or report.certificates_failed:
            report.errors.append(f"Refusing to export uncertified surface T({z})")
            self.log.error("Export refused", data={"failed": report.certificates_failed})
            report.complete()
            return report

        mesh = project_surface(surface, certified.orientation, seed=seed, projection=projection)
        self.certification.record(
            report,
            "mesh_counts",
            len(mesh.vertices) == len(surface.vertices) and len(mesh.faces) == len(surface),
            {"vertices": len(mesh.vertices), "faces": len(mesh.faces)},
            f"T({z})",
        )

        report.artifacts["mesh"] = {
            "vertices": len(mesh.vertices),
            "faces": len(mesh.faces),
            "projection": projection,
            "seed": seed,
        }
        if out:
            report.artifacts["mesh_file"] = self.write_text(out, mesh.to_off())
        else:
            report.artifacts["off"] = mesh.to_off()

        report.complete()
        return report
