"""
Parallel Family Job

Decomposes the 2-skeleton of H_n into face-disjoint surfaces, one per cycle
of a decomposition of K_n.
"""

import logging
from typing import Optional

from core.decomposition import (
    CycleDecomposition,
    general_parallel_family,
    hamiltonian_decomposition,
    parallel_family,
)
from core.errors import DomainError
from core.jobs.base import BaseJob
from core.jobs.registry import register_job
from core.result import RunReport

logger = logging.getLogger(__name__)


@register_job(
    name="family",
    description="Build and certify a parallel family of surfaces covering the 2-skeleton",
    tags=["family", "certify"],
)
class ParallelFamilyJob(BaseJob):
    """
    Build a parallel family.

    Without --decomposition the round-table Hamiltonian decomposition is
    used (odd n only). A supplied decomposition (JSON list of color
    sequences) with any non-Hamiltonian cycle is handled as a general
    family with per-component reports.
    """

    def run(
        self,
        n: int,
        decomposition: Optional[str] = None,
        out: Optional[str] = None,
        **params
    ) -> RunReport:
        if decomposition:
            data = self.read_json(decomposition)
            if not isinstance(data, list):
                raise DomainError(f"{decomposition} must hold a JSON list of color sequences")
            d = CycleDecomposition.from_list(n, data)
            self.log.info(f"Loaded {len(d)} cycles from {decomposition}")
        else:
            d = hamiltonian_decomposition(n)
            self.log.info(f"Round-table decomposition of K_{n}: {len(d)} cycles")

        report = RunReport.from_context(self.ctx, parameters={"n": n, "decomposition": d.to_list()})

        if all(c.is_hamiltonian(n) for c in d):
            family = parallel_family(n, d)
        else:
            family = general_parallel_family(n, d)

        self.certification.certify_family(report, family)

        covered = sum(len(s) for s in family.surfaces)
        report.artifacts["coverage"] = {"faces_covered": covered, "member_count": len(family.surfaces)}
        if out:
            report.artifacts["family_file"] = self.write_json(out, family.to_dict())
        else:
            report.artifacts["family"] = family.to_dict()

        report.complete()
        return report
