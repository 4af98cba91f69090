"""
Certification Operations

Runs the full set of topological checks on a surface or a family and records
each verdict on the run report.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from core.decomposition import ParallelFamily, verify_decomposition
from core.formulas import bipartite_lower_bound, qn_genus
from core.operations.base import BaseOperation
from core.result import RunReport
from core.surface import Surface
from core.topology import (
    ManifoldReport,
    MobiusWitness,
    OrientationAssignment,
    black_vertex_orientation,
    check_closed_surface,
    euler_genus,
    orient,
    orientations_agree,
    rotation_system,
    trace_faces,
    traced_genus,
    walks_match_faces,
)

logger = logging.getLogger(__name__)


@dataclass
class SurfaceCertification:
    """What certify_surface learned about one surface."""
    manifold: ManifoldReport
    orientation: Optional[OrientationAssignment] = None
    witness: Optional[MobiusWitness] = None
    euler_genus: Optional[int] = None
    traced_genus: Optional[int] = None


def surface_label(s: Surface) -> str:
    return f"T({s.cycle})" if s.cycle else f"surface[n={s.n}]"


class CertificationOperations(BaseOperation):
    """
    Certificates for surfaces and parallel families.

    Provides:
    - closed_surface, orientable, genus_matches_formula,
      dual_oracle_agreement, lower_bound_tight, black_vertex_agreement
    - decomposition and family flags
    """

    def certify_surface(self, report: RunReport, s: Surface) -> SurfaceCertification:
        """
        Certify a surface and record its genus values on the report.

        Checks that do not apply are skipped: the formula and lower-bound
        checks need a surface containing all of Q_n built from a Hamiltonian
        cycle; the black-vertex check needs a cycle.
        """
        label = surface_label(s)
        manifold = check_closed_surface(s)
        result = SurfaceCertification(manifold)
        self.record(
            report,
            "closed_surface",
            manifold.is_closed_surface and manifold.connected,
            manifold.to_dict(),
            label,
        )
        if not manifold.is_closed_surface or not manifold.connected:
            return result

        oriented = orient(s)
        if isinstance(oriented, MobiusWitness):
            result.witness = oriented
            self.record(report, "orientable", False, oriented.to_dict(), label)
            return result
        result.orientation = oriented
        self.record(report, "orientable", True, {"faces": len(s)}, label)

        result.euler_genus = euler_genus(manifold)
        genus = {"euler": result.euler_genus}

        def dual_oracle() -> tuple[bool, dict]:
            rs = rotation_system(s)
            walks = trace_faces(rs, oriented)
            result.traced_genus = traced_genus(rs, walks)
            genus["traced"] = result.traced_genus
            passed = result.traced_genus == result.euler_genus and walks_match_faces(walks, s)
            return passed, {"walks": len(walks), "traced_genus": result.traced_genus}

        self._safe_check(report, "dual_oracle_agreement", dual_oracle, label)

        hamiltonian = s.cycle is not None and s.cycle.is_hamiltonian(s.n)
        if hamiltonian and s.covers_qn():
            formula = qn_genus(s.n)
            bound = bipartite_lower_bound(manifold.v, manifold.e)
            genus["formula"] = formula
            genus["lower_bound"] = str(bound)
            self.record(
                report,
                "genus_matches_formula",
                result.euler_genus == formula,
                {"euler": result.euler_genus, "formula": formula},
                label,
            )
            self.record(
                report,
                "lower_bound_tight",
                bound == result.euler_genus,
                {"lower_bound": str(bound), "genus": result.euler_genus},
                label,
            )

        if s.cycle is not None:
            self._safe_check(
                report,
                "black_vertex_agreement",
                lambda: (orientations_agree(black_vertex_orientation(s), oriented, s), None),
                label,
            )

        report.genus[label] = genus
        return result

    def certify_family(self, report: RunReport, family: ParallelFamily) -> None:
        """Decomposition flags, family flags, then every member surface."""
        decomposition = verify_decomposition(family.decomposition)
        self.record(report, "edge_disjoint", decomposition.edge_disjoint, subject=f"K_{family.n}")
        self.record(report, "complete", decomposition.complete, subject=f"K_{family.n}")

        for name, flag in family.certificate.to_dict().items():
            if flag is None:
                continue
            self.record(report, name, flag, subject=f"family[n={family.n}]")

        if family.components:
            self._certify_components(report, family)
            return
        for s in family.surfaces:
            self.certify_surface(report, s)

    def _certify_components(self, report: RunReport, family: ParallelFamily) -> None:
        for s, components in zip(family.surfaces, family.components):
            label = surface_label(s)
            closed = all(c.report.is_closed_surface for c in components)
            orientable = all(c.orientable for c in components)
            details = {
                "component_count": len(components),
                "genera": [c.genus for c in components],
            }
            self.record(report, "components_closed", closed, details, label)
            self.record(report, "components_orientable", orientable, subject=label)
            report.genus[label] = {"components": [c.genus for c in components]}
