"""
OFF mesh export

Vertices of a surface are mapped to their 0/1 coordinate vectors in R^n and
projected to R^3. Faces are written as quads in oriented boundary order.
The output is for external viewers only; a projection may self-intersect.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Union

import numpy as np

from core.cube_complex import CubeCell, coordinate_bit
from core.errors import DomainError
from core.surface import Surface
from core.topology import OrientationAssignment

logger = logging.getLogger(__name__)

PROJECTIONS = ("generic", "axis")


@dataclass(frozen=True)
class MeshFile:
    """
    Polygonal mesh in OFF form.

    Attributes:
        vertices: One (x, y, z) row per vertex
        faces: One index quadruple per face
    """
    vertices: tuple[tuple[float, float, float], ...]
    faces: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self):
        count = len(self.vertices)
        for quad in self.faces:
            if len(quad) != 4 or not all(0 <= idx < count for idx in quad):
                raise DomainError(f"Face {quad} is not a quad over {count} vertices")

    def to_off(self) -> str:
        lines = ["OFF", f"{len(self.vertices)} {len(self.faces)} 0"]
        lines += [" ".join(_format_coordinate(x) for x in row) for row in self.vertices]
        lines += ["4 " + " ".join(str(idx) for idx in quad) for quad in self.faces]
        return "\n".join(lines) + "\n"

    def write(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.write_text(self.to_off())
        logger.info(f"Wrote {len(self.faces)} quads to {path}")
        return path

    @classmethod
    def from_off(cls, text: str) -> "MeshFile":
        """Parse an OFF file written by to_off (quads only)."""
        lines = [line.strip() for line in text.splitlines() if line.strip() and not line.startswith("#")]
        if not lines or lines[0] != "OFF":
            raise DomainError("Missing OFF header")
        try:
            v_count, f_count, _ = (int(x) for x in lines[1].split())
            vertices = tuple(
                tuple(float(x) for x in line.split()) for line in lines[2:2 + v_count]
            )
            faces = []
            for line in lines[2 + v_count:2 + v_count + f_count]:
                size, *indices = (int(x) for x in line.split())
                if size != 4 or len(indices) != 4:
                    raise DomainError(f"Expected a quad, got {line!r}")
                faces.append(tuple(indices))
        except (IndexError, ValueError) as e:
            raise DomainError(f"Malformed OFF data: {e}") from None
        if len(vertices) != v_count or len(faces) != f_count:
            raise DomainError("OFF counts do not match the data")
        if any(len(row) != 3 for row in vertices):
            raise DomainError("OFF vertices must have 3 coordinates")
        return cls(vertices, tuple(faces))


def _format_coordinate(x: float) -> str:
    text = f"{x:.6f}"
    return "0.000000" if text == "-0.000000" else text


def projection_frame(n: int, seed: int, projection: str = "generic") -> np.ndarray:
    """
    n x 3 matrix taking R^n to R^3.

    generic: orthonormal columns from the QR factorization of a seeded
    Gaussian matrix. axis: the first three coordinate axes.
    """
    if projection not in PROJECTIONS:
        raise DomainError(f"Unknown projection {projection!r}; choose from {PROJECTIONS}")
    if n < 3:
        raise DomainError(f"Projection to R^3 needs n >= 3, got n={n}")
    if projection == "axis":
        return np.eye(n, 3)
    rng = np.random.default_rng(seed)
    frame, _ = np.linalg.qr(rng.standard_normal((n, 3)))
    return frame


def _coordinate_vector(v: CubeCell) -> list[float]:
    return [1.0 if v.fixed & coordinate_bit(v.n, i) else 0.0 for i in range(1, v.n + 1)]


def project_surface(
    s: Surface,
    orientation: OrientationAssignment,
    seed: int = 0,
    projection: str = "generic",
) -> MeshFile:
    """
    Mesh of s with vertices in canonical order and one quad per face.

    Raises:
        DomainError: If the orientation does not cover every face of s
    """
    missing = [f for f in s.faces if f not in orientation.signs]
    if missing:
        raise DomainError(f"Orientation has no sign for {len(missing)} faces of {s!r}")

    vertices = s.vertices
    index = {v: k for k, v in enumerate(vertices)}
    points = np.array([_coordinate_vector(v) for v in vertices]) @ projection_frame(s.n, seed, projection)
    faces = tuple(
        tuple(index[v] for v in orientation.traversal(f)) for f in s.faces
    )
    rows = tuple(tuple(float(x) for x in row) for row in points)
    return MeshFile(rows, faces)
