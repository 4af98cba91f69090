"""
Surfaces in the 2-skeleton

A Surface is a set of squares of H_n together with its derived incidence
structure. T(Z) is the surface of all squares bicolored by consecutive
colors of a cycle Z in K_n.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from types import MappingProxyType
from typing import Any, Iterable, Mapping, Optional

import networkx as nx

from core.cube_complex import (
    Bicolor,
    CubeCell,
    cell_boundary,
    parse_cell,
    square_corners,
    squares_with_bicolor,
    validate_dimension,
)
from core.errors import DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ColorCycle:
    """
    A cycle (i_1, ..., i_m) of distinct colors in K_n.

    Stored canonically: rotated so the minimum comes first, then reflected
    so that i_2 < i_m. A cycle and its reversal compare equal.
    """
    seq: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(self.seq)
        if len(seq) < 3:
            raise DomainError(f"A color cycle needs at least 3 colors, got {list(seq)}")
        if len(set(seq)) != len(seq):
            raise DomainError(f"Colors in a cycle must be distinct, got {list(seq)}")
        if any(isinstance(c, bool) or not isinstance(c, int) or c < 1 for c in seq):
            raise DomainError(f"Colors must be integers >= 1, got {list(seq)}")
        object.__setattr__(self, "seq", _canonical(seq))

    @classmethod
    def parse(cls, text: str) -> "ColorCycle":
        """
        Parse '1,3,5,2,4' (or '13524' when every color is a single digit).
        """
        text = text.strip()
        try:
            if "," in text:
                colors = [int(part) for part in text.split(",") if part.strip()]
            else:
                colors = [int(ch) for ch in text]
        except ValueError:
            raise DomainError(f"Malformed cycle string: {text!r}") from None
        return cls(tuple(colors))

    @classmethod
    def identity(cls, m: int) -> "ColorCycle":
        """The cycle 1, 2, ..., m."""
        return cls(tuple(range(1, m + 1)))

    @property
    def length(self) -> int:
        return len(self.seq)

    @property
    def edges(self) -> frozenset[Bicolor]:
        """Edges {i_k, i_k+1} of the cycle in K_n."""
        m = len(self.seq)
        return frozenset(Bicolor.of(self.seq[k], self.seq[(k + 1) % m]) for k in range(m))

    def is_hamiltonian(self, n: int) -> bool:
        return sorted(self.seq) == list(range(1, n + 1))

    def successor(self, color: int) -> int:
        """Color following `color` in the stored direction."""
        k = self.seq.index(color)
        return self.seq[(k + 1) % len(self.seq)]

    def to_list(self) -> list[int]:
        return list(self.seq)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.seq)


def _canonical(seq: tuple[int, ...]) -> tuple[int, ...]:
    k = seq.index(min(seq))
    rotated = seq[k:] + seq[:k]
    if rotated[1] > rotated[-1]:
        rotated = (rotated[0],) + tuple(reversed(rotated[1:]))
    return rotated


class Surface:
    """
    A finite set of squares of H_n with cached incidence maps.

    Only faces are stored; edges, vertices and the face-adjacency dual graph
    are derived once at construction and exposed read-only.

    Attributes:
        n: Cube dimension
        faces: Squares in canonical order
        cycle: The color cycle the surface was built from, if any
    """

    def __init__(
        self,
        n: int,
        faces: Iterable[CubeCell],
        cycle: Optional[ColorCycle] = None,
    ):
        self.n = validate_dimension(n)
        face_list = list(faces)
        for f in face_list:
            if f.n != n or f.dim != 2:
                raise DomainError(f"Surface over n={n} cannot hold {f}")
        unique = sorted(set(face_list))
        if len(unique) != len(face_list):
            raise DomainError("Surface faces must be distinct")

        self.faces: tuple[CubeCell, ...] = tuple(unique)
        self.cycle = cycle
        self._face_set = frozenset(unique)

        edge_faces: dict[CubeCell, list[CubeCell]] = {}
        vertex_faces: dict[CubeCell, list[CubeCell]] = {}
        for f in self.faces:
            for e in cell_boundary(f):
                edge_faces.setdefault(e, []).append(f)
            for v in square_corners(f):
                vertex_faces.setdefault(v, []).append(f)

        self._edge_faces = MappingProxyType({e: tuple(fs) for e, fs in sorted(edge_faces.items())})
        self._vertex_faces = MappingProxyType({v: tuple(fs) for v, fs in sorted(vertex_faces.items())})

        dual = nx.Graph()
        dual.add_nodes_from(self.faces)
        for e, fs in self._edge_faces.items():
            for a, b in combinations(fs, 2):
                dual.add_edge(a, b, edge=e)
        self._dual_graph = nx.freeze(dual)

    @property
    def face_set(self) -> frozenset[CubeCell]:
        return self._face_set

    @property
    def edge_faces(self) -> Mapping[CubeCell, tuple[CubeCell, ...]]:
        """Edge -> faces of this surface containing it."""
        return self._edge_faces

    @property
    def vertex_faces(self) -> Mapping[CubeCell, tuple[CubeCell, ...]]:
        """Vertex -> faces of this surface having it as a corner."""
        return self._vertex_faces

    @property
    def dual_graph(self) -> nx.Graph:
        """Faces adjacent iff they share an edge (edge stored as `edge`)."""
        return self._dual_graph

    @property
    def edges(self) -> tuple[CubeCell, ...]:
        return tuple(self._edge_faces)

    @property
    def vertices(self) -> tuple[CubeCell, ...]:
        return tuple(self._vertex_faces)

    @property
    def component_count(self) -> int:
        return nx.number_connected_components(self._dual_graph)

    @property
    def is_connected(self) -> bool:
        return self.component_count == 1

    def covers_qn(self) -> bool:
        """True if every vertex and edge of Q_n lies on this surface."""
        return (
            len(self._vertex_faces) == 2 ** self.n
            and len(self._edge_faces) == self.n * 2 ** (self.n - 1)
        )

    def __len__(self) -> int:
        return len(self.faces)

    def __contains__(self, face: object) -> bool:
        return face in self._face_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Surface):
            return NotImplemented
        return self.n == other.n and self._face_set == other._face_set

    def __hash__(self) -> int:
        return hash((self.n, self._face_set))

    def __repr__(self) -> str:
        cycle = f", cycle={self.cycle}" if self.cycle else ""
        return f"Surface(n={self.n}, faces={len(self.faces)}{cycle})"

    def to_dict(self) -> dict[str, Any]:
        """JSON form: {n, cycle, faces} with faces in canonical order."""
        return {
            "n": self.n,
            "cycle": self.cycle.to_list() if self.cycle else None,
            "faces": [str(f) for f in self.faces],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Surface":
        """Rebuild a surface from its JSON form."""
        try:
            n = data["n"]
            faces = [parse_cell(text) for text in data["faces"]]
            cycle_data = data.get("cycle")
            cycle = ColorCycle(tuple(cycle_data)) if cycle_data is not None else None
            return cls(n, faces, cycle=cycle)
        except (AttributeError, KeyError, TypeError) as e:
            raise DomainError(f"Malformed surface document: {e}") from None


@dataclass(frozen=True)
class SurfaceIntersection:
    """Faces shared by two surfaces, and whether both contain all of Q_n."""
    shared_faces: frozenset[CubeCell]
    contains_all_of_qn: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "shared_face_count": len(self.shared_faces),
            "shared_faces": [str(f) for f in sorted(self.shared_faces)],
            "contains_all_of_qn": self.contains_all_of_qn,
        }


def _cycle_faces(n: int, cycle: ColorCycle) -> list[CubeCell]:
    faces = []
    for bicolor in sorted(cycle.edges):
        faces.extend(squares_with_bicolor(n, bicolor))
    return faces


def build_surface(n: int, z: ColorCycle) -> Surface:
    """
    T(Z): every square of H_n bicolored {i_k, i_k+1} for a Hamiltonian Z.

    Raises:
        DomainError: If n < 3 or Z does not visit every color 1..n
    """
    validate_dimension(n)
    if n < 3:
        raise DomainError(f"T(Z) needs n >= 3, got n={n}")
    if not z.is_hamiltonian(n):
        raise DomainError(
            f"Cycle {z} is not Hamiltonian on 1..{n}; use build_cycle_surface"
        )
    surface = Surface(n, _cycle_faces(n, z), cycle=z)
    logger.debug(f"Built T({z}) in H_{n}: {len(surface)} faces")
    return surface


def build_cycle_surface(n: int, c: ColorCycle) -> Surface:
    """
    The squares of H_n bicolored by consecutive colors of an m-cycle.

    For m < n the result has 2^(n-m) components, one per setting of the
    coordinates outside the cycle.

    Raises:
        DomainError: If the cycle uses a color above n
    """
    validate_dimension(n)
    if max(c.seq) > n:
        raise DomainError(f"Cycle {c} uses colors outside 1..{n}")
    surface = Surface(n, _cycle_faces(n, c), cycle=c)
    logger.debug(f"Built cycle surface ({c}) in H_{n}: {len(surface)} faces")
    return surface


def surface_intersection(a: Surface, b: Surface) -> SurfaceIntersection:
    """
    Shared faces of two surfaces over the same cube.

    Raises:
        DomainError: If the dimensions differ
    """
    if a.n != b.n:
        raise DomainError(f"Cannot intersect surfaces over n={a.n} and n={b.n}")
    return SurfaceIntersection(
        shared_faces=a.face_set & b.face_set,
        contains_all_of_qn=a.covers_qn() and b.covers_qn(),
    )


def split_components(s: Surface) -> list[Surface]:
    """Connected components of the face-adjacency graph, as surfaces."""
    components = [sorted(c) for c in nx.connected_components(s.dual_graph)]
    components.sort(key=lambda faces: faces[0])
    return [Surface(s.n, faces, cycle=s.cycle) for faces in components]
